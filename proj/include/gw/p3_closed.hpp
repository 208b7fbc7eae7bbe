#pragma once

// Closed recursions for P^3: the complex counts through 2d points (N^C) and
// through two lines and 2d-1 points (Ntilde^C), and the signed real count
// N^R through d conjugate pairs of points. These are independent of the
// general engines and serve as their oracle.

#include <stdexcept>
#include <string>
#include <vector>

#include "gw/check_report.hpp"
#include "gw/core.hpp"

namespace gw {

struct P3ComplexSeries {
  int dmax = 0;
  std::vector<BigInt> points;      // N^C_d, index 0 unused
  std::vector<BigInt> two_lines;   // Ntilde^C_d, index 0 unused
};

inline P3ComplexSeries complex_series_p3(int dmax) {
  if (dmax < 1) throw std::domain_error("complex_series_p3: dmax must be >= 1");
  P3ComplexSeries s;
  s.dmax = dmax;
  s.points.assign(dmax + 1, 0);
  s.two_lines.assign(dmax + 1, 0);
  s.points[1] = 1;
  for (int d = 1; d <= dmax; ++d) {
    if (d >= 2) {
      BigInt sum = 0;
      for (int d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        BigInt coeff = d2 * d2 * binomial(2 * d - 3, 2 * d1 - 2) - d1 * d2 * binomial(2 * d - 3, 2 * d1 - 1);
        sum += coeff * s.two_lines[d1] * s.points[d2];
      }
      s.points[d] = sum;
    }
    BigInt sum = d * s.points[d];
    for (int d1 = 1; d1 < d; ++d1) {
      const long d2 = d - d1;
      BigInt coeff = d1 * d2 * d2 * binomial(2 * d - 2, 2 * d1 - 1) - d2 * d2 * d2 * binomial(2 * d - 2, 2 * d1 - 2);
      sum += coeff * s.two_lines[d1] * s.points[d2];
    }
    s.two_lines[d] = sum;
  }
  return s;
}

/// N^R_d for d = 1..dmax (index 0 unused), from
/// N^R_d = sum_{2 d1 + d2 = d} (-4)^{d1-1} d2 binom(d-2, d2-1) Ntilde^C_{d1} N^R_{d2}.
inline std::vector<BigInt> real_series_p3(int dmax) {
  if (dmax < 1) throw std::domain_error("real_series_p3: dmax must be >= 1");
  const P3ComplexSeries cx = complex_series_p3(dmax);
  std::vector<BigInt> r(dmax + 1, 0);
  r[1] = 1;
  for (int d = 2; d <= dmax; ++d) {
    BigInt sum = 0;
    for (int d1 = 1; 2 * d1 < d; ++d1) {
      const int d2 = d - 2 * d1;
      BigInt term = ipow(BigInt(4), static_cast<unsigned>(d1 - 1)) * d2 * binomial(d - 2, d2 - 1);
      if ((d1 - 1) % 2 == 1) term = -term;
      sum += term * cx.two_lines[d1] * r[d2];
    }
    r[d] = sum;
  }
  return r;
}

/// Real and complex point counts agree mod 4 (1 for odd d, 0 for even d);
/// Ntilde^C is 1 mod 4 for odd d and d = 2, 2 for d = 4, 0 otherwise.
inline CheckReport congruence_mod4_report(int dmax) {
  CheckReport report("mod4");
  if (dmax < 1) {
    report.record("dmax", false, ">= 1", std::to_string(dmax));
    return report;
  }
  const P3ComplexSeries cx = complex_series_p3(dmax);
  const std::vector<BigInt> re = real_series_p3(dmax);
  for (int d = 1; d <= dmax; ++d) {
    const int want = d % 2 == 1 ? 1 : 0;
    const int want_tilde = (d % 2 == 1 || d == 2) ? 1 : (d == 4 ? 2 : 0);
    const std::string tag = "d=" + std::to_string(d);
    report.expect_equal(tag + " N^R mod 4", want, mod_nonneg(re[d], 4));
    report.expect_equal(tag + " N^C mod 4", want, mod_nonneg(cx.points[d], 4));
    report.expect_equal(tag + " Ntilde^C mod 4", want_tilde, mod_nonneg(cx.two_lines[d], 4));
  }
  return report;
}

}  // namespace gw
