#pragma once

// Validator suites run by `gw check` and the acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gw/check_report.hpp"
#include "gw/complex_engine.hpp"
#include "gw/core.hpp"
#include "gw/p3_closed.hpp"
#include "gw/real_engine.hpp"
#include "gw/tables.hpp"

namespace gw {

namespace detail {

// Multisets of odd codimensions in [3, max_codim] with sum (c - 1) = budget.
inline void odd_multisets(int max_codim, int budget, CodimVector& current, std::vector<CodimVector>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  const int lowest_allowed = current.empty() ? 3 : current.max();
  for (int c = lowest_allowed; c <= max_codim; c += 2) {
    if (c - 1 > budget) break;
    current.add(c);
    odd_multisets(max_codim, budget - (c - 1), current, out);
    current.remove_one(c);
  }
}

inline std::string key_label(int space, int d, const CodimVector& s) {
  std::string out = "P" + std::to_string(space) + " d=" + std::to_string(d) + " <";
  const auto list = s.to_list();
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? "," : "") + std::to_string(list[i]);
  return out + ">";
}

}  // namespace detail

/// All odd insertion vectors with entries in [1, 2n-1] meeting the real
/// dimension constraint in degree d, with at most `max_ones` codim-1 entries.
inline std::vector<CodimVector> odd_dimensional_vectors(int n, int d, int max_ones) {
  std::vector<CodimVector> base;
  CodimVector current;
  detail::odd_multisets(2 * n - 1, n * (d + 1) - 2, current, base);
  std::vector<CodimVector> out;
  for (const auto& v : base) {
    for (int ones = 0; ones <= max_ones; ++ones) {
      CodimVector w = v;
      w.add(1, ones);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Every odd-degree, odd-insertion invariant is an odd (hence nonzero) integer.
inline CheckReport parity_report(int n, const std::vector<int>& degrees, RealContext& ctx, int max_ones = 2) {
  CheckReport report("parity");
  if (n < 2) {
    report.record("n=" + std::to_string(n), false, "n >= 2", std::to_string(n));
    return report;
  }
  for (int d : degrees) {
    if (d < 1 || d % 2 == 0) {
      report.record("d=" + std::to_string(d), false, "odd positive degree", std::to_string(d));
      continue;
    }
    for (const auto& s : odd_dimensional_vectors(n, d, max_ones)) {
      const BigInt v = eval_real(n, d, s, ctx);
      const std::string label = detail::key_label(2 * n - 1, d, s);
      report.record(label + " odd", mod_nonneg(v, 2) == 1, "odd", to_decimal(v));
      report.record(label + " nonzero", v != 0, "nonzero", to_decimal(v));
    }
  }
  return report;
}

/// Degree-1 real invariants with odd insertions all equal 1.
inline CheckReport degree_one_report(int n, RealContext& ctx, int max_ones = 2) {
  CheckReport report("degree-one");
  for (const auto& s : odd_dimensional_vectors(n, 1, max_ones)) {
    report.expect_equal(detail::key_label(2 * n - 1, 1, s), BigInt(1), eval_real(n, 1, s, ctx));
  }
  return report;
}

struct ExchangeSample {
  int n;
  int d;
  int c;
  std::vector<int> codims;  // codims[0], codims[1] are the exchanged pair
};

/// Tuples (n, d, c, c_1..c_k) with n in {2,3}, d in {1,3,5}, c in {1,2},
/// 2 <= k <= 5, odd entries in [1, 2n-1], whose shifted insertions meet the
/// dimension constraint (so the identity is not trivially 0 = 0).
inline std::vector<ExchangeSample> exchange_identity_samples() {
  std::vector<ExchangeSample> out;
  for (int n : {2, 3}) {
    for (int d : {1, 3, 5}) {
      for (int c : {1, 2}) {
        const int top = 2 * n - 1;
        for (int k = 2; k <= 5; ++k) {
          const long needed = static_cast<long>(n) * (d + 1) - 2 + k - 2 * c;  // sum of the c_i
          for (int c1 = 1; c1 <= top; c1 += 2) {
            for (int c2 = 1; c2 <= top; c2 += 2) {
              // remaining k-2 entries as a non-decreasing sequence
              std::vector<int> rest(static_cast<std::size_t>(k - 2), 1);
              while (true) {
                long sum = c1 + c2;
                for (int r : rest) sum += r;
                if (sum == needed) {
                  std::vector<int> codims{c1, c2};
                  codims.insert(codims.end(), rest.begin(), rest.end());
                  out.push_back({n, d, c, std::move(codims)});
                }
                // next non-decreasing tuple
                int i = static_cast<int>(rest.size()) - 1;
                while (i >= 0 && rest[static_cast<std::size_t>(i)] == top) --i;
                if (i < 0) break;
                const int v = rest[static_cast<std::size_t>(i)] + 2;
                for (std::size_t j = static_cast<std::size_t>(i); j < rest.size(); ++j) rest[j] = v;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

inline CheckReport exchange_identity_report(const std::vector<ExchangeSample>& samples, RealContext& ctx) {
  CheckReport report("wdvv-identity");
  for (const auto& s : samples) {
    std::string label = "n=" + std::to_string(s.n) + " d=" + std::to_string(s.d) + " c=" + std::to_string(s.c) + " (";
    for (std::size_t i = 0; i < s.codims.size(); ++i) label += (i ? "," : "") + std::to_string(s.codims[i]);
    label += ")";
    report.expect_equal(label, BigInt(0), theorem12_residual(s.n, s.d, s.c, s.codims, ctx));
  }
  return report;
}

/// Equalities forced by the fact that low-degree curves span small real
/// projective subspaces. Absolute values where only those are determined.
inline CheckReport cross_dim_report(RealContext& ctx) {
  CheckReport report("cross-dim");
  using E = std::vector<CodimVector::Entry>;
  auto real = [&](int n, int d, E e) { return eval_real(n, d, CodimVector::from_entries(e), ctx); };
  auto abs = [](BigInt v) { return v < 0 ? BigInt(-v) : v; };

  const BigInt n3r = real_series_p3(3)[3];
  report.expect_equal("|<5^2 3^1>_3^P5| = N_3^R", n3r, abs(real(3, 3, E{{5, 2}, {3, 1}})));
  report.expect_equal("|<7^2 5^0 3^1>_3^P7| = N_3^R", n3r, abs(real(4, 3, E{{7, 2}, {3, 1}})));
  report.expect_equal("N_3^R = 1", BigInt(1), n3r);
  report.expect_equal("<7^3 5^1 3^0>_5 = <5^4 3^0>_5", real(3, 5, E{{5, 4}}), real(4, 5, E{{7, 3}, {5, 1}}));
  report.expect_equal("<5^4 3^0>_5 = 1", BigInt(1), real(3, 5, E{{5, 4}}));
  report.expect_equal("<7^3 5^0 3^2>_5 = <5^3 3^2>_5", real(3, 5, E{{5, 3}, {3, 2}}), real(4, 5, E{{7, 3}, {3, 2}}));
  report.expect_equal("<5^3 3^2>_5 = 1", BigInt(1), real(3, 5, E{{5, 3}, {3, 2}}));
  report.expect_equal("N_1^R = 1", BigInt(1), p3_point_count(1, ctx));
  report.expect_equal("<5^1 3^0>_1 = 1", BigInt(1), real(3, 1, E{{5, 1}}));
  report.expect_equal("<7^1 5^0 3^0>_1 = 1", BigInt(1), real(4, 1, E{{7, 1}}));
  return report;
}

/// Adding a hyperplane insertion multiplies by the degree. The left side is
/// computed with the divisor shortcut disabled, so the recursions themselves
/// must reproduce the relation.
inline CheckReport divisor_report(std::uint32_t seed, int samples_per_engine) {
  CheckReport report("divisor");
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); };

  ComplexContext plain;
  ComplexContext no_divisor(ComplexOptions{{}, false});
  int found = 0;
  for (int attempt = 0; found < samples_per_engine && attempt < 100000; ++attempt) {
    const int dim = pick(2, 5);
    const int d = pick(1, 3);
    const int k = pick(2, 6);
    CodimVector s;
    for (int i = 0; i < k; ++i) s.add(pick(2, dim));
    if (complex_dimension_gap(ComplexKey{dim, d, s}) != 0) continue;
    ++found;
    const int ones = pick(1, 2);
    const BigInt lhs = eval_complex(dim, d, s.with(1).merged(ones == 2 ? CodimVector{1} : CodimVector{}), no_divisor);
    const BigInt rhs = (ones == 2 ? BigInt(d * d) : BigInt(d)) * eval_complex(dim, d, s, plain);
    report.expect_equal("complex " + detail::key_label(dim, d, s) + " +" + std::to_string(ones) + "H", rhs, lhs);
  }

  auto complex_share = std::make_shared<ComplexContext>();
  RealContext real_plain(complex_share);
  RealContext real_no_divisor(complex_share, RealOptions{{}, false});
  found = 0;
  for (int attempt = 0; found < samples_per_engine && attempt < 100000; ++attempt) {
    const int n = pick(2, 3);
    const int d = 2 * pick(0, 2) + 1;
    const int k = pick(1, 5);
    CodimVector s;
    for (int i = 0; i < k; ++i) s.add(2 * pick(1, n - 1) + 1);
    if (real_dimension_gap(RealKey{n, Involution::tau, d, s}) != 0) continue;
    ++found;
    const BigInt lhs = eval_real(n, d, s.with(1), real_no_divisor);
    const BigInt rhs = d * eval_real(n, d, s, real_plain);
    report.expect_equal("real " + detail::key_label(2 * n - 1, d, s) + " +H", rhs, lhs);
  }
  return report;
}

}  // namespace gw
