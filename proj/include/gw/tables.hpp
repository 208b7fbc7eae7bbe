#pragma once

// Row generators for the standard tables: the signed real point counts in
// P^3 and the real counts in P^5 and P^7 through conjugate pairs of points,
// planes and 4-planes.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gw/core.hpp"
#include "gw/p3_closed.hpp"
#include "gw/real_engine.hpp"

namespace gw {

/// (-1)^((d-1)/2) <3,...,3>_d (d insertions) in P^3, zero for even d.
inline BigInt p3_point_count(int d, RealContext& ctx) {
  BigInt v = eval_real(2, d, CodimVector::from_entries(std::vector<CodimVector::Entry>{{3, d}}), ctx);
  if (d % 2 == 1 && ((d - 1) / 2) % 2 == 1) v = -v;
  return v;
}

enum class Table1Engine { closed, general, both };

struct Table1Row {
  int d;
  std::optional<BigInt> closed;
  std::optional<BigInt> general;

  BigInt value() const { return closed ? *closed : *general; }
  bool agree() const { return !(closed && general) || *closed == *general; }
};

/// Odd degrees 1, 3, ..., dmax.
inline std::vector<Table1Row> table1_rows(int dmax, Table1Engine engine, RealContext& ctx) {
  if (dmax < 1) throw std::domain_error("table1: dmax must be >= 1");
  std::vector<BigInt> closed;
  if (engine != Table1Engine::general) closed = real_series_p3(dmax);
  std::vector<Table1Row> rows;
  for (int d = 1; d <= dmax; d += 2) {
    Table1Row row{d, std::nullopt, std::nullopt};
    if (engine != Table1Engine::general) row.closed = closed[d];
    if (engine != Table1Engine::closed) row.general = p3_point_count(d, ctx);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Insertion pattern of one row: multiplicity of each odd codimension,
/// listed from the largest codimension (2n-1) down to 3.
struct Table2Row {
  int d;
  std::vector<int> exponents;  // exponents[0] is the multiplicity of 2n-1
  BigInt value;

  /// "5^2 3^1" style label.
  std::string signature(int n) const {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(2 * n - 1 - 2 * static_cast<int>(i)) + "^" + std::to_string(exponents[i]);
    }
    return s;
  }

  CodimVector insertions(int n) const {
    CodimVector v;
    for (std::size_t i = 0; i < exponents.size(); ++i) v.add(2 * n - 1 - 2 * static_cast<int>(i), exponents[i]);
    return v;
  }
};

namespace detail {

// Fill exponents for codims 2n-1, 2n-3, ..., 3 so that sum m_c (c - 1) = budget,
// larger codimensions taking the most first.
inline void table2_patterns(int n, std::size_t slot, int budget, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
  const int codim = 2 * n - 1 - 2 * static_cast<int>(slot);
  const int step = codim - 1;
  if (codim == 3) {
    if (budget % step == 0) {
      current.push_back(budget / step);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int m = budget / step; m >= 0; --m) {
    current.push_back(m);
    table2_patterns(n, slot + 1, budget - m * step, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Every insertion pattern of odd codimensions in [3, 2n-1] meeting the
/// dimension constraint in degree d, ordered as in the printed tables.
inline std::vector<std::vector<int>> table2_patterns(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  detail::table2_patterns(n, 0, n * (d + 1) - 2, current, out);
  return out;
}

/// P^5 (n = 3) uses odd d <= 9, P^7 (n = 4) odd d <= 5.
inline int table2_max_degree(int n) {
  switch (n) {
    case 3: return 9;
    case 4: return 5;
    default: throw std::domain_error("table2: only P^5 (n=3) and P^7 (n=4) are tabulated");
  }
}

inline std::vector<Table2Row> table2_rows(int n, RealContext& ctx) {
  const int dmax = table2_max_degree(n);
  std::vector<Table2Row> rows;
  for (int d = 1; d <= dmax; d += 2) {
    for (auto& pattern : table2_patterns(n, d)) {
      Table2Row row{d, std::move(pattern), 0};
      row.value = eval_real(n, d, row.insertions(n), ctx);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace gw
