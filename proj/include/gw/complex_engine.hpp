#pragma once

// Genus-0 Gromov-Witten invariants <H^{c_1},...,H^{c_k}>_d of P^N.
//
// Axioms settle the boundary cases; everything else goes through the
// four-point associativity relation with one hyperplane insertion, solved for
// the term where the divisor merges into the smallest insertion:
//
//   <H^{a+1}, H^c, H^e, S>_d
//     =  d <H^{a+c}, H^e, S>_d + <H^a, H^c, H^{e+1}, S>_d - d <H^a, H^{c+e}, S>_d
//      + sum_{d1+d2=d} sum_{I+J=S} sum_f
//          <H^a, H^c, I, H^f>_{d1} <H^{N-f}, J, H, H^e>_{d2}
//        - <H^a, H, I, H^f>_{d1} <H^{N-f}, J, H^c, H^e>_{d2}
//
// The degree-0 three-point terms of the relation have been evaluated in
// closed form, so every term on the right is smaller: lower degree, fewer
// insertions, or the same count with the donor codimension lowered.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>

#include "gw/core.hpp"
#include "gw/memo.hpp"

namespace gw {

/// Insertion codimensions playing the roles a+1 (donor), c (partner) and
/// e (absorber) in the associativity step.
struct ComplexPivot {
  int donor;
  int partner;
  int absorber;
};

using ComplexPivotRule = std::function<ComplexPivot(const CodimVector&)>;

/// Smallest codimension >= 2 donates, largest of the rest absorbs, next
/// largest is the partner.
inline ComplexPivot canonical_complex_pivot(const CodimVector& s) {
  int donor = -1;
  for (auto [c, m] : s.entries()) {
    if (c >= 2) {
      donor = c;
      break;
    }
  }
  if (donor < 0) throw std::logic_error("complex pivot: no insertion of codimension >= 2");
  CodimVector rest = s.without(donor);
  const int absorber = rest.max();
  rest.remove_one(absorber);
  return {donor, rest.max(), absorber};
}

struct ComplexOptions {
  ComplexPivotRule pivot;         // empty: canonical
  bool divisor_shortcut = true;   // strip codim-1 insertions before recursing
};

class ComplexContext {
 public:
  ComplexContext() = default;
  explicit ComplexContext(ComplexOptions options) : options_(std::move(options)) {}

  ComplexContext(const ComplexContext&) = delete;
  ComplexContext& operator=(const ComplexContext&) = delete;

  ConcurrentMemo<ComplexKey, BigInt, ComplexKeyHash>& memo() { return memo_; }
  const ConcurrentMemo<ComplexKey, BigInt, ComplexKeyHash>& memo() const { return memo_; }
  EvalStats& stats() { return stats_; }
  const EvalStats& stats() const { return stats_; }

  const ComplexOptions& options() const { return options_; }

  ComplexPivot pivot(const CodimVector& s) const {
    return options_.pivot ? options_.pivot(s) : canonical_complex_pivot(s);
  }

 private:
  ConcurrentMemo<ComplexKey, BigInt, ComplexKeyHash> memo_;
  EvalStats stats_;
  ComplexOptions options_;
};

namespace detail {

inline BigInt complex_value(int dim, int d, const CodimVector& s, ComplexContext& ctx, std::size_t depth);

inline BigInt complex_wdvv_step(int dim, int d, const CodimVector& s, ComplexContext& ctx, std::size_t depth) {
  const ComplexPivot p = ctx.pivot(s);
  CodimVector rest = s;
  if (!rest.remove_one(p.donor) || !rest.remove_one(p.partner) || !rest.remove_one(p.absorber)) {
    throw std::logic_error("complex pivot rule chose codimensions not present in the key");
  }
  if (p.donor < 2 || p.absorber < p.donor) {
    throw std::logic_error("complex pivot rule must pick a donor >= 2 and an absorber >= donor");
  }
  const int a = p.donor - 1;
  const int c = p.partner;
  const int e = p.absorber;
  const std::size_t next = depth + 1;

  BigInt total = d * complex_value(dim, d, rest.with({a + c, e}), ctx, next);
  total += complex_value(dim, d, rest.with({a, c, e + 1}), ctx, next);
  total -= d * complex_value(dim, d, rest.with({a, c + e}), ctx, next);

  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for_each_split(rest, 1, [&](const Split& sp) {
      BigInt inner = 0;
      for (int f = 0; f <= dim; ++f) {
        BigInt left = complex_value(dim, d1, sp.left.with({a, c, f}), ctx, next);
        if (left != 0) left *= complex_value(dim, d2, sp.right.with({dim - f, 1, e}), ctx, next);
        BigInt right = complex_value(dim, d1, sp.left.with({a, 1, f}), ctx, next);
        if (right != 0) right *= complex_value(dim, d2, sp.right.with({dim - f, c, e}), ctx, next);
        inner += left - right;
      }
      total += sp.weight * inner;
    });
  }
  return total;
}

inline BigInt complex_value(int dim, int d, const CodimVector& s, ComplexContext& ctx, std::size_t depth) {
  ctx.stats().note_depth(depth);
  const int k = s.count();
  // codim overflow
  if (!s.empty() && s.max() > dim) return 0;
  // dimension
  if ((dim + 1L) * d + dim - 3 + k != s.total_codim()) return 0;
  // degree 0: only the three-point pairing survives
  if (d == 0) return (k == 3 && s.total_codim() == dim) ? 1 : 0;
  // fundamental class
  if (s.contains(0)) return 0;
  // divisor
  if (ctx.options().divisor_shortcut && s.contains(1)) return d * complex_value(dim, d, s.without(1), ctx, depth + 1);
  // with the dimension constraint only the line through two points survives
  if (k <= 2) return (d == 1 && k == 2 && s.multiplicity(dim) == 2) ? 1 : 0;

  ComplexKey key{dim, d, s};
  if (auto hit = ctx.memo().find(key)) {
    ++ctx.stats().cache_hits;
    return *hit;
  }
  BigInt value = complex_wdvv_step(dim, d, s, ctx, depth);
  ++ctx.stats().evaluated;
  ctx.memo().insert(key, value);
  return value;
}

}  // namespace detail

inline BigInt eval_complex(const ComplexKey& key, ComplexContext& ctx) {
  if (key.dim < 1) throw std::domain_error("complex key: projective dimension must be >= 1");
  if (key.degree < 0) throw std::domain_error("complex key: degree must be >= 0");
  return detail::complex_value(key.dim, key.degree, key.insertions, ctx, 0);
}

inline BigInt eval_complex(int dim, int degree, const CodimVector& insertions, ComplexContext& ctx) {
  return eval_complex(ComplexKey::make(dim, degree, insertions), ctx);
}

}  // namespace gw
