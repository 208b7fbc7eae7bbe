#pragma once

// Genus-0 real invariants <c_1,...,c_k>_d^phi of P^(2n-1) with conjugate pairs
// of linear-subspace constraints, normalized by <2n-1>_1^phi = +1. With that
// normalization the tau and eta counts coincide, so phi is carried on keys
// for reporting only.
//
// For k >= 2 and odd insertions, with c_1, c_2 any two designated slots and
// R the remaining insertions,
//
//   <c_1, c_2, R>_d = d <c_1 + c_2 - 1, R>_d
//     + sum_{2 d1 + d2 = d} sum_{I+J=R} 2^{|I|} sum_{2i + j = 2n-1}
//         d2 <c_1 - 1, c_2, I, 2i>_{d1}^C <J, j>_{d2}
//       - d1 <c_1 - 1, I, 2i>_{d1}^C <c_2, J, j>_{d2}
//
// where <...>^C are complex invariants of P^(2n-1). Even degree or any even
// insertion gives 0.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gw/complex_engine.hpp"
#include "gw/core.hpp"
#include "gw/memo.hpp"

namespace gw {

/// Memo key for real invariants; phi is deliberately absent.
struct RealMemoKey {
  int n;
  int degree;
  CodimVector insertions;

  friend bool operator==(const RealMemoKey&, const RealMemoKey&) = default;
  friend auto operator<=>(const RealMemoKey&, const RealMemoKey&) = default;
};

struct RealMemoKeyHash {
  std::size_t operator()(const RealMemoKey& k) const {
    return k.insertions.hash() ^ (static_cast<std::size_t>(k.n) * 0x100000001b3ull) ^
           (static_cast<std::size_t>(k.degree) << 20);
  }
};

/// The two insertions fed to the recursion as c_1 and c_2.
struct RealDesignation {
  int first;
  int second;
};

using RealDesignationRule = std::function<RealDesignation(const CodimVector&)>;

/// The two largest codimensions, larger one first.
inline RealDesignation canonical_real_designation(const CodimVector& s) {
  const int first = s.max();
  return {first, s.without(first).max()};
}

struct RealOptions {
  RealDesignationRule designation;  // empty: canonical
  bool divisor_shortcut = true;     // strip codim-1 insertions before recursing
};

class RealContext {
 public:
  RealContext() : complex_(std::make_shared<ComplexContext>()) {}
  explicit RealContext(std::shared_ptr<ComplexContext> complex, RealOptions options = {})
      : complex_(std::move(complex)), options_(std::move(options)) {
    if (!complex_) throw std::invalid_argument("RealContext needs a complex context");
  }

  RealContext(const RealContext&) = delete;
  RealContext& operator=(const RealContext&) = delete;

  ComplexContext& complex() { return *complex_; }
  const std::shared_ptr<ComplexContext>& complex_handle() const { return complex_; }

  ConcurrentMemo<RealMemoKey, BigInt, RealMemoKeyHash>& memo() { return memo_; }
  const ConcurrentMemo<RealMemoKey, BigInt, RealMemoKeyHash>& memo() const { return memo_; }
  EvalStats& stats() { return stats_; }
  const EvalStats& stats() const { return stats_; }
  const RealOptions& options() const { return options_; }

  RealDesignation designate(const CodimVector& s) const {
    return options_.designation ? options_.designation(s) : canonical_real_designation(s);
  }

 private:
  std::shared_ptr<ComplexContext> complex_;
  RealOptions options_;
  ConcurrentMemo<RealMemoKey, BigInt, RealMemoKeyHash> memo_;
  EvalStats stats_;
};

namespace detail {

inline BigInt real_value(int n, int d, const CodimVector& s, RealContext& ctx, std::size_t depth);

inline BigInt real_recursion_step(int n, int d, const CodimVector& s, RealContext& ctx, std::size_t depth) {
  const int target = 2 * n - 1;
  const RealDesignation des = ctx.designate(s);
  CodimVector rest = s;
  if (!rest.remove_one(des.first) || !rest.remove_one(des.second)) {
    throw std::logic_error("real designation rule chose codimensions not present in the key");
  }
  const int c1 = des.first;
  const int c2 = des.second;
  const std::size_t next = depth + 1;
  ComplexContext& cx = ctx.complex();

  BigInt total = d * real_value(n, d, rest.with(c1 + c2 - 1), ctx, next);

  for (int d1 = 1; 2 * d1 < d; ++d1) {
    const int d2 = d - 2 * d1;
    for_each_split(rest, 2, [&](const Split& sp) {
      BigInt inner = 0;
      for (int i = 1; 2 * i < target; ++i) {
        const int j = target - 2 * i;
        BigInt first = complex_value(target, d1, sp.left.with({c1 - 1, c2, 2 * i}), cx, next);
        if (first != 0) first *= d2 * real_value(n, d2, sp.right.with(j), ctx, next);
        BigInt second = complex_value(target, d1, sp.left.with({c1 - 1, 2 * i}), cx, next);
        if (second != 0) second *= d1 * real_value(n, d2, sp.right.with({c2, j}), ctx, next);
        inner += first - second;
      }
      total += sp.weight * inner;
    });
  }
  return total;
}

inline BigInt real_value(int n, int d, const CodimVector& s, RealContext& ctx, std::size_t depth) {
  ctx.stats().note_depth(depth);
  const int target = 2 * n - 1;
  // parity vanishing
  if (d % 2 == 0) return 0;
  for (auto [c, m] : s.entries()) {
    if (c % 2 == 0) return 0;
  }
  // codim overflow
  if (!s.empty() && s.max() > target) return 0;
  // dimension
  const int k = s.count();
  if (static_cast<long>(n) * (d + 1) - 2 + k != s.total_codim()) return 0;
  // divisor
  if (ctx.options().divisor_shortcut && k >= 2 && s.contains(1)) {
    return d * real_value(n, d, s.without(1), ctx, depth + 1);
  }
  // one conjugate pair: the real line through a non-real point
  if (k == 1) return (d == 1 && s.max() == target) ? 1 : 0;
  if (k == 0) return 0;

  RealMemoKey key{n, d, s};
  if (auto hit = ctx.memo().find(key)) {
    ++ctx.stats().cache_hits;
    return *hit;
  }
  BigInt value = real_recursion_step(n, d, s, ctx, depth);
  ++ctx.stats().evaluated;
  ctx.memo().insert(key, value);
  return value;
}

}  // namespace detail

inline void validate_real_key(const RealKey& key) {
  if (key.n < 2) throw std::domain_error("real key: n must be >= 2 (target P^(2n-1))");
  if (key.degree < 1) throw std::domain_error("real key: degree must be >= 1");
  if (!key.insertions.empty() && key.insertions.min() < 1) {
    throw std::domain_error("real key: codimensions must be >= 1");
  }
}

inline BigInt eval_real(const RealKey& key, RealContext& ctx) {
  validate_real_key(key);
  return detail::real_value(key.n, key.degree, key.insertions, ctx, 0);
}

inline BigInt eval_real(int n, int degree, const CodimVector& insertions, RealContext& ctx) {
  return eval_real(RealKey::make(n, degree, insertions), ctx);
}

/// LHS - RHS of the exchange identity
///
///   <c_1, c_2 + 2c, R>_d - <c_1 + 2c, c_2, R>_d
///     = sum_{2 d1 + d2 = d} sum_{I+J=R} 2^{|I|} sum_{2i + j = 2n-1}
///         <2c, c_1, I, 2i>_{d1}^C <c_2, J, j>_{d2} - <2c, c_2, I, 2i>_{d1}^C <c_1, J, j>_{d2}
///
/// for odd c_1, ..., c_k (k >= 2) and any positive c. Each term is evaluated
/// on its own, so a zero residual cross-checks both engines.
inline BigInt theorem12_residual(int n, int d, int c, std::span<const int> codims, RealContext& ctx) {
  if (codims.size() < 2) throw std::domain_error("exchange identity needs at least two insertions");
  if (c < 1) throw std::domain_error("exchange identity: shift c must be >= 1");
  for (int ci : codims) {
    if (ci < 1 || ci % 2 == 0) throw std::domain_error("exchange identity: insertions must be odd and positive");
  }
  const int c1 = codims[0];
  const int c2 = codims[1];
  const CodimVector rest = CodimVector::from_list(codims.subspan(2));
  const int target = 2 * n - 1;

  BigInt lhs = eval_real(n, d, rest.with({c1, c2 + 2 * c}), ctx) - eval_real(n, d, rest.with({c1 + 2 * c, c2}), ctx);

  ComplexContext& cx = ctx.complex();
  BigInt rhs = 0;
  for (int d1 = 1; 2 * d1 < d; ++d1) {
    const int d2 = d - 2 * d1;
    for (const Split& sp : enumerate_splits(rest, 2)) {
      for (int i = 1; 2 * i < target; ++i) {
        const int j = target - 2 * i;
        BigInt term = eval_complex(target, d1, sp.left.with({2 * c, c1, 2 * i}), cx) *
                      eval_real(n, d2, sp.right.with({c2, j}), ctx);
        term -= eval_complex(target, d1, sp.left.with({2 * c, c2, 2 * i}), cx) *
                eval_real(n, d2, sp.right.with({c1, j}), ctx);
        rhs += sp.weight * term;
      }
    }
  }
  return lhs - rhs;
}

}  // namespace gw
