#pragma once

// Exact integers, canonical insertion multisets and invariant keys shared by
// the complex and real engines.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gw {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Throws std::invalid_argument (via boost) on malformed input.
inline BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return BigInt(text);
}

/// Binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

/// Remainder in [0, m) regardless of the sign of v.
inline int mod_nonneg(const BigInt& v, int m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<int>();
}

/// Multiset of insertion codimensions, stored as ascending (codim, multiplicity)
/// pairs with no zero multiplicities. Two insertion lists that are
/// permutations of each other produce equal vectors.
class CodimVector {
 public:
  using Entry = std::pair<int, int>;  // codim, multiplicity

  CodimVector() = default;
  CodimVector(std::initializer_list<int> codims) {
    for (int c : codims) add(c);
  }

  static CodimVector from_list(std::span<const int> codims) {
    CodimVector v;
    for (int c : codims) v.add(c);
    return v;
  }

  static CodimVector from_entries(std::span<const Entry> entries) {
    CodimVector v;
    for (auto [c, m] : entries) v.add(c, m);
    return v;
  }

  void add(int codim, int mult = 1) {
    if (mult <= 0) return;
    auto it = lower(codim);
    if (it != entries_.end() && it->first == codim) {
      it->second += mult;
    } else {
      entries_.insert(it, {codim, mult});
    }
  }

  /// Removes one copy of `codim`; returns false when absent.
  bool remove_one(int codim) {
    auto it = lower(codim);
    if (it == entries_.end() || it->first != codim) return false;
    if (--it->second == 0) entries_.erase(it);
    return true;
  }

  CodimVector with(int codim) const {
    CodimVector r = *this;
    r.add(codim);
    return r;
  }

  CodimVector with(std::initializer_list<int> codims) const {
    CodimVector r = *this;
    for (int c : codims) r.add(c);
    return r;
  }

  CodimVector without(int codim) const {
    CodimVector r = *this;
    if (!r.remove_one(codim)) throw std::logic_error("CodimVector::without: codim not present");
    return r;
  }

  CodimVector merged(const CodimVector& other) const {
    CodimVector r = *this;
    for (auto [c, m] : other.entries_) r.add(c, m);
    return r;
  }

  int multiplicity(int codim) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), codim,
                               [](const Entry& e, int c) { return e.first < c; });
    return (it != entries_.end() && it->first == codim) ? it->second : 0;
  }
  bool contains(int codim) const { return multiplicity(codim) > 0; }

  int count() const {
    int k = 0;
    for (auto [c, m] : entries_) k += m;
    return k;
  }
  long total_codim() const {
    long s = 0;
    for (auto [c, m] : entries_) s += static_cast<long>(c) * m;
    return s;
  }
  bool empty() const { return entries_.empty(); }
  int min() const { return entries_.front().first; }
  int max() const { return entries_.back().first; }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Ascending list with repetitions spelled out, e.g. {3:2, 5:1} -> 3,3,5.
  std::vector<int> to_list() const {
    std::vector<int> out;
    for (auto [c, m] : entries_) out.insert(out.end(), static_cast<std::size_t>(m), c);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto [c, m] : entries_) {
      h ^= std::hash<long long>{}((static_cast<long long>(c) << 32) ^ m) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }

  friend bool operator==(const CodimVector&, const CodimVector&) = default;
  friend auto operator<=>(const CodimVector& a, const CodimVector& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<Entry>::iterator lower(int codim) {
    return std::lower_bound(entries_.begin(), entries_.end(), codim,
                            [](const Entry& e, int c) { return e.first < c; });
  }

  std::vector<Entry> entries_;
};

inline CodimVector normalize_insertions(std::span<const int> codims) { return CodimVector::from_list(codims); }

inline std::string to_string(const CodimVector& v) {
  std::string s = "{";
  bool first = true;
  for (auto [c, m] : v.entries()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(c) + ":" + std::to_string(m);
  }
  return s + "}";
}

/// One term of a multiset splitting S = I + J.
struct Split {
  CodimVector left;   // I
  CodimVector right;  // J
  BigInt weight;      // prod_c binom(m_c, i_c) * w^{|I|}
};

/// Calls `fn(const Split&)` for every splitting i_c + j_c = m_c of S. Summing
/// over these with their weights equals summing over labeled subsets I of the
/// insertions with factor w^{|I|}.
template <typename Fn>
void for_each_split(const CodimVector& s, long per_element_weight, Fn&& fn) {
  const auto& entries = s.entries();
  const std::size_t n = entries.size();
  std::vector<int> take(n, 0);
  while (true) {
    Split sp;
    sp.weight = 1;
    int taken = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [c, m] = entries[i];
      sp.left.add(c, take[i]);
      sp.right.add(c, m - take[i]);
      sp.weight *= binomial(m, take[i]);
      taken += take[i];
    }
    sp.weight *= ipow(BigInt(per_element_weight), static_cast<unsigned>(taken));
    fn(static_cast<const Split&>(sp));

    std::size_t i = 0;
    for (; i < n; ++i) {
      if (take[i] < entries[i].second) {
        ++take[i];
        break;
      }
      take[i] = 0;
    }
    if (i == n) return;
  }
}

inline std::vector<Split> enumerate_splits(const CodimVector& s, long per_element_weight) {
  if (per_element_weight < 1) throw std::domain_error("enumerate_splits: per_element_weight must be >= 1");
  std::vector<Split> out;
  for_each_split(s, per_element_weight, [&](const Split& sp) { out.push_back(sp); });
  return out;
}

/// <H^{c_1},...,H^{c_k}>_d on P^dim.
struct ComplexKey {
  int dim = 1;
  int degree = 0;
  CodimVector insertions;

  static ComplexKey make(int dim, int degree, CodimVector insertions) {
    if (dim < 1) throw std::domain_error("complex key: projective dimension must be >= 1");
    if (degree < 0) throw std::domain_error("complex key: degree must be >= 0");
    if (!insertions.empty() && insertions.min() < 0) throw std::domain_error("complex key: negative codimension");
    return ComplexKey{dim, degree, std::move(insertions)};
  }

  friend bool operator==(const ComplexKey&, const ComplexKey&) = default;
  friend auto operator<=>(const ComplexKey&, const ComplexKey&) = default;
};

struct ComplexKeyHash {
  std::size_t operator()(const ComplexKey& k) const {
    return k.insertions.hash() ^ (static_cast<std::size_t>(k.dim) * 0x100000001b3ull) ^
           (static_cast<std::size_t>(k.degree) << 20);
  }
};

/// (N+1)d + N - 3 + k - sum c_i; the invariant vanishes unless this is 0.
inline long complex_dimension_gap(const ComplexKey& key) {
  const long n = key.dim;
  return (n + 1) * key.degree + n - 3 + key.insertions.count() - key.insertions.total_codim();
}

enum class Involution { tau, eta };

inline const char* to_string(Involution phi) { return phi == Involution::tau ? "tau" : "eta"; }

/// <c_1,...,c_k>_d^phi on P^(2n-1).
struct RealKey {
  int n = 2;
  Involution phi = Involution::tau;
  int degree = 1;
  CodimVector insertions;

  static RealKey make(int n, int degree, CodimVector insertions, Involution phi = Involution::tau) {
    if (n < 2) throw std::domain_error("real key: n must be >= 2 (target P^(2n-1))");
    if (degree < 1) throw std::domain_error("real key: degree must be >= 1");
    if (!insertions.empty() && insertions.min() < 1) throw std::domain_error("real key: codimensions must be >= 1");
    return RealKey{n, phi, degree, std::move(insertions)};
  }

  int target_dim() const { return 2 * n - 1; }
};

/// n(d+1) - 2 + k - sum c_i; the invariant vanishes unless this is 0.
inline long real_dimension_gap(const RealKey& key) {
  const long n = key.n;
  return n * (key.degree + 1) - 2 + key.insertions.count() - key.insertions.total_codim();
}

}  // namespace gw
