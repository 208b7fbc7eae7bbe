#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "gw/complex_engine.hpp"
#include "gw/p3_closed.hpp"
#include "oracles.hpp"

using namespace gw;
using gw::testing::pick;

namespace {

using Entries = std::vector<CodimVector::Entry>;

BigInt complex(int dim, int d, Entries e) {
  ComplexContext ctx;
  return eval_complex(dim, d, CodimVector::from_entries(e), ctx);
}

// Random keys of P^dim meeting the dimension constraint, codims in [2, dim].
std::vector<ComplexKey> sample_keys(std::mt19937& rng, int count, int max_dim, int max_degree) {
  std::vector<ComplexKey> keys;
  while (static_cast<int>(keys.size()) < count) {
    const int dim = pick(rng, 2, max_dim);
    const int d = pick(rng, 1, max_degree);
    const int k = pick(rng, 3, 9);
    CodimVector s;
    for (int i = 0; i < k; ++i) s.add(pick(rng, 2, dim));
    ComplexKey key{dim, d, s};
    if (complex_dimension_gap(key) == 0) keys.push_back(key);
  }
  return keys;
}

}  // namespace

TEST(ComplexEngine, LineThroughTwoPoints) { EXPECT_EQ(complex(3, 1, {{3, 2}}), 1); }

TEST(ComplexEngine, CubicsInP3) {
  EXPECT_EQ(complex(3, 3, {{3, 6}}), 1);
  EXPECT_EQ(complex(3, 3, {{2, 2}, {3, 5}}), 5);
}

TEST(ComplexEngine, ConicsThroughFourPointsVanish) { EXPECT_EQ(complex(3, 2, {{3, 4}}), 0); }

TEST(ComplexEngine, SchubertValuesUsedByRealChecks) {
  EXPECT_EQ(complex(3, 1, {{2, 2}, {3, 1}}), 1);
  EXPECT_EQ(complex(5, 1, {{2, 1}, {4, 1}, {5, 1}}), 1);
  EXPECT_EQ(complex(5, 1, {{3, 1}, {4, 2}}), 1);
}

TEST(ComplexEngine, FundamentalClassKills) {
  EXPECT_EQ(complex(3, 1, {{0, 1}, {3, 2}}), 0);
  EXPECT_EQ(complex(2, 2, {{0, 1}, {2, 5}}), 0);
}

TEST(ComplexEngine, DegreeZeroThreePoint) {
  EXPECT_EQ(complex(3, 0, {{0, 1}, {1, 1}, {2, 1}}), 1);
  EXPECT_EQ(complex(3, 0, {{1, 3}}), 1);  // H^3 is the point class
  EXPECT_EQ(complex(3, 0, {{1, 2}, {2, 1}}), 0);  // dimension
  EXPECT_EQ(complex(3, 0, {{1, 1}, {2, 1}}), 0);  // unstable
  EXPECT_EQ(complex(4, 0, {{1, 4}}), 0);  // k = 4 in degree 0
}

TEST(ComplexEngine, OverflowAndDimension) {
  EXPECT_EQ(complex(3, 1, {{4, 1}, {3, 1}}), 0);
  EXPECT_EQ(complex(3, 1, {{3, 3}}), 0);
  EXPECT_EQ(complex(3, 1, {{3, 1}}), 0);
  EXPECT_EQ(complex(3, 1, {}), 0);
}

TEST(ComplexEngine, RejectsInvalidDimension) {
  ComplexContext ctx;
  EXPECT_THROW(eval_complex(ComplexKey{0, 1, {}}, ctx), std::domain_error);
  EXPECT_THROW(eval_complex(0, 1, {}, ctx), std::domain_error);
}

TEST(ComplexEngine, DegreeOneMatchesSchubertCalculus) {
  ComplexContext ctx;
  int nonzero = 0;
  for (int dim = 2; dim <= 6; ++dim) {
    // every multiset of codims in [1, dim] with sum (c - 1) = 2 dim - 2, up to 2 divisors
    std::vector<std::vector<int>> lists{{}};
    for (int c = dim; c >= 1; --c) {
      std::vector<std::vector<int>> next;
      for (const auto& l : lists) {
        int budget = 2 * dim - 2;
        for (int x : l) budget -= x - 1;
        const int maxm = c == 1 ? 2 : budget / (c - 1);
        for (int m = 0; m <= maxm; ++m) {
          auto w = l;
          w.insert(w.end(), static_cast<std::size_t>(m), c);
          next.push_back(std::move(w));
        }
      }
      lists = std::move(next);
    }
    for (const auto& l : lists) {
      int excess = 0;
      for (int x : l) excess += x - 1;
      if (excess != 2 * dim - 2) continue;
      const auto expected = gw::testing::schubert_line_count(dim, l);
      const BigInt got = eval_complex(dim, 1, CodimVector::from_list(l), ctx);
      EXPECT_EQ(got, BigInt(expected)) << "P" << dim << " " << to_string(CodimVector::from_list(l));
      nonzero += expected != 0;
    }
  }
  EXPECT_GT(nonzero, 50);
}

TEST(ComplexEngine, PlaneCurvesMatchKontsevich) {
  const auto oracle = gw::testing::kontsevich_p2(7);
  ASSERT_EQ(oracle[4], 620);
  ComplexContext ctx;
  for (int d = 1; d <= 7; ++d) {
    EXPECT_EQ(eval_complex(2, d, CodimVector::from_entries(Entries{{2, 3 * d - 1}}), ctx), BigInt(oracle[d])) << d;
  }
}

TEST(ComplexEngine, P3SeriesMatchesClosedRecursion) {
  const P3ComplexSeries series = complex_series_p3(6);
  ComplexContext ctx;
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(eval_complex(3, d, CodimVector::from_entries(Entries{{3, 2 * d}}), ctx), series.points[d]) << d;
    EXPECT_EQ(eval_complex(3, d, CodimVector::from_entries(Entries{{2, 2}, {3, 2 * d - 1}}), ctx), series.two_lines[d])
        << d;
  }
}

TEST(ComplexEngine, PivotIndependence) {
  std::mt19937 rng(2024);
  const auto keys = sample_keys(rng, 30, 5, 3);
  ComplexContext canonical;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ComplexContext randomized(ComplexOptions{gw::testing::random_complex_pivot(1000 + static_cast<std::uint32_t>(i)), true});
    EXPECT_EQ(eval_complex(keys[i], randomized), eval_complex(keys[i], canonical))
        << "P" << keys[i].dim << " d=" << keys[i].degree << " " << to_string(keys[i].insertions);
  }
}

TEST(ComplexEngine, DivisorRelationWithoutShortcut) {
  std::mt19937 rng(99);
  const auto keys = sample_keys(rng, 25, 5, 3);
  ComplexContext plain;
  ComplexContext no_divisor(ComplexOptions{{}, false});
  for (const auto& key : keys) {
    const BigInt base = eval_complex(key, plain);
    EXPECT_EQ(eval_complex(key.dim, key.degree, key.insertions.with(1), no_divisor), key.degree * base);
    EXPECT_EQ(eval_complex(key.dim, key.degree, key.insertions.with({1, 1}), no_divisor),
              key.degree * key.degree * base);
  }
}

TEST(ComplexEngine, TermsOfTableShapeAreNonNegative) {
  ComplexContext ctx;
  for (int d = 1; d <= 6; ++d) {
    for (int a = 0; a <= 4 * d; ++a) {
      // 2a + 3b = 4d + k with k = a + b  =>  a + 2b = 4d
      const int twice_b = 4 * d - a;
      if (twice_b < 0 || twice_b % 2) continue;
      const BigInt v = eval_complex(3, d, CodimVector::from_entries(Entries{{2, a}, {3, twice_b / 2}}), ctx);
      EXPECT_GE(v, 0) << d << " " << a;
    }
  }
}

TEST(ComplexEngine, MemoRecordsAndHits) {
  ComplexContext ctx;
  eval_complex(3, 4, CodimVector::from_entries(Entries{{3, 8}}), ctx);
  const auto size = ctx.memo().size();
  EXPECT_GT(size, 0u);
  EXPECT_GT(ctx.stats().evaluated.load(), 0u);
  eval_complex(3, 4, CodimVector::from_entries(Entries{{3, 8}}), ctx);
  EXPECT_EQ(ctx.memo().size(), size);
  EXPECT_GT(ctx.stats().cache_hits.load(), 0u);
}

TEST(ComplexEngine, ConcurrentEvaluationSharesMemo) {
  ComplexContext shared;
  std::vector<BigInt> results(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      const int d = 3 + t % 4;
      results[t] = eval_complex(3, d, CodimVector::from_entries(Entries{{2, 2}, {3, 2 * d - 1}}), shared);
    });
  }
  for (auto& th : threads) th.join();
  const P3ComplexSeries series = complex_series_p3(6);
  for (int t = 0; t < 8; ++t) EXPECT_EQ(results[t], series.two_lines[3 + t % 4]);
}

TEST(ComplexEngine, RejectsInadmissiblePivotRule) {
  ComplexContext bad(ComplexOptions{[](const CodimVector&) { return ComplexPivot{3, 3, 2}; }, true});
  EXPECT_THROW(eval_complex(3, 1, CodimVector::from_entries(Entries{{2, 2}, {3, 1}}), bad), std::logic_error);
}
