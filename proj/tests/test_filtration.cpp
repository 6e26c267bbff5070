#include <gtest/gtest.h>

#include "support.hpp"

using namespace hodgerees;
using namespace hodgerees::testing;

namespace {

const Q I = Q::i();

// κ, λ, μ: three distinct lines in C^2, each at level 1.
struct ThreeLines {
  F kappa = line_at({1, 0}, 1), lambda = line_at({0, 1}, 1), mu = line_at({1, 1}, 1);
};

TEST(Filtration, Trivial) {
  const F f = trivial<Q>(3);
  EXPECT_EQ(f.dim_at(0), 3u);
  EXPECT_EQ(f.dim_at(-5), 3u);
  EXPECT_EQ(f.dim_at(1), 0u);
  EXPECT_EQ(graded_dim(f, 0), 3u);
  const F z = trivial<Q>(0);
  EXPECT_EQ(z.dim_at(-1), 0u);
  EXPECT_EQ(z.dim_at(0), 0u);
}

TEST(Filtration, Shift) {
  const F f = dec_shift(trivial<Q>(2), 3);
  EXPECT_EQ(f.dim_at(3), 2u);
  EXPECT_EQ(f.dim_at(4), 0u);
  EXPECT_EQ(f.jumps(), std::vector<int>{3});
  const F g = line_at({1, I}, 2);
  EXPECT_EQ(dec_shift(g, 0), g);
  EXPECT_EQ(dec_shift(trivial<Q>(2), 5).dim_at(5), 2u);
}

TEST(Filtration, FromIncreasing) {
  const S w0 = span(2, {{1, 0}});
  const F w = from_increasing<Q>(2, {{0, w0}, {2, S::full(2)}});
  EXPECT_TRUE(w[-2].is_full());
  EXPECT_EQ(w[-1], w0);
  EXPECT_EQ(w[0], w0);
  EXPECT_TRUE(w[1].is_zero());
  const auto back = to_increasing(w);
  EXPECT_TRUE(back.at(-1).is_zero());
  EXPECT_EQ(back.at(0), w0);
  EXPECT_EQ(back.at(1), w0);
  EXPECT_TRUE(back.at(2).is_full());
  EXPECT_EQ(from_increasing<Q>(2, back), w);
  EXPECT_EQ(from_increasing<Q>(3, {{4, S::full(3)}}), dec_shift(trivial<Q>(3), -4));
}

TEST(Filtration, FromLevelsGapRule) {
  const S l = span(3, {{1, 2, 0}});
  const F f = F::from_levels(3, {{-1, S::full(3)}, {2, l}});
  EXPECT_TRUE(f[-1].is_full());
  EXPECT_TRUE(f[1].is_full());
  EXPECT_EQ(f[2], l);
  EXPECT_TRUE(f[3].is_zero());
}

TEST(DoubleGraded, EqualShiftedLines) {
  const F f = dec_shift(trivial<Q>(1), 1);
  const Dims2 t = double_graded_dims(f, f);
  EXPECT_EQ(t.entries, (std::map<std::array<int, 2>, long>{{{1, 1}, 1}}));
}

TEST(DoubleGraded, ConjugateLines) {
  const Dims2 t = double_graded_dims(line_at({1, I}, 1), line_at({1, -I}, 1));
  EXPECT_EQ(t({1, 0}), 1);
  EXPECT_EQ(t({0, 1}), 1);
  EXPECT_EQ(t({1, 1}), 0);
  EXPECT_EQ(t({0, 0}), 0);
  const Dims2 f = intersection_dims(line_at({1, I}, 1), line_at({1, -I}, 1));
  EXPECT_EQ(f({1, 1}), 0);
  EXPECT_EQ(f({1, 0}), 1);
  EXPECT_EQ(f({0, 0}), 2);
}

TEST(DoubleGraded, SameLine) {
  const F f = line_at({1, 3}, 1);
  const Dims2 t = double_graded_dims(f, f);
  EXPECT_EQ(t({1, 1}), 1);
  EXPECT_EQ(t({0, 0}), 1);
  EXPECT_EQ(t.total(), 2);
}

TEST(TripleGraded, Trivial) {
  const F f = trivial<Q>(4);
  const Dims3 d = triple_graded_dims(f, f, f);
  EXPECT_EQ(d.entries, (std::map<std::array<int, 3>, long>{{{0, 0, 0}, 4}}));
  const F g = dec_shift(trivial<Q>(1), -3);
  EXPECT_EQ(triple_graded_dims(g, g, g)({-3, -3, -3}), 1);
}

TEST(TripleGraded, ThreeLines) {
  const ThreeLines x;
  const Dims3 d = triple_graded_dims(x.mu, x.kappa, x.lambda);
  EXPECT_EQ(d({1, 1, 1}), 0);
  EXPECT_EQ(d({0, 0, 1}), 1);
  EXPECT_EQ(d({1, 1, 0}), 1);
  EXPECT_EQ(d.total(), 2);
}

TEST(MultifiltDim, Exhaustive) {
  const ThreeLines x;
  EXPECT_EQ(multifilt_dim<Q>({x.kappa, x.lambda, x.mu}, {0, 0, 0}), 2u);
  EXPECT_EQ(multifilt_dim<Q>({x.kappa, x.lambda, x.mu}, {1, 0, 0}), 1u);
  EXPECT_EQ(multifilt_dim<Q>({x.kappa, x.lambda, x.mu}, {1, 1, 0}), 0u);
}

TEST(Bigrading, EqualChainsAreDiagonal) {
  const F f = F::from_levels(3, {{0, S::full(3)}, {1, span(3, {{1, I, 0}, {0, 0, 1}})}, {2, span(3, {{0, 0, 1}})}});
  const Bigrading<Q> b = simultaneous_bigrading(f, f);
  EXPECT_TRUE(b.independent());
  for (auto const& [k, v] : b.pieces)
    if (!v.is_zero()) {
      EXPECT_EQ(k.first, k.second);
    }
}

TEST(Bigrading, RecoversBothFiltrations) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const H h = random_mhs(rng);
    const F f = h.hodge(), g = h.hodge_conjugate();
    const Bigrading<Q> b = simultaneous_bigrading(f, g);
    EXPECT_TRUE(b.independent());
    for (int p = f.lowest() - 1; p <= f.end(); ++p) EXPECT_EQ(b.first(p), f[p]);
    for (int q = g.lowest() - 1; q <= g.end(); ++q) EXPECT_EQ(b.second(q), g[q]);
  }
}

TEST(Opposed, Examples) {
  const F t1 = trivial<Q>(1);
  EXPECT_TRUE(are_opposed(t1, t1, t1));
  EXPECT_TRUE(are_opposed(dec_shift(t1, -2), dec_shift(t1, 1), dec_shift(t1, 1)));
  EXPECT_FALSE(are_opposed(t1, dec_shift(t1, 1), t1));
}

TEST(SplitCompatibility, Examples) {
  const ThreeLines x;
  EXPECT_TRUE(split_compatibility_check(x.kappa, x.lambda, trivial<Q>(2)));
  EXPECT_FALSE(split_compatibility_check(x.kappa, x.lambda, x.mu));
  const F a = line_at({1, 0}, 1), b = line_at({0, 1}, 2), c = F::from_levels(2, {{0, S::full(2)}, {3, span(2, {{1, 0}})}});
  EXPECT_TRUE(split_compatibility_check(a, b, c));
}

// t from inclusion–exclusion sums to the dimension and Gr dims project correctly.
TEST(DoubleGraded, MarginalsProperty) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const H h = random_mhs(rng);
    const Dims2 t = double_graded_dims(h.hodge(), h.hodge_conjugate());
    EXPECT_EQ(t.total(), long(h.dim()));
    std::map<int, long> rows;
    for (auto const& [i, v] : t.entries) {
      EXPECT_GT(v, 0);
      rows[i[0]] += v;
    }
    for (auto const& [p, v] : rows) EXPECT_EQ(v, long(graded_dim(h.hodge(), p)));
  }
}

TEST(Tensor, LevelsAdd) {
  const F a = line_at({1, 2}, 1), b = line_at({1, I}, 0);
  const F t = tensor(a, b);
  EXPECT_EQ(t.ambient_dim(), 4u);
  EXPECT_EQ(t.dim_at(1), 1u);
  EXPECT_EQ(t.dim_at(0), 3u);
  EXPECT_EQ(t[1], tensor(a[1], b[0]));
  const F s = direct_sum(a, b);
  EXPECT_EQ(s.dim_at(1), 1u);
  EXPECT_EQ(s.dim_at(0), 3u);
}

}  // namespace
