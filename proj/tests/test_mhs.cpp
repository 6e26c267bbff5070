#include <gtest/gtest.h>

#include "support.hpp"

using namespace hodgerees;
using namespace hodgerees::testing;

namespace {

const Q I = Q::i();

Dims2 table(std::initializer_list<std::pair<const std::array<int, 2>, long>> e) { return Dims2{e}; }

TEST(Validate, Examples) {
  // F^1 = span(1, i) is a pure structure of weight 1 with types (1,0) and (0,1)
  std::map<int, S> w1{{1, S::full(2)}};
  EXPECT_TRUE(validate(H::from_weights(2, w1, line_at({1, I}, 1))));
  // the same F on a weight-2 piece puts a (1,0) class in weight 2
  std::map<int, S> w2{{2, S::full(2)}};
  const Validation bad = validate(H::from_weights(2, w2, line_at({1, I}, 1)));
  EXPECT_FALSE(bad);
  EXPECT_FALSE(bad.diagnostic.empty());
  std::map<int, S> complex_w{{0, span(2, {{1, I}})}, {2, S::full(2)}};
  const Validation nonreal = validate(H(from_increasing<Q>(2, complex_w), line_at({1, 0}, 1)));
  EXPECT_FALSE(nonreal);
  EXPECT_NE(nonreal.diagnostic.find("real"), std::string::npos);
}

TEST(HodgeNumbers, Tate) {
  const HodgeNumbers n = hodge_numbers(tate<Q>(-1));
  EXPECT_EQ(n.h, table({{{1, 1}, 1}}));
  EXPECT_EQ(n.t, table({{{1, 1}, 1}}));
}

TEST(HodgeNumbers, ExtensionExample) {
  const HodgeNumbers ni = hodge_numbers(h_c(I));
  EXPECT_EQ(ni.h, table({{{0, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(ni.t, table({{{1, 0}, 1}, {{0, 1}, 1}}));
  const HodgeNumbers n0 = hodge_numbers(h_c(Q(0)));
  EXPECT_EQ(n0.t, table({{{0, 0}, 1}, {{1, 1}, 1}}));
}

TEST(Deligne, ExtensionExample) {
  const DeligneSplitting<Q> si = deligne_splitting(h_c(I));
  EXPECT_EQ(si.at(1, 1), span(2, {{I, 1}}));
  EXPECT_EQ(si.at(0, 0), span(2, {{1, 0}}));
  const DeligneSplitting<Q> s0 = deligne_splitting(h_c(Q(0)));
  EXPECT_EQ(s0.at(1, 1), span(2, {{0, 1}}));
  EXPECT_EQ(s0.at(1, 1), s0.at(1, 1).conjugate());
}

TEST(Deligne, PureStructureSplitsAsIntersections) {
  Rng rng(19);
  for (int w = -1; w <= 3; ++w) {
    const H h = random_pure(rng, w, w % 2 ? 4 : 3).mhs;
    const DeligneSplitting<Q> s = deligne_splitting(h);
    const F fbar = h.hodge_conjugate();
    for (auto const& [k, v] : s.pieces) EXPECT_EQ(v, intersect(h.hodge()[k.first], fbar[k.second]));
    EXPECT_TRUE(check_deligne_lemma(h, s, hodge_numbers(h)).all());
  }
}

TEST(RSplit, Examples) {
  Rng rng(23);
  EXPECT_TRUE(is_r_split(random_pure(rng, 2, 4).mhs));
  EXPECT_TRUE(is_r_split(tate<Q>(3)));
  EXPECT_FALSE(is_r_split(h_c(I)));
  EXPECT_TRUE(is_r_split(h_c(Q(0))));
  EXPECT_TRUE(is_r_split(h_c(Q(Rational(5, 3)))));
}

TEST(Alpha, Examples) {
  Rng rng(29);
  EXPECT_EQ(alpha(random_pure(rng, 1, 4).mhs), 0);
  EXPECT_EQ(alpha(h_c(I)), 1);
  EXPECT_EQ(alpha(h_c(Q(2, 3))), 1);
  EXPECT_EQ(alpha(h_c(Q(7))), 0);
  EXPECT_EQ(alpha(direct_sum(h_c(I), h_c(I))), 2);
  EXPECT_EQ(alpha(h_c<Complex>(Complex(0, 1))), 1);
  EXPECT_EQ(alpha(h_c<Complex>(Complex(0.3, 0))), 0);
}

TEST(Alpha, RejectsInvalidStructures) {
  std::map<int, S> w2{{2, S::full(2)}};
  EXPECT_THROW(alpha(H::from_weights(2, w2, line_at({1, I}, 1))), InvalidStructure);
}

TEST(TateTwist, Examples) {
  const H h = h_c(I);
  EXPECT_EQ(tate_twist(h, 0), h);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_EQ(tate_twist(tate<Q>(0), k), tate<Q>(k));
    EXPECT_EQ(hodge_numbers(tate<Q>(k)).h, table({{{-k, -k}, 1}}));
    EXPECT_EQ(tate_twist(tate_twist(h, k), 2), tate_twist(h, k + 2));
    EXPECT_EQ(tensor(h, tate<Q>(k)), tate_twist(h, k));
    EXPECT_EQ(alpha(tensor(h, tate<Q>(k))), 1);
  }
}

TEST(Dual, Examples) {
  for (int k = -2; k <= 2; ++k) EXPECT_EQ(dual(tate<Q>(k)), tate<Q>(-k));
  EXPECT_EQ(alpha(dual(h_c(I))), 1);
  Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    const H h = random_mhs(rng);
    const HodgeNumbers a = hodge_numbers(h), b = hodge_numbers(dual(dual(h)));
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.t, b.t);
    const HodgeNumbers d = hodge_numbers(dual(h));
    for (auto const& [i, v] : a.h.entries) EXPECT_EQ(d.h({-i[0], -i[1]}), v);
    for (auto const& [i, v] : a.t.entries) EXPECT_EQ(d.t({-i[0], -i[1]}), v);
  }
}

TEST(DirectSum, Examples) {
  const H zero(trivial<Q>(0), trivial<Q>(0));
  EXPECT_EQ(direct_sum(h_c(I), zero), h_c(I));
  const H s = direct_sum(tate<Q>(0), tate<Q>(-1));
  EXPECT_EQ(hodge_numbers(s).h, table({{{0, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(alpha(s), 0);
  EXPECT_EQ(alpha(direct_sum(h_c(I), h_c(Q(0)))), 1);
}

TEST(Tensor, Examples) {
  const H h = h_c(I);
  const HodgeNumbers n = hodge_numbers(tensor(h, tate<Q>(0)));
  EXPECT_EQ(n.h, hodge_numbers(h).h);
  EXPECT_EQ(n.t, hodge_numbers(h).t);
  EXPECT_EQ(alpha(tensor(h, h)), 4);
  EXPECT_EQ(alpha(tensor(h, h_c(Q(3)))), 2);
}

TEST(Extension, Examples) {
  const H a = tate<Q>(0), b = tate<Q>(-1);
  EXPECT_EQ(extension_build(a, b, Matrix<Q>(1, 1)), direct_sum(a, b));
  for (const Q& c : {Q(0), Q(1, 2), I, Q(1, 1), Q(-3, 5)}) {
    const H h = extension_build(a, b, Matrix<Q>(1, {{c}}));
    EXPECT_EQ(h, h_c(c));
    EXPECT_EQ(alpha(h), c.is_real() ? 0 : 1);
  }
}

TEST(Extension, RejectsWeightRaisingTheta) {
  // B = T<0> of weight 0 mapped into A = T<-1> of weight 2
  EXPECT_FALSE(weight_compatible(tate<Q>(-1), tate<Q>(0), Matrix<Q>(1, {{1}})));
  EXPECT_THROW(extension_build(tate<Q>(-1), tate<Q>(0), Matrix<Q>(1, {{1}})), WeightIncompatible);
}

TEST(Extension, StrictnessProperty) {
  Rng rng(37);
  for (int k = 0; k < 40; ++k) {
    const ExtensionTriple e = random_extension_triple(rng);
    const H h = extension_build(e.a, e.b, e.theta);
    ASSERT_TRUE(validate(h));
    const size_t da = e.a.dim(), db = e.b.dim();
    const S a_in_h = direct_sum(S::full(da), S(db));
    for (int p = h.hodge().lowest() - 1; p <= h.hodge().end(); ++p)
      EXPECT_EQ(intersect(a_in_h, h.hodge()[p]), direct_sum(e.a.hodge()[p], S(db)));
  }
}

// Integer basis changes do not alter any invariant.
TEST(Transform, InvariantsProperty) {
  Rng rng(41);
  GeneratorOptions opt;
  opt.basis_change = false;
  for (int k = 0; k < 30; ++k) {
    const H h = random_mhs(rng, opt);
    const H g = transform(h, random_real_gl(rng, h.dim(), 3));
    EXPECT_EQ(hodge_numbers(g).h, hodge_numbers(h).h);
    EXPECT_EQ(hodge_numbers(g).t, hodge_numbers(h).t);
    EXPECT_EQ(alpha(g), alpha(h));
    EXPECT_EQ(is_r_split(g), is_r_split(h));
  }
}

TEST(HodgeNumbers, TableInvariantsProperty) {
  Rng rng(43);
  for (int k = 0; k < 60; ++k) {
    const H h = random_mhs(rng);
    const HodgeNumbers n = hodge_numbers(h);
    EXPECT_EQ(n.h.total(), long(h.dim()));
    EXPECT_EQ(n.t.total(), long(h.dim()));
    long first = 0;
    for (auto const& [i, v] : n.h.entries) {
      EXPECT_EQ(n.h({i[1], i[0]}), v);
      first += (i[0] + i[1]) * v;
    }
    for (auto const& [i, v] : n.t.entries) {
      EXPECT_EQ(n.t({i[1], i[0]}), v);
      first -= (i[0] + i[1]) * v;
    }
    EXPECT_EQ(first, 0);
  }
}

}  // namespace
