#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "hodgerees/curves.hpp"

using namespace hodgerees;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0, 1);

P1Point pt(Complex z) { return {z, false}; }

Genus0Config four_point(Complex q) { return {{pt(0), pt(1)}, {{P1Point::inf(), pt(q)}}}; }

TEST(CrossRatio, Examples) {
  const Complex p = Complex(2, 1), p1 = 0.5, p2 = Complex(-1, 3);
  EXPECT_LT(std::abs(cross_ratio(P1Point::inf(), pt(p), pt(p1), pt(p2)) - (p - p2) / (p - p1)), 1e-14);
  const Complex q(0.3, 0.8);
  EXPECT_LT(std::abs(cross_ratio(pt(q), P1Point::inf(), pt(0), pt(1)) - q / (q - 1.0)), 1e-14);
  EXPECT_LT(std::abs(cross_ratio(pt(2), P1Point::inf(), pt(0), pt(1)) - 2.0), 1e-14);
  EXPECT_THROW(cross_ratio(pt(1), pt(1), pt(0), pt(2)), DegenerateConfiguration);
}

TEST(CrossRatio, MobiusInvariance) {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  auto rc = [&] { return Complex(g(rng), g(rng)); };
  for (int k = 0; k < 100; ++k) {
    const Mobius m{rc(), rc(), rc(), rc()};
    const P1Point a = pt(rc()), b = pt(rc()), c = pt(rc()), d = pt(rc());
    const Complex before = cross_ratio(a, b, c, d), after = cross_ratio(m(a), m(b), m(c), m(d));
    EXPECT_LT(std::abs(before - after), 1e-8 * std::max(1.0, std::abs(before)));
  }
}

TEST(T11, Examples) {
  const double t = 1.7;
  EXPECT_EQ(t11_from_periods(Matrix<Complex>(2, {{Complex(0, 2 * pi), Complex(0, t)}})), 1u);
  EXPECT_EQ(t11_from_periods(Matrix<Complex>(2, {{Complex(0, 2 * pi), 1.0}})), 0u);
  EXPECT_EQ(t11_from_periods(Matrix<Complex>(0, 3)), 0u);
}

TEST(Genus0, PeriodMatrixShape) {
  const Genus0Config cfg{{pt(0), pt(1), pt(3)}, {{pt(I), pt(2.0 + I)}, {P1Point::inf(), pt(-1)}}};
  const PeriodMatrix m = period_matrix_genus0(cfg);
  EXPECT_EQ(m.entries.rows(), 2u);
  EXPECT_EQ(m.entries.cols(), 4u);
  EXPECT_EQ(m.residue_cols, 2u);
  EXPECT_EQ(m.log_cols, 2u);
  EXPECT_EQ(m.entries(0, 0), Complex(0, 2 * pi));
  EXPECT_EQ(m.entries(1, 0), -Complex(0, 2 * pi));
  EXPECT_EQ(m.entries(1, 1), Complex(0, 2 * pi));
}

TEST(Genus0, LogEntryMatchesFourPointReduction) {
  const Complex q(0.3, -0.4);
  EXPECT_LT(std::abs(genus0_log_entry(four_point(q), 0, 0) - std::log(q / (q - 1.0))), 1e-14);
}

TEST(Genus0, FourPointExamples) {
  EXPECT_EQ(alpha1_genus0(four_point(Complex(0.5, 0.7))), 0);
  EXPECT_EQ(alpha1_genus0_rank(four_point(Complex(0.5, 0.7))), 0);
  EXPECT_EQ(alpha1_genus0(four_point(2)), 1);
  EXPECT_EQ(alpha1_genus0_rank(four_point(2)), 1);
  EXPECT_EQ(alpha1_genus0(four_point(Complex(0.5, -3))), 0);
}

// c = -conj c, Re c = 0 and |exp c| = 1 are the same predicate.
TEST(Genus0, RowPredicateEquivalence) {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const Complex c(k % 4 ? g(rng) : 0.0, 3 * g(rng));
    const bool anti = std::abs(c + std::conj(c)) <= 1e-12;
    EXPECT_EQ(anti, std::abs(c.real()) <= 1e-12);
    EXPECT_EQ(anti, std::abs(std::abs(std::exp(c)) - 1) <= 1e-12);
  }
}

TEST(Genus0, NoIdentifications) {
  const Genus0Config cfg{{pt(0), pt(1), pt(I), P1Point::inf()}, {}};
  EXPECT_EQ(alpha1_genus0(cfg), 0);
  EXPECT_EQ(alpha1_genus0_rank(cfg), 0);
}

TEST(Genus0, Degenerate) {
  EXPECT_THROW(alpha1_genus0(four_point(1)), DegenerateConfiguration);
  EXPECT_THROW(alpha1_genus0(four_point(0)), DegenerateConfiguration);
}

TEST(Genus0, MobiusInvarianceProperty) {
  std::mt19937_64 rng(59);
  std::normal_distribution<double> g;
  auto rc = [&] { return Complex(g(rng), g(rng)); };
  for (int k = 0; k < 50; ++k) {
    Genus0Config cfg{{pt(rc()), pt(rc()), pt(rc())}, {{pt(rc()), pt(rc())}, {pt(rc()), pt(rc())}}};
    const Mobius m{rc(), rc(), rc(), rc()};
    EXPECT_EQ(alpha1_genus0(cfg.mapped(m)), alpha1_genus0(cfg));
    EXPECT_EQ(alpha1_genus0_rank(cfg.mapped(m)), alpha1_genus0_rank(cfg));
  }
}

TEST(Theta, Periodicity) {
  for (const Complex tau : {I, Complex(0.5, 1)}) {
    for (const Complex z : {Complex(0.1, 0.2), Complex(-0.7, 0.4), Complex(0.3, -0.45)}) {
      const Complex t = theta(z, tau);
      EXPECT_LT(std::abs(theta(z + 1.0, tau) - t), 1e-10 * std::abs(t));
      const Complex factor = std::exp(-pi * I * tau - 2.0 * pi * I * z);
      EXPECT_LT(std::abs(theta(z + tau, tau) - factor * t), 1e-10 * std::abs(factor * t));
    }
  }
  EXPECT_THROW(theta(0.1, Complex(1, 0)), std::domain_error);
  EXPECT_GT(theta_terms(Complex(0, 3), I), theta_terms(0, I));
}

TEST(Theta, SeriesAtOrigin) {
  const double expect = 1 + 2 * std::exp(-pi) + 2 * std::exp(-4 * pi) + 2 * std::exp(-9 * pi);
  EXPECT_LT(std::abs(theta(0, I) - expect), 1e-15);
}

TEST(Theta, ZeroAtHalfPeriodSum) {
  EXPECT_LT(std::abs(theta(0.5 * (1.0 + I), I)), 1e-14);
}

TEST(Genus1, PeriodMatrixShape) {
  const Genus1Config cfg{I, {0.1, 0.3, Complex(0.2, 0.4)}, {{0.5, 0.7}}};
  const PeriodMatrix m = period_matrix_genus1(cfg);
  EXPECT_EQ(m.entries.rows(), 3u);
  EXPECT_EQ(m.entries.cols(), 5u);
  EXPECT_EQ(m.entries(0, 0), Complex(1));
  EXPECT_EQ(m.entries(0, 1), Complex(0));
  EXPECT_LT(std::abs(m.entries(0, 4) - Complex(0.2)), 1e-15);
}

TEST(Genus1, NoIdentifications) {
  const Genus1Config cfg{I, {0.1, 0.3, 0.6}, {}};
  EXPECT_EQ(alpha1_genus1(cfg), 0);
  EXPECT_EQ(alpha1_genus1_rank(cfg), 0);
}

TEST(Genus1, RealConfigurationHasRealRow) {
  // all points on one horizontal line: every theta value is real
  const Genus1Config cfg{I, {0.1, 0.3}, {{0.5, 0.7}}};
  EXPECT_LT(std::abs(genus1_log_entry(cfg, 0, 0).imag()), 1e-12);
  EXPECT_EQ(alpha1_genus1(cfg), 0);
  EXPECT_EQ(alpha1_genus1_rank(cfg), 0);
}

TEST(Genus1, GenericConfigurationsProperty) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 30; ++k) {
    const Complex tau = k % 2 ? I : Complex(0.5, 1);
    auto rp = [&] { return u(rng) + u(rng) * tau; };
    const size_t m = 2 + k % 2;
    Genus1Config cfg{tau, {}, {}};
    for (size_t i = 0; i < m; ++i) cfg.punctures.push_back(rp());
    cfg.pairs.push_back({rp(), rp()});
    EXPECT_EQ(alpha1_genus1(cfg), long(m) - 1);
    // one log column bounds the stacked rank, so the oracle saturates at 1
    EXPECT_EQ(alpha1_genus1_rank(cfg), 1);
  }
}

TEST(Scan, GridAndPredicate) {
  ScanGrid grid;
  grid.steps = 11;
  const auto points = scan_m04(grid);
  ASSERT_EQ(points.size(), 121u);
  EXPECT_EQ(points.front().re, -1);
  EXPECT_EQ(points.back().im, 1.5);
  for (auto const& p : points) {
    if (!p.alpha1) continue;
    EXPECT_EQ(*p.alpha1, std::abs(p.re - 0.5) < 1e-9 ? 0 : 1);
    EXPECT_EQ(p.alpha1, p.alpha1_rank);
  }
  EXPECT_EQ(scan_csv(points), scan_csv(scan_m04(grid, float_tolerance(), 3)));
  EXPECT_EQ(scan_csv(points).substr(0, 18), "re,im,alpha1,flag\n");
}

}  // namespace
