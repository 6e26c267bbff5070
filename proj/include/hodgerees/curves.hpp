#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgerees/matrix.hpp"

namespace hodgerees {

struct DegenerateConfiguration : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Point of P^1: a complex number or infinity.
struct P1Point {
  Complex z{};
  bool infinite = false;

  static P1Point inf() { return {{}, true}; }
  // "inf", or a complex literal such as "2", "0.5+0.7i"
  static P1Point parse(std::string_view s);
  std::string to_string() const;
};

bool same_point(const P1Point& a, const P1Point& b, double tol = 1e-12);

// ((a-c)/(a-d)) / ((b-c)/(b-d)), with the limiting value when one point is
// infinite.  Throws DegenerateConfiguration on coincident points.
Complex cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d);

// z -> (a z + b) / (c z + d)
struct Mobius {
  Complex a{1}, b{0}, c{0}, d{1};
  P1Point operator()(const P1Point& p) const;
};

struct Genus0Config {
  std::vector<P1Point> punctures;
  std::vector<std::pair<P1Point, P1Point>> pairs;  // (P_j, Q_j)

  Genus0Config mapped(const Mobius& g) const;
};

struct Genus1Config {
  Complex tau{0, 1};
  std::vector<Complex> punctures;
  std::vector<std::pair<Complex, Complex>> pairs;  // (P_j, Q_j)
};

struct PeriodMatrix {
  Matrix<Complex> entries;
  size_t residue_cols = 0;  // leading block
  size_t log_cols = 0;      // trailing block, one column per pair
};

// Log block entry of row i and pair j: log (Q_j, P_j, p_i, p_{i+1}).
Complex genus0_log_entry(const Genus0Config& cfg, size_t i, size_t j);

// (m-1) x (m-1+n): banded residues 2πi / -2πi, then the log block.
PeriodMatrix period_matrix_genus0(const Genus0Config& cfg);

// 2 rows(A) - rank [A; conj A], clamped to [0, rows(A)].
size_t t11_from_periods(const Matrix<Complex>& a, double tol = float_tolerance());

// α of a structure with h^{1,1} = r and h^{0,0} = cols - r whose F^1 is the
// row space of a period matrix with r rows and the given t^{1,1}.
long alpha1_from_t11(size_t rows, size_t cols, size_t t11);

// Row i counts when every log entry satisfies c = -conj c, i.e. |cross ratio| = 1.
long alpha1_genus0(const Genus0Config& cfg, double tol = float_tolerance());
long alpha1_genus0_rank(const Genus0Config& cfg, double tol = float_tolerance());

// θ(z; τ) = Σ_n exp(πi n² τ + 2πi n z); throws std::domain_error if Im τ <= 0.
Complex theta(Complex z, Complex tau);
// Largest |n| kept in the theta series at (z, tau).
int theta_terms(Complex z, Complex tau);

Complex genus1_log_entry(const Genus1Config& cfg, size_t i, size_t j);

// m x (1 + m + n): row 0 is (1, 0, ..., 0 | Q_j - P_j); row i >= 1 is
// (λ_i, residues +1/-1 at columns i, i+1 | log block) with λ_i = 0.
PeriodMatrix period_matrix_genus1(const Genus1Config& cfg);

long alpha1_genus1(const Genus1Config& cfg, double tol = float_tolerance());
// Rank computation restricted to the rows of the logarithmic forms.
long alpha1_genus1_rank(const Genus1Config& cfg, double tol = float_tolerance());

struct ScanGrid {
  double re_min = -1, re_max = 2, im_min = -1.5, im_max = 1.5;
  size_t steps = 41;
};

struct ScanPoint {
  double re = 0, im = 0;
  std::optional<long> alpha1;  // empty at degenerate points
  std::optional<long> alpha1_rank;
};

// α_1 for p = (0, 1) and the pair (∞, Q) at every grid point, rows by
// increasing re then im.  Q on a grid line is min + (max - min) k / (steps - 1).
std::vector<ScanPoint> scan_m04(const ScanGrid& grid, double tol = float_tolerance(), unsigned workers = 1);

// "re,im,alpha1,flag" followed by one row per point.
std::string scan_csv(const std::vector<ScanPoint>& points);

}  // namespace hodgerees
