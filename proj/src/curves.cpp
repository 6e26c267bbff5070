#include "hodgerees/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hodgerees/mhs.hpp"

namespace hodgerees {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kTwoPiI{0, 2 * kPi};

std::pair<Complex, Complex> homogeneous(const P1Point& p) {
  return p.infinite ? std::pair<Complex, Complex>{1, 0} : std::pair<Complex, Complex>{p.z, 1};
}

// x_a y_b - y_a x_b, the homogeneous form of a - b
Complex det(const P1Point& a, const P1Point& b) {
  auto [xa, ya] = homogeneous(a);
  auto [xb, yb] = homogeneous(b);
  return xa * yb - ya * xb;
}

void check_distinct(const std::vector<P1Point>& pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (same_point(pts[i], pts[j]))
        throw DegenerateConfiguration("coincident marked points " + pts[i].to_string() + " and " + pts[j].to_string());
}

std::vector<P1Point> marked_points(const Genus0Config& cfg) {
  std::vector<P1Point> pts = cfg.punctures;
  for (auto const& [p, q] : cfg.pairs) {
    pts.push_back(p);
    pts.push_back(q);
  }
  return pts;
}

// z modulo Z + Z tau, reduced to the fundamental parallelogram
Complex reduce_mod_lattice(Complex z, Complex tau) {
  const double b = z.imag() / tau.imag();
  z -= std::floor(b) * tau;
  z -= std::floor(z.real());
  return z;
}

bool same_mod_lattice(Complex a, Complex b, Complex tau, double tol = 1e-12) {
  Complex d = reduce_mod_lattice(a - b, tau);
  // d near a lattice point means it is near 0, 1, tau or 1 + tau
  for (Complex corner : {Complex(0), Complex(1), tau, 1.0 + tau})
    if (std::abs(d - corner) <= tol) return true;
  return false;
}

void check_genus1(const Genus1Config& cfg) {
  if (cfg.tau.imag() <= 0) throw std::domain_error("Im(tau) must be positive");
  std::vector<Complex> pts = cfg.punctures;
  for (auto const& [p, q] : cfg.pairs) {
    pts.push_back(p);
    pts.push_back(q);
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (same_mod_lattice(pts[i], pts[j], cfg.tau))
        throw DegenerateConfiguration("marked points coincide modulo the lattice");
}

Matrix<Complex> stacked(const Matrix<Complex>& a) { return vstack(a, a.conj()); }

}  // namespace

P1Point P1Point::parse(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s == "inf" || s == "infinity" || s == "∞") return inf();
  return {parse_complex(s), false};
}

std::string P1Point::to_string() const {
  if (infinite) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

bool same_point(const P1Point& a, const P1Point& b, double tol) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return std::abs(a.z - b.z) <= tol;
}

Complex cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d) {
  check_distinct({a, b, c, d});
  return det(a, c) * det(b, d) / (det(a, d) * det(b, c));
}

P1Point Mobius::operator()(const P1Point& p) const {
  auto [x, y] = homogeneous(p);
  const Complex num = a * x + b * y, den = c * x + d * y;
  if (std::abs(den) <= 1e-300 * std::max(1.0, std::abs(num))) return P1Point::inf();
  return {num / den, false};
}

Genus0Config Genus0Config::mapped(const Mobius& g) const {
  Genus0Config out;
  for (auto const& p : punctures) out.punctures.push_back(g(p));
  for (auto const& [p, q] : pairs) out.pairs.emplace_back(g(p), g(q));
  return out;
}

Complex genus0_log_entry(const Genus0Config& cfg, size_t i, size_t j) {
  auto const& [p, q] = cfg.pairs.at(j);
  return std::log(cross_ratio(q, p, cfg.punctures.at(i), cfg.punctures.at(i + 1)));
}

PeriodMatrix period_matrix_genus0(const Genus0Config& cfg) {
  check_distinct(marked_points(cfg));
  const size_t m = cfg.punctures.size(), n = cfg.pairs.size();
  const size_t r = m < 2 ? 0 : m - 1;
  PeriodMatrix out{Matrix<Complex>(r, r + n), r, n};
  for (size_t i = 0; i < r; ++i) {
    out.entries(i, i) = kTwoPiI;
    if (i > 0) out.entries(i, i - 1) = -kTwoPiI;
    for (size_t j = 0; j < n; ++j) out.entries(i, r + j) = genus0_log_entry(cfg, i, j);
  }
  return out;
}

size_t t11_from_periods(const Matrix<Complex>& a, double tol) {
  if (a.rows() == 0) return 0;
  const long t = 2 * long(a.rows()) - long(rank(stacked(a), tol));
  return size_t(std::clamp<long>(t, 0, long(a.rows())));
}

long alpha1_from_t11(size_t rows, size_t cols, size_t t11) {
  const long r = long(rows), N = long(cols), t = long(t11);
  Dims2 h, tt;
  h.add({1, 1}, r);
  h.add({0, 0}, N - r);
  tt.add({1, 1}, t);
  tt.add({1, 0}, r - t);
  tt.add({0, 1}, r - t);
  tt.add({0, 0}, N - 2 * r + t);
  return alpha_from_tables(h, tt);
}

long alpha1_genus0(const Genus0Config& cfg, double tol) {
  check_distinct(marked_points(cfg));
  const size_t m = cfg.punctures.size();
  if (m < 2) throw DegenerateConfiguration("at least two punctures are needed");
  long unit_rows = 0;
  for (size_t i = 0; i + 1 < m; ++i) {
    bool all = true;
    for (size_t j = 0; j < cfg.pairs.size() && all; ++j) all = std::abs(genus0_log_entry(cfg, i, j).real()) <= tol;
    if (all) ++unit_rows;
  }
  return long(m - 1) - unit_rows;
}

long alpha1_genus0_rank(const Genus0Config& cfg, double tol) {
  if (cfg.punctures.size() < 2) throw DegenerateConfiguration("at least two punctures are needed");
  const PeriodMatrix pm = period_matrix_genus0(cfg);
  return alpha1_from_t11(pm.entries.rows(), pm.entries.cols(), t11_from_periods(pm.entries, tol));
}

int theta_terms(Complex z, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("Im(tau) must be positive");
  const double a = kPi * tau.imag(), b = 2 * kPi * std::abs(z.imag());
  // smallest N with exp(-a (N+1)^2 + b (N+1)) < 1e-16, past the peak of the exponent
  const double target = std::log(1e-16);
  int n = 0;
  for (;; ++n) {
    const double k = n + 1;
    if (-a * k * k + b * k < target && k > b / (2 * a)) return n;
  }
}

Complex theta(Complex z, Complex tau) {
  const int terms = theta_terms(z, tau);
  const Complex pii{0, kPi};
  Complex sum = 1;
  for (int n = 1; n <= terms; ++n) {
    const double nn = double(n) * n;
    sum += std::exp(pii * nn * tau + 2.0 * pii * double(n) * z) + std::exp(pii * nn * tau - 2.0 * pii * double(n) * z);
  }
  return sum;
}

Complex genus1_log_entry(const Genus1Config& cfg, size_t i, size_t j) {
  const Complex s = 0.5 * (1.0 + cfg.tau);
  auto const& [p, q] = cfg.pairs.at(j);
  const Complex a = cfg.punctures.at(i), b = cfg.punctures.at(i + 1);
  auto th = [&](Complex z) { return theta(z, cfg.tau); };
  return std::log(th(q - a - s) / th(q - b - s)) - std::log(th(p - a - s) / th(p - b - s));
}

PeriodMatrix period_matrix_genus1(const Genus1Config& cfg) {
  check_genus1(cfg);
  const size_t m = cfg.punctures.size(), n = cfg.pairs.size();
  PeriodMatrix out{Matrix<Complex>(m, 1 + m + n), 1 + m, n};
  if (m == 0) return out;
  Matrix<Complex>& a = out.entries;
  a(0, 0) = 1;
  for (size_t j = 0; j < n; ++j) a(0, 1 + m + j) = cfg.pairs[j].second - cfg.pairs[j].first;
  for (size_t i = 1; i < m; ++i) {
    a(i, 0) = 0;  // λ_i
    a(i, i) = 1;
    a(i, i + 1) = -1;
    for (size_t j = 0; j < n; ++j) a(i, 1 + m + j) = genus1_log_entry(cfg, i - 1, j);
  }
  return out;
}

long alpha1_genus1(const Genus1Config& cfg, double tol) {
  check_genus1(cfg);
  const size_t m = cfg.punctures.size();
  if (m < 2) throw DegenerateConfiguration("at least two punctures are needed");
  long real_rows = 0;
  for (size_t i = 0; i + 1 < m; ++i) {
    bool all = true;
    for (size_t j = 0; j < cfg.pairs.size() && all; ++j) {
      const Complex c = genus1_log_entry(cfg, i, j);
      all = std::abs(c.imag()) <= tol * std::max(1.0, std::abs(c));
    }
    if (all) ++real_rows;
  }
  return long(m - 1) - real_rows;
}

long alpha1_genus1_rank(const Genus1Config& cfg, double tol) {
  if (cfg.punctures.size() < 2) throw DegenerateConfiguration("at least two punctures are needed");
  const PeriodMatrix pm = period_matrix_genus1(cfg);
  Matrix<Complex> logs(0, pm.entries.cols());
  for (size_t i = 1; i < pm.entries.rows(); ++i) logs.append_row(pm.entries.row(i));
  return alpha1_from_t11(logs.rows(), logs.cols(), t11_from_periods(logs, tol));
}

std::vector<ScanPoint> scan_m04(const ScanGrid& grid, double tol, unsigned workers) {
  const size_t k = grid.steps;
  auto at = [&](double lo, double hi, size_t i) { return k < 2 ? lo : lo + (hi - lo) * double(i) / double(k - 1); };
  std::vector<ScanPoint> out(k * k);
  auto work = [&](size_t begin, size_t stride) {
    for (size_t idx = begin; idx < out.size(); idx += stride) {
      ScanPoint& pt = out[idx];
      pt.re = at(grid.re_min, grid.re_max, idx / k);
      pt.im = at(grid.im_min, grid.im_max, idx % k);
      const Complex q{pt.re, pt.im};
      if (std::abs(q) <= tol || std::abs(q - 1.0) <= tol) continue;
      Genus0Config cfg{{P1Point{0}, P1Point{1}}, {{P1Point::inf(), P1Point{q}}}};
      pt.alpha1 = alpha1_genus0(cfg, tol);
      pt.alpha1_rank = alpha1_genus0_rank(cfg, tol);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::ostringstream os;
  os << "re,im,alpha1,flag\n";
  char buf[96];
  for (auto const& p : points) {
    if (p.alpha1)
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,%ld,ok\n", p.re, p.im, *p.alpha1);
    else
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,,degenerate\n", p.re, p.im);
    os << buf;
  }
  return os.str();
}

}  // namespace hodgerees
