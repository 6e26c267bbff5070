#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "hodgerees/matrix.hpp"

namespace hodgerees {

namespace {

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> tol{default_tolerance()};
  return tol;
}

template <class T>
double max_abs(const Matrix<T>& m) {
  double best = 0;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

template <class T>
void sub_product(T& acc, const T& f, const T& y) {
  if constexpr (ScalarTraits<T>::exact)
    acc.sub_product(f, y);
  else
    acc -= f * y;
}

template <class T>
bool pivot_zero(const T& x, double thresh) {
  if constexpr (ScalarTraits<T>::exact)
    return x.is_zero();
  else
    return std::abs(x) <= thresh;
}

// Picks the pivot row for column c among rows [r, R); returns R if none.
template <class T>
size_t find_pivot(const Matrix<T>& a, size_t r, size_t c, double thresh) {
  size_t R = a.rows();
  if constexpr (ScalarTraits<T>::exact) {
    for (size_t k = r; k < R; ++k)
      if (!a(k, c).is_zero()) return k;
    return R;
  } else {
    size_t best = R;
    double mag = thresh;
    for (size_t k = r; k < R; ++k) {
      double v = std::abs(a(k, c));
      if (v > mag) {
        mag = v;
        best = k;
      }
    }
    return best;
  }
}

template <class T>
void swap_rows(Matrix<T>& a, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

template <class T>
Matrix<T> reduce(Matrix<T> a, std::vector<size_t>& piv, double tol, bool jordan) {
  piv.clear();
  const size_t R = a.rows(), C = a.cols();
  double thresh = 0;
  if constexpr (!ScalarTraits<T>::exact) thresh = tol * max_abs(a);
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = find_pivot(a, r, c, thresh);
    if (p == R) {
      if constexpr (!ScalarTraits<T>::exact)
        for (size_t k = r; k < R; ++k) a(k, c) = T(0);
      continue;
    }
    swap_rows(a, r, p);
    T inv = T(1) / a(r, c);
    a(r, c) = T(1);
    for (size_t j = c + 1; j < C; ++j)
      if (!pivot_zero(a(r, j), 0)) a(r, j) *= inv;
    for (size_t k = jordan ? 0 : r + 1; k < R; ++k) {
      if (k == r) continue;
      if (pivot_zero(a(k, c), 0)) continue;
      T f = std::move(a(k, c));
      a(k, c) = T(0);
      for (size_t j = c + 1; j < C; ++j)
        if (!pivot_zero(a(r, j), 0)) sub_product(a(k, j), f, a(r, j));
    }
    piv.push_back(c);
    ++r;
  }
  Matrix<T> out(0, C);
  for (size_t k = 0; k < r; ++k) {
    auto row = a.row(k);
    if constexpr (!ScalarTraits<T>::exact) {
      for (size_t j = 0; j < C; ++j) {
        if (std::abs(row[j].real()) <= thresh) row[j].real(0.0);
        if (std::abs(row[j].imag()) <= thresh) row[j].imag(0.0);
      }
    }
    out.append_row(row);
  }
  return out;
}

}  // namespace

double float_tolerance() { return tolerance_slot().load(); }
void set_float_tolerance(double tol) { tolerance_slot().store(tol); }

template <class T>
Matrix<T> rref(const Matrix<T>& m, std::vector<size_t>& pivots, double tol) {
  return reduce(m, pivots, tol, true);
}

template <class T>
Matrix<T> rref(const Matrix<T>& m, double tol) {
  std::vector<size_t> piv;
  return reduce(m, piv, tol, true);
}

template <class T>
size_t rank(const Matrix<T>& m, double tol) {
  std::vector<size_t> piv;
  reduce(m, piv, tol, false);
  return piv.size();
}

template <class T>
Matrix<T> kernel(const Matrix<T>& m, double tol) {
  std::vector<size_t> piv;
  Matrix<T> red = reduce(m, piv, tol, true);
  const size_t n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (size_t p : piv) is_piv[p] = true;
  Matrix<T> out(0, n);
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(n, T(0));
    v[f] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    out.append_row(v);
  }
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& g, double tol) {
  const size_t n = g.rows();
  if (g.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = g(r, c);
    aug(r, n + r) = T(1);
  }
  std::vector<size_t> piv;
  Matrix<T> red = reduce(aug, piv, tol, true);
  if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw std::domain_error("singular matrix");
  Matrix<T> out(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  return out;
}

namespace {
std::string scalar_string(const GaussianRational& x) { return x.to_string(); }
std::string scalar_string(const Complex& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", x.real(), x.imag());
  return buf;
}
}  // namespace

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  for (size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << scalar_string(m(r, c));
    os << "]\n";
  }
  return os.str();
}

#define HODGEREES_INSTANTIATE(T)                                               \
  template Matrix<T> rref(const Matrix<T>&, double);                           \
  template Matrix<T> rref(const Matrix<T>&, std::vector<size_t>&, double);     \
  template size_t rank(const Matrix<T>&, double);                              \
  template Matrix<T> kernel(const Matrix<T>&, double);                         \
  template Matrix<T> inverse(const Matrix<T>&, double);                        \
  template std::string to_string(const Matrix<T>&);

HODGEREES_INSTANTIATE(GaussianRational)
HODGEREES_INSTANTIATE(Complex)

}  // namespace hodgerees
