#include "hodgerees/subspace.hpp"

namespace hodgerees {

namespace {

template <class T>
void check_ambient(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()));
}

}  // namespace

template <class T>
Subspace<T>::Subspace(const Matrix<T>& m) : ambient_(m.cols()), basis_(rref(m)) {}

template <class T>
bool Subspace<T>::operator==(const Subspace& o) const {
  if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
  if constexpr (ScalarTraits<T>::exact)
    return basis_ == o.basis_;
  else
    return sum_dim(*this, o) == dim();
}

template <class T>
bool Subspace<T>::contains(const Subspace& o) const {
  check_ambient(*this, o);
  if (o.dim() > dim()) return false;
  if (o.is_zero() || is_full()) return true;
  return sum_dim(*this, o) == dim();
}

template <class T>
Subspace<T> Subspace<T>::conjugate() const {
  if constexpr (ScalarTraits<T>::exact) {
    // conjugating an RREF matrix keeps it in RREF
    Subspace out = *this;
    out.basis_ = basis_.conj();
    return out;
  } else {
    return Subspace(basis_.conj());
  }
}

template <class T>
Subspace<T> Subspace<T>::apply(const Matrix<T>& g) const {
  if (g.cols() != ambient_) throw DimensionMismatch("linear map does not act on this ambient space");
  if (is_zero()) return Subspace(g.rows());
  return Subspace(basis_ * g.transpose());
}

template <class T>
Subspace<T> operator+(const Subspace<T>& a, const Subspace<T>& b) {
  check_ambient(a, b);
  if (a.is_zero() || b.is_full()) return b;
  if (b.is_zero() || a.is_full()) return a;
  return Subspace<T>(vstack(a.basis(), b.basis()));
}

template <class T>
size_t sum_dim(const Subspace<T>& a, const Subspace<T>& b) {
  check_ambient(a, b);
  if (a.is_zero()) return b.dim();
  if (b.is_zero()) return a.dim();
  if (a.is_full() || b.is_full()) return a.ambient_dim();
  return rank(vstack(a.basis(), b.basis()));
}

template <class T>
size_t intersection_dim(const Subspace<T>& a, const Subspace<T>& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

// Zassenhaus: rows of rref [[A, A], [B, 0]] whose left half vanishes span A ∩ B.
template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  check_ambient(a, b);
  const size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_full()) return a;
  if (b.is_zero() || a.is_full()) return b;
  Matrix<T> z(a.dim() + b.dim(), 2 * n);
  for (size_t r = 0; r < a.dim(); ++r)
    for (size_t c = 0; c < n; ++c) z(r, c) = z(r, n + c) = a.basis()(r, c);
  for (size_t r = 0; r < b.dim(); ++r)
    for (size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
  std::vector<size_t> piv;
  Matrix<T> red = rref(z, piv);
  Matrix<T> out(0, n);
  for (size_t r = 0; r < red.rows(); ++r) {
    if (piv[r] < n) continue;
    std::vector<T> v(n);
    for (size_t c = 0; c < n; ++c) v[c] = red(r, n + c);
    out.append_row(v);
  }
  return Subspace<T>(out);
}

template <class T>
Subspace<T> annihilator(const Subspace<T>& a) {
  const size_t n = a.ambient_dim();
  if (a.is_zero()) return Subspace<T>::full(n);
  return Subspace<T>(kernel(a.basis()));
}

template <class T>
Subspace<T> tensor(const Subspace<T>& a, const Subspace<T>& b) {
  const size_t n = a.ambient_dim() * b.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<T>(n);
  if (a.is_full() && b.is_full()) return Subspace<T>::full(n);
  // Kronecker product of two RREF bases is already independent; RREF it anyway
  return Subspace<T>(kron(a.basis(), b.basis()));
}

template <class T>
Subspace<T> direct_sum(const Subspace<T>& a, const Subspace<T>& b) {
  return Subspace<T>(block_diag(a.basis(), b.basis()));
}

#define HODGEREES_INSTANTIATE(T)                                           \
  template class Subspace<T>;                                              \
  template Subspace<T> operator+(const Subspace<T>&, const Subspace<T>&);  \
  template Subspace<T> intersect(const Subspace<T>&, const Subspace<T>&);  \
  template size_t intersection_dim(const Subspace<T>&, const Subspace<T>&); \
  template size_t sum_dim(const Subspace<T>&, const Subspace<T>&);         \
  template Subspace<T> annihilator(const Subspace<T>&);                    \
  template Subspace<T> tensor(const Subspace<T>&, const Subspace<T>&);     \
  template Subspace<T> direct_sum(const Subspace<T>&, const Subspace<T>&);

HODGEREES_INSTANTIATE(GaussianRational)
HODGEREES_INSTANTIATE(Complex)

}  // namespace hodgerees
