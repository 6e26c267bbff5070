#pragma once

#include "hodgerees/matrix.hpp"

namespace hodgerees {

// Row span of a matrix, stored in RREF.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  // Span of the rows of m.
  explicit Subspace(const Matrix<T>& m);
  Subspace(size_t ambient, const std::vector<std::vector<T>>& rows) : Subspace(Matrix<T>(ambient, rows)) {}

  static Subspace zero(size_t n) { return Subspace(n); }
  static Subspace full(size_t n) { return Subspace(Matrix<T>::identity(n)); }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Exact backend: canonical RREF comparison.  Float backend: equal dimension
  // and the sum has the same dimension.
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const Subspace& o) const;
  Subspace conjugate() const;
  bool is_real() const { return *this == conjugate(); }

  // Image under v -> g v.
  Subspace apply(const Matrix<T>& g) const;

 private:
  size_t ambient_ = 0;
  Matrix<T> basis_;
};

template <class T>
Subspace<T> operator+(const Subspace<T>& a, const Subspace<T>& b);

template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b);

// dim(a ∩ b) without building the intersection.
template <class T>
size_t intersection_dim(const Subspace<T>& a, const Subspace<T>& b);

template <class T>
size_t sum_dim(const Subspace<T>& a, const Subspace<T>& b);

// {x : <x, v> = 0 for v in a} under the bilinear pairing sum x_k v_k.
template <class T>
Subspace<T> annihilator(const Subspace<T>& a);

// a ⊗ b inside the Kronecker product of the ambients.
template <class T>
Subspace<T> tensor(const Subspace<T>& a, const Subspace<T>& b);

// a ⊕ b inside the direct sum of the ambients.
template <class T>
Subspace<T> direct_sum(const Subspace<T>& a, const Subspace<T>& b);

}  // namespace hodgerees
