#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hodgerees/subspace.hpp"

namespace hodgerees {

// Decreasing exhaustive filtration.  F^p is the full space for p < lowest(),
// steps[p - lowest()] inside the stored window, and zero past it.  The window
// is trimmed so that its first step is not full and its last is not zero.
template <class T>
class Filtration {
 public:
  Filtration() : Filtration(0) {}
  explicit Filtration(size_t ambient) : Filtration(trivial(ambient)) {}
  Filtration(size_t ambient, int lowest, std::vector<Subspace<T>> steps);

  static Filtration trivial(size_t n);
  // Levels not listed take the value of the nearest listed level below them;
  // below the lowest listed level the space is full, above the highest zero.
  static Filtration from_levels(size_t n, const std::map<int, Subspace<T>>& levels);

  size_t ambient_dim() const { return ambient_; }
  int lowest() const { return lo_; }
  // First level at which F^p is zero.
  int end() const { return lo_ + static_cast<int>(steps_.size()); }

  const Subspace<T>& operator[](int p) const;
  size_t dim_at(int p) const { return (*this)[p].dim(); }

  Filtration shifted(int r) const;  // level p of the result is level p - r of this
  Filtration conjugate() const;
  Filtration apply(const Matrix<T>& g) const;
  bool is_real() const;

  // Distinct levels, lowest first, where the dimension drops.
  std::vector<int> jumps() const;

  bool operator==(const Filtration& o) const {
    return ambient_ == o.ambient_ && lo_ == o.lo_ && steps_ == o.steps_;
  }
  bool operator!=(const Filtration& o) const { return !(*this == o); }

 private:
  size_t ambient_ = 0;
  int lo_ = 0;
  std::vector<Subspace<T>> steps_;
  Subspace<T> full_, zero_;
};

template <class T>
Filtration<T> trivial(size_t n) {
  return Filtration<T>::trivial(n);
}

template <class T>
Filtration<T> dec_shift(const Filtration<T>& f, int r) {
  return f.shifted(r);
}

// W^p = W_{-p}.  The increasing filtration is given by its values at some
// weights; W_m takes the value at the largest listed weight <= m and is zero
// below the lowest one.  The highest listed value must be the full space.
template <class T>
Filtration<T> from_increasing(size_t n, const std::map<int, Subspace<T>>& w);

// W_m at every weight from the last zero step to the first full one; the
// result reproduces f under from_increasing.
template <class T>
std::map<int, Subspace<T>> to_increasing(const Filtration<T>& f);

template <class T>
size_t graded_dim(const Filtration<T>& f, int p) {
  return f.dim_at(p) - f.dim_at(p + 1);
}

template <size_t K>
struct GradedDims {
  using Index = std::array<int, K>;
  std::map<Index, long> entries;  // nonzero entries only

  long operator()(const Index& i) const {
    auto it = entries.find(i);
    return it == entries.end() ? 0 : it->second;
  }
  void add(const Index& i, long v) {
    if (v == 0) return;
    if ((entries[i] += v) == 0) entries.erase(i);
  }
  long total() const {
    long s = 0;
    for (auto const& [k, v] : entries) s += v;
    return s;
  }
  bool operator==(const GradedDims& o) const { return entries == o.entries; }
};

using Dims2 = GradedDims<2>;
using Dims3 = GradedDims<3>;

// t^{p,q} by inclusion-exclusion over f^{p,q} = dim(F1^p ∩ F2^q).
template <class T>
Dims2 double_graded_dims(const Filtration<T>& f1, const Filtration<T>& f2);

// f^{p,q} = dim(F1^p ∩ F2^q) over the window where it is not constant.
template <class T>
Dims2 intersection_dims(const Filtration<T>& f1, const Filtration<T>& f2);

// delta_{p,q,r} = dim Gr_{F2}^q Gr_{F1}^p Gr_{F0}^r, indexed as {p, q, r}.
template <class T>
Dims3 triple_graded_dims(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

// dim of the intersection of the F_i^{levels[i]}.
template <class T>
size_t multifilt_dim(const std::vector<Filtration<T>>& filtrations, const std::vector<int>& levels);

template <class T>
struct Bigrading {
  size_t ambient_dim = 0;
  std::map<std::pair<int, int>, Subspace<T>> pieces;

  // ⊕_{a >= p} V^{a,q}
  Subspace<T> first(int p) const;
  // ⊕_{b >= q} V^{p,b}
  Subspace<T> second(int q) const;
  bool independent() const;
};

template <class T>
Bigrading<T> simultaneous_bigrading(const Filtration<T>& f1, const Filtration<T>& f2);

template <class T>
bool are_opposed(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

// Necessary condition for a simultaneous splitting: at every multidegree the
// intersection dimension equals the delta mass above it.
template <class T>
bool split_compatibility_check(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

template <class T>
Filtration<T> direct_sum(const Filtration<T>& a, const Filtration<T>& b);

// F^p = Σ_{a+b=p} A^a ⊗ B^b
template <class T>
Filtration<T> tensor(const Filtration<T>& a, const Filtration<T>& b);

}  // namespace hodgerees
