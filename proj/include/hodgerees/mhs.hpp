#pragma once

#include <string>

#include "hodgerees/rees_chern.hpp"

namespace hodgerees {

struct InvalidStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightIncompatible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mixed Hodge structure on C^n with real structure given by coordinatewise
// conjugation.  The weight filtration is stored through its decreasing avatar
// W^p = W_{-p}.
template <class T>
class MixedHodgeStructure {
 public:
  MixedHodgeStructure() = default;
  MixedHodgeStructure(Filtration<T> weight, Filtration<T> hodge);

  // w maps weights to W_m with the gap rule of from_increasing.
  static MixedHodgeStructure from_weights(size_t n, const std::map<int, Subspace<T>>& w, Filtration<T> hodge) {
    return MixedHodgeStructure(from_increasing(n, w), std::move(hodge));
  }

  size_t dim() const { return hodge_.ambient_dim(); }
  const Filtration<T>& weight() const { return weight_; }
  const Filtration<T>& hodge() const { return hodge_; }
  Filtration<T> hodge_conjugate() const { return hodge_.conjugate(); }
  const Subspace<T>& W(int m) const { return weight_[-m]; }
  // the m with Gr^W_m nonzero, increasing
  std::vector<int> weights() const;

  bool operator==(const MixedHodgeStructure& o) const { return weight_ == o.weight_ && hodge_ == o.hodge_; }

 private:
  Filtration<T> weight_, hodge_;
};

// Tate structure T<k>, of type (-k,-k).
template <class T>
MixedHodgeStructure<T> tate(int k);

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

template <class T>
Validation validate(const MixedHodgeStructure<T>& h);

struct HodgeNumbers {
  Dims2 h, t, f;
};

// Throws InvalidStructure when validate fails.
template <class T>
HodgeNumbers hodge_numbers(const MixedHodgeStructure<T>& h);

// 1/2 Σ (p+q)^2 (h - t)
long alpha_from_tables(const Dims2& h, const Dims2& t);

template <class T>
long alpha(const MixedHodgeStructure<T>& h);

template <class T>
struct DeligneSplitting {
  size_t ambient_dim = 0;
  std::map<std::pair<int, int>, Subspace<T>> pieces;  // nonzero I^{p,q} only

  Subspace<T> at(int p, int q) const {
    auto it = pieces.find({p, q});
    return it == pieces.end() ? Subspace<T>(ambient_dim) : it->second;
  }
};

template <class T>
DeligneSplitting<T> deligne_splitting(const MixedHodgeStructure<T>& h);

// Which clauses of the splitting lemma hold; the first failure is described.
struct DeligneLemmaCheck {
  bool conjugate_mod_lower = true;  // I^{p,q} ⊆ conj I^{q,p} + W_{p+q-2}
  bool weight_sum = true;           // W_m = ⊕_{p+q<=m} I^{p,q}
  bool hodge_sum = true;            // F^p = ⊕_{i>=p} I^{i,q}
  bool dims_match = true;           // dim I^{p,q} = h^{p,q}
  std::string diagnostic;
  bool all() const { return conjugate_mod_lower && weight_sum && hodge_sum && dims_match; }
};

template <class T>
DeligneLemmaCheck check_deligne_lemma(const MixedHodgeStructure<T>& h, const DeligneSplitting<T>& s,
                                      const HodgeNumbers& numbers);

template <class T>
bool is_r_split(const MixedHodgeStructure<T>& h);

template <class T>
bool is_r_split(const DeligneSplitting<T>& s);

template <class T>
MixedHodgeStructure<T> tate_twist(const MixedHodgeStructure<T>& h, int k);

template <class T>
MixedHodgeStructure<T> dual(const MixedHodgeStructure<T>& h);

template <class T>
MixedHodgeStructure<T> direct_sum(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b);

template <class T>
MixedHodgeStructure<T> tensor(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b);

// Image under a real invertible change of coordinates.
template <class T>
MixedHodgeStructure<T> transform(const MixedHodgeStructure<T>& h, const Matrix<T>& g);

// theta : B -> A must lower weight, theta(W_m B) ⊆ W_{m-1} A.
template <class T>
bool weight_compatible(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b, const Matrix<T>& theta);

// H on A ⊕ B with W = W_A ⊕ W_B and F^p = {(x + theta y, y) : x ∈ F^p_A, y ∈ F^p_B}.
template <class T>
MixedHodgeStructure<T> extension_build(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b,
                                       const Matrix<T>& theta);

// Chern data of the Rees bundle of (W^•, F, conj F); ch2 is -alpha.
template <class T>
ChernP2 chern_of(const MixedHodgeStructure<T>& h);

}  // namespace hodgerees
