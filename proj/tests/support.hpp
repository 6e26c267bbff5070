#pragma once

#include "hodgerees/generators.hpp"

namespace hodgerees::testing {

using Q = GaussianRational;
using S = Subspace<Q>;
using F = Filtration<Q>;
using H = MixedHodgeStructure<Q>;

inline S span(size_t n, std::vector<std::vector<Q>> rows) { return S(n, rows); }

// W_0 = span(e1) ⊂ W_2 = C^2, F^1 = span(e2 + c e1).
template <class T = Q>
MixedHodgeStructure<T> h_c(T c) {
  using Sub = Subspace<T>;
  std::map<int, Sub> w{{0, Sub(2, {{T(1), T(0)}})}, {2, Sub::full(2)}};
  std::map<int, Sub> f{{0, Sub::full(2)}, {1, Sub(2, {{c, T(1)}})}};
  return MixedHodgeStructure<T>::from_weights(2, w, Filtration<T>::from_levels(2, f));
}

// A single line shifted to level k.
inline F line_at(const std::vector<Q>& v, int k) {
  return F::from_levels(v.size(), {{k - 1, S::full(v.size())}, {k, S(v.size(), {v})}});
}

}  // namespace hodgerees::testing
