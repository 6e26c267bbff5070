#include "hodgerees/mhs.hpp"

#include <algorithm>

namespace hodgerees {

template <class T>
MixedHodgeStructure<T>::MixedHodgeStructure(Filtration<T> weight, Filtration<T> hodge)
    : weight_(std::move(weight)), hodge_(std::move(hodge)) {
  if (weight_.ambient_dim() != hodge_.ambient_dim())
    throw DimensionMismatch("weight and Hodge filtrations live on different spaces");
}

template <class T>
std::vector<int> MixedHodgeStructure<T>::weights() const {
  std::vector<int> out;
  for (int p : weight_.jumps()) out.push_back(-p);
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
MixedHodgeStructure<T> tate(int k) {
  return MixedHodgeStructure<T>(Filtration<T>(1, 2 * k + 1, {}), Filtration<T>(1, -k + 1, {}));
}

namespace {

template <class T>
Validation check_structure(const MixedHodgeStructure<T>& h, const Dims3& delta) {
  for (int p = h.weight().lowest(); p < h.weight().end(); ++p)
    if (!h.weight()[p].is_real()) return {false, "weight filtration not real at W_" + std::to_string(-p)};
  // (p, q, r) with r = -m: F^p, conj F^q on Gr^W_m must satisfy p + q = m
  for (auto const& [k, v] : delta.entries)
    if (k[0] + k[1] + k[2] != 0)
      return {false, "Gr^W_" + std::to_string(-k[2]) + " is not pure: Hodge type (" + std::to_string(k[0]) + "," +
                         std::to_string(k[1]) + ") appears"};
  return {};
}

template <class T>
Dims3 weight_delta(const MixedHodgeStructure<T>& h) {
  return triple_graded_dims(h.weight(), h.hodge(), h.hodge_conjugate());
}

}  // namespace

template <class T>
Validation validate(const MixedHodgeStructure<T>& h) {
  return check_structure(h, weight_delta(h));
}

template <class T>
HodgeNumbers hodge_numbers(const MixedHodgeStructure<T>& h) {
  Dims3 delta = weight_delta(h);
  Validation v = check_structure(h, delta);
  if (!v) throw InvalidStructure(v.diagnostic);
  HodgeNumbers out;
  for (auto const& [k, n] : delta.entries) out.h.add({k[0], k[1]}, n);
  Filtration<T> fbar = h.hodge_conjugate();
  out.t = double_graded_dims(h.hodge(), fbar);
  out.f = intersection_dims(h.hodge(), fbar);
  return out;
}

long alpha_from_tables(const Dims2& h, const Dims2& t) {
  long s = 0;
  for (auto const& [k, v] : h.entries) s += (k[0] + k[1]) * (k[0] + k[1]) * v;
  for (auto const& [k, v] : t.entries) s -= (k[0] + k[1]) * (k[0] + k[1]) * v;
  if (s % 2 != 0) throw std::logic_error("odd alpha numerator " + std::to_string(s));
  return s / 2;
}

template <class T>
long alpha(const MixedHodgeStructure<T>& h) {
  Dims3 delta = weight_delta(h);
  Validation v = check_structure(h, delta);
  if (!v) throw InvalidStructure(v.diagnostic);
  Dims2 hn;
  for (auto const& [k, n] : delta.entries) hn.add({k[0], k[1]}, n);
  return alpha_from_tables(hn, double_graded_dims(h.hodge(), h.hodge_conjugate()));
}

template <class T>
DeligneSplitting<T> deligne_splitting(const MixedHodgeStructure<T>& h) {
  Validation v = validate(h);
  if (!v) throw InvalidStructure(v.diagnostic);
  const size_t n = h.dim();
  DeligneSplitting<T> out;
  out.ambient_dim = n;
  if (n == 0) return out;
  const Filtration<T>& F = h.hodge();
  const Filtration<T> Fbar = h.hodge_conjugate();
  const std::vector<int> ws = h.weights();
  const int lowest_weight = ws.front();
  for (int m : ws) {
    const Subspace<T>& Wm = h.W(m);
    for (int p = F.lowest() - 1; p < F.end(); ++p) {
      const int q = m - p;
      Subspace<T> left = intersect(F[p], Wm);
      if (left.is_zero()) continue;
      Subspace<T> right = intersect(Fbar[q], Wm);
      for (int i = 1; m - i - 1 >= lowest_weight; ++i) right = right + intersect(Fbar[q - i], h.W(m - i - 1));
      Subspace<T> piece = intersect(left, right);
      if (!piece.is_zero()) out.pieces.emplace(std::make_pair(p, q), std::move(piece));
    }
  }
  return out;
}

template <class T>
DeligneLemmaCheck check_deligne_lemma(const MixedHodgeStructure<T>& h, const DeligneSplitting<T>& s,
                                      const HodgeNumbers& numbers) {
  DeligneLemmaCheck out;
  const size_t n = h.dim();
  auto fail = [&](bool& flag, std::string msg) {
    if (flag && out.diagnostic.empty()) out.diagnostic = std::move(msg);
    flag = false;
  };
  for (auto const& [k, I] : s.pieces) {
    auto [p, q] = k;
    if (!(s.at(q, p).conjugate() + h.W(p + q - 2)).contains(I))
      fail(out.conjugate_mod_lower, "I^{" + std::to_string(p) + "," + std::to_string(q) + "} not conjugate mod W");
    if (long(I.dim()) != numbers.h({p, q}))
      fail(out.dims_match, "dim I^{" + std::to_string(p) + "," + std::to_string(q) + "} != h");
  }
  for (auto const& [k, v] : numbers.h.entries)
    if (s.pieces.find({k[0], k[1]}) == s.pieces.end())
      fail(out.dims_match, "I^{" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "} missing");

  auto direct_sum_of = [&](auto&& pred, size_t& total) {
    Subspace<T> acc(n);
    total = 0;
    for (auto const& [k, I] : s.pieces)
      if (pred(k.first, k.second)) {
        acc = acc + I;
        total += I.dim();
      }
    return acc;
  };
  std::vector<int> ws = h.weights();
  if (!ws.empty()) {
    for (int m = ws.front() - 1; m <= ws.back(); ++m) {
      size_t total = 0;
      Subspace<T> acc = direct_sum_of([&](int p, int q) { return p + q <= m; }, total);
      if (acc.dim() != total || acc != h.W(m)) fail(out.weight_sum, "W_" + std::to_string(m) + " mismatch");
    }
  }
  const Filtration<T>& F = h.hodge();
  for (int p = F.lowest() - 1; p <= F.end(); ++p) {
    size_t total = 0;
    Subspace<T> acc = direct_sum_of([&](int i, int) { return i >= p; }, total);
    if (acc.dim() != total || acc != F[p]) fail(out.hodge_sum, "F^" + std::to_string(p) + " mismatch");
  }
  return out;
}

template <class T>
bool is_r_split(const DeligneSplitting<T>& s) {
  for (auto const& [k, I] : s.pieces)
    if (I.conjugate() != s.at(k.second, k.first)) return false;
  return true;
}

template <class T>
bool is_r_split(const MixedHodgeStructure<T>& h) {
  return is_r_split(deligne_splitting(h));
}

template <class T>
MixedHodgeStructure<T> tate_twist(const MixedHodgeStructure<T>& h, int k) {
  return MixedHodgeStructure<T>(h.weight().shifted(2 * k), h.hodge().shifted(-k));
}

namespace {

// G^p = ann(F^{1-p})
template <class T>
Filtration<T> dual_filtration(const Filtration<T>& f) {
  const size_t n = f.ambient_dim();
  if (n == 0) return f;
  const int lo = 2 - f.end(), hi = 1 - f.lowest();
  std::vector<Subspace<T>> steps;
  for (int p = lo; p <= hi; ++p) steps.push_back(annihilator(f[1 - p]));
  return Filtration<T>(n, lo, std::move(steps));
}

}  // namespace

template <class T>
MixedHodgeStructure<T> dual(const MixedHodgeStructure<T>& h) {
  Validation v = validate(h);
  if (!v) throw InvalidStructure(v.diagnostic);
  // W^p(H*) = W_{-p}(H*) = ann W_{p-1}(H) = ann W^{1-p}(H), the same rule as F
  return MixedHodgeStructure<T>(dual_filtration(h.weight()), dual_filtration(h.hodge()));
}

template <class T>
MixedHodgeStructure<T> direct_sum(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b) {
  return MixedHodgeStructure<T>(direct_sum(a.weight(), b.weight()), direct_sum(a.hodge(), b.hodge()));
}

template <class T>
MixedHodgeStructure<T> tensor(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b) {
  return MixedHodgeStructure<T>(tensor(a.weight(), b.weight()), tensor(a.hodge(), b.hodge()));
}

template <class T>
MixedHodgeStructure<T> transform(const MixedHodgeStructure<T>& h, const Matrix<T>& g) {
  if (!g.is_real()) throw std::invalid_argument("change of basis must be real");
  return MixedHodgeStructure<T>(h.weight().apply(g), h.hodge().apply(g));
}

template <class T>
bool weight_compatible(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b, const Matrix<T>& theta) {
  if (theta.rows() != a.dim() || theta.cols() != b.dim())
    throw DimensionMismatch("theta must be " + std::to_string(a.dim()) + "x" + std::to_string(b.dim()));
  for (int m : b.weights())
    if (!a.W(m - 1).contains(b.W(m).apply(theta))) return false;
  return true;
}

template <class T>
MixedHodgeStructure<T> extension_build(const MixedHodgeStructure<T>& a, const MixedHodgeStructure<T>& b,
                                       const Matrix<T>& theta) {
  if (!weight_compatible(a, b, theta))
    throw WeightIncompatible("theta does not map W_m(B) into W_{m-1}(A)");
  const size_t na = a.dim(), nb = b.dim(), n = na + nb;
  const Filtration<T>& FA = a.hodge();
  const Filtration<T>& FB = b.hodge();
  const int lo = std::min(FA.lowest(), FB.lowest()), hi = std::max(FA.end(), FB.end());
  std::vector<Subspace<T>> steps;
  for (int p = lo; p < hi; ++p) {
    Matrix<T> rows(0, n);
    const Matrix<T>& xa = FA[p].basis();
    for (size_t r = 0; r < xa.rows(); ++r) {
      std::vector<T> v(n, T(0));
      for (size_t c = 0; c < na; ++c) v[c] = xa(r, c);
      rows.append_row(v);
    }
    const Matrix<T>& yb = FB[p].basis();
    for (size_t r = 0; r < yb.rows(); ++r) {
      std::vector<T> v(n, T(0));
      for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) v[i] += theta(i, j) * yb(r, j);
      for (size_t c = 0; c < nb; ++c) v[na + c] = yb(r, c);
      rows.append_row(v);
    }
    steps.emplace_back(rows);
  }
  return MixedHodgeStructure<T>(direct_sum(a.weight(), b.weight()), Filtration<T>(n, lo, std::move(steps)));
}

template <class T>
ChernP2 chern_of(const MixedHodgeStructure<T>& h) {
  return chern_rees_p2(h.weight(), h.hodge(), h.hodge_conjugate());
}

#define HODGEREES_INSTANTIATE(T)                                                                               \
  template class MixedHodgeStructure<T>;                                                                       \
  template MixedHodgeStructure<T> tate(int);                                                                   \
  template Validation validate(const MixedHodgeStructure<T>&);                                                 \
  template HodgeNumbers hodge_numbers(const MixedHodgeStructure<T>&);                                          \
  template long alpha(const MixedHodgeStructure<T>&);                                                          \
  template DeligneSplitting<T> deligne_splitting(const MixedHodgeStructure<T>&);                               \
  template DeligneLemmaCheck check_deligne_lemma(const MixedHodgeStructure<T>&, const DeligneSplitting<T>&,    \
                                                 const HodgeNumbers&);                                         \
  template bool is_r_split(const MixedHodgeStructure<T>&);                                                     \
  template bool is_r_split(const DeligneSplitting<T>&);                                                        \
  template MixedHodgeStructure<T> tate_twist(const MixedHodgeStructure<T>&, int);                              \
  template MixedHodgeStructure<T> dual(const MixedHodgeStructure<T>&);                                         \
  template MixedHodgeStructure<T> direct_sum(const MixedHodgeStructure<T>&, const MixedHodgeStructure<T>&);    \
  template MixedHodgeStructure<T> tensor(const MixedHodgeStructure<T>&, const MixedHodgeStructure<T>&);        \
  template MixedHodgeStructure<T> transform(const MixedHodgeStructure<T>&, const Matrix<T>&);                  \
  template bool weight_compatible(const MixedHodgeStructure<T>&, const MixedHodgeStructure<T>&,                \
                                  const Matrix<T>&);                                                           \
  template MixedHodgeStructure<T> extension_build(const MixedHodgeStructure<T>&, const MixedHodgeStructure<T>&, \
                                                  const Matrix<T>&);                                           \
  template ChernP2 chern_of(const MixedHodgeStructure<T>&);

HODGEREES_INSTANTIATE(GaussianRational)
HODGEREES_INSTANTIATE(Complex)

}  // namespace hodgerees
