#include "hodgerees/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hodgerees {

namespace {

template <class T>
void check_ambient(const Filtration<T>& a, const Filtration<T>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("filtrations live on different ambient spaces (" + std::to_string(a.ambient_dim()) +
                            " vs " + std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

template <class T>
Filtration<T>::Filtration(size_t ambient, int lowest, std::vector<Subspace<T>> steps)
    : ambient_(ambient), lo_(lowest), steps_(std::move(steps)), full_(Subspace<T>::full(ambient)), zero_(ambient) {
  for (auto const& s : steps_)
    if (s.ambient_dim() != ambient_) throw DimensionMismatch("filtration step has wrong ambient dimension");
  for (size_t k = 0; k + 1 < steps_.size(); ++k)
    if (!steps_[k].contains(steps_[k + 1]))
      throw std::invalid_argument("filtration is not decreasing at level " + std::to_string(lo_ + int(k) + 1));
  size_t first = 0;
  while (first < steps_.size() && steps_[first].is_full()) ++first;
  size_t last = steps_.size();
  while (last > first && steps_[last - 1].is_zero()) --last;
  steps_ = std::vector<Subspace<T>>(steps_.begin() + first, steps_.begin() + last);
  lo_ += static_cast<int>(first);
  if (steps_.empty() && ambient_ == 0) lo_ = 0;
}

template <class T>
Filtration<T> Filtration<T>::trivial(size_t n) {
  return Filtration(n, 1, {});
}

template <class T>
Filtration<T> Filtration<T>::from_levels(size_t n, const std::map<int, Subspace<T>>& levels) {
  if (levels.empty()) return trivial(n);
  int lo = levels.begin()->first, hi = levels.rbegin()->first;
  std::vector<Subspace<T>> steps;
  auto it = levels.begin();
  for (int p = lo; p <= hi; ++p) {
    auto next = std::next(it);
    if (next != levels.end() && next->first == p) it = next;
    steps.push_back(it->second);
  }
  return Filtration(n, lo, std::move(steps));
}

template <class T>
const Subspace<T>& Filtration<T>::operator[](int p) const {
  if (p < lo_) return full_;
  if (p >= end()) return zero_;
  return steps_[p - lo_];
}

template <class T>
Filtration<T> Filtration<T>::shifted(int r) const {
  if (ambient_ == 0) return *this;
  Filtration out = *this;
  out.lo_ += r;
  return out;
}

template <class T>
Filtration<T> Filtration<T>::conjugate() const {
  std::vector<Subspace<T>> steps;
  for (auto const& s : steps_) steps.push_back(s.conjugate());
  return Filtration(ambient_, lo_, std::move(steps));
}

template <class T>
Filtration<T> Filtration<T>::apply(const Matrix<T>& g) const {
  std::vector<Subspace<T>> steps;
  for (auto const& s : steps_) steps.push_back(s.apply(g));
  return Filtration(g.rows(), lo_, std::move(steps));
}

template <class T>
bool Filtration<T>::is_real() const {
  for (auto const& s : steps_)
    if (!s.is_real()) return false;
  return true;
}

template <class T>
std::vector<int> Filtration<T>::jumps() const {
  std::vector<int> out;
  for (int p = lo_ - 1; p < end(); ++p)
    if (dim_at(p) != dim_at(p + 1)) out.push_back(p);
  return out;
}

template <class T>
Filtration<T> from_increasing(size_t n, const std::map<int, Subspace<T>>& w) {
  if (w.empty()) {
    if (n == 0) return Filtration<T>::trivial(0);
    throw std::invalid_argument("empty weight filtration");
  }
  if (!w.rbegin()->second.is_full()) throw std::invalid_argument("weight filtration is not exhaustive");
  // W^p = W_{-p}: listed weight m becomes level -m, and the gap rule flips
  // from "nearest below" to "nearest above", i.e. nearest below in p.
  int lo = -w.rbegin()->first, hi = -w.begin()->first;
  std::vector<Subspace<T>> steps;
  for (int p = lo; p <= hi; ++p) {
    auto it = w.upper_bound(-p);  // first weight > -p
    steps.push_back(std::prev(it)->second);
  }
  return Filtration<T>(n, lo, std::move(steps));
}

template <class T>
std::map<int, Subspace<T>> to_increasing(const Filtration<T>& f) {
  std::map<int, Subspace<T>> out;
  for (int p = f.end(); p >= f.lowest() - 1; --p) out.emplace(-p, f[p]);
  return out;
}

namespace {

// Inclusion-exclusion of g over p in [p0, p1], q in [q0, q1]; g is evaluated
// one step past the upper ends where it must vanish.
template <class G>
Dims2 difference_table(int p0, int p1, int q0, int q1, G&& g) {
  std::map<std::pair<int, int>, long> cache;
  auto at = [&](int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    long v = (p > p1 || q > q1) ? 0 : g(p, q);
    cache.emplace(key, v);
    return v;
  };
  Dims2 out;
  for (int p = p0; p <= p1; ++p)
    for (int q = q0; q <= q1; ++q) out.add({p, q}, at(p, q) - at(p + 1, q) - at(p, q + 1) + at(p + 1, q + 1));
  return out;
}

}  // namespace

namespace {

// Echelon basis grown one vector at a time.  Each stored row vanishes at the
// lead columns of the rows stored before it, so reducing a new vector in
// insertion order never disturbs earlier leads.
template <class T>
class RowEchelon {
 public:
  explicit RowEchelon(size_t n) : n_(n) {}

  size_t size() const { return rows_.size(); }
  const std::vector<T>& row(size_t k) const { return rows_[k]; }

  // Reduced copy of the first k rows.
  RowEchelon prefix(size_t k) const {
    RowEchelon out(n_);
    out.rows_.assign(rows_.begin(), rows_.begin() + k);
    out.lead_.assign(lead_.begin(), lead_.begin() + k);
    return out;
  }

  // Adds v if it is independent of the stored rows; returns whether it was.
  bool insert(std::vector<T> v) {
    double thresh = 0;
    if constexpr (!ScalarTraits<T>::exact) {
      for (auto const& x : v) thresh = std::max(thresh, std::abs(x));
      thresh *= float_tolerance();
    }
    for (size_t k = 0; k < rows_.size(); ++k) {
      const size_t l = lead_[k];
      const T& x = v[l];
      if (ScalarTraits<T>::is_zero(x, 0)) continue;
      const auto& e = rows_[k];
      for (size_t c = 0; c < n_; ++c)
        if (c != l && !ScalarTraits<T>::is_zero(e[c], 0)) {
          if constexpr (ScalarTraits<T>::exact)
            v[c].sub_product(x, e[c]);
          else
            v[c] -= x * e[c];
        }
      v[l] = T(0);
    }
    size_t piv = n_;
    if constexpr (ScalarTraits<T>::exact) {
      for (size_t c = 0; c < n_ && piv == n_; ++c)
        if (!v[c].is_zero()) piv = c;
    } else {
      double best = thresh;
      for (size_t c = 0; c < n_; ++c)
        if (std::abs(v[c]) > best) {
          best = std::abs(v[c]);
          piv = c;
        }
    }
    if (piv == n_) return false;
    const T inv = T(1) / v[piv];
    for (auto& x : v)
      if (!ScalarTraits<T>::is_zero(x, 0)) x *= inv;
    v[piv] = T(1);
    rows_.push_back(std::move(v));
    lead_.push_back(piv);
    return true;
  }

 private:
  size_t n_;
  std::vector<std::vector<T>> rows_;
  std::vector<size_t> lead_;
};

// Echelon of a decreasing chain of subspaces given shallowest first.  The
// chain member k is spanned by the first dims[k] stored rows.
template <class T>
struct Chain {
  RowEchelon<T> echelon;
  std::vector<size_t> dims;
};

template <class T>
Chain<T> chain_echelon(size_t n, const std::vector<Matrix<T>>& members) {
  Chain<T> out{RowEchelon<T>(n), std::vector<size_t>(members.size())};
  for (size_t k = members.size(); k-- > 0;) {
    const Matrix<T>& b = members[k];
    for (size_t r = 0; r < b.rows(); ++r) out.echelon.insert(b.row(r));
    out.dims[k] = out.echelon.size();
  }
  return out;
}

// table[i][j] = dim(x_i ∩ y_j) for two chains on the same space.
template <class T>
std::vector<std::vector<long>> chain_intersections(size_t n, const Chain<T>& x, const Chain<T>& y) {
  std::vector<std::vector<long>> table(x.dims.size(), std::vector<long>(y.dims.size(), 0));
  const size_t ymax = y.dims.empty() ? 0 : y.dims.front();
  for (size_t i = 0; i < x.dims.size(); ++i) {
    const size_t a = x.dims[i];
    if (a == 0 || ymax == 0) continue;
    // insert y rows deepest first, noting the rank after each chain member
    RowEchelon<T> e = x.echelon.prefix(a);
    std::vector<size_t> rank_after(ymax + 1, a);
    for (size_t k = 0; k < ymax; ++k) {
      if (e.size() < n) e.insert(y.echelon.row(k));
      rank_after[k + 1] = e.size();
    }
    for (size_t j = 0; j < y.dims.size(); ++j) {
      const size_t b = y.dims[j];
      table[i][j] = long(a + b) - long(rank_after[b]);
    }
  }
  return table;
}

// Bases of f^p for p from lowest()-1 to end()-1.
template <class T>
std::vector<Matrix<T>> steps_of(const Filtration<T>& f) {
  std::vector<Matrix<T>> out;
  for (int p = f.lowest() - 1; p < f.end(); ++p) out.push_back(f[p].basis());
  return out;
}

// Rows b_0..b_{n-1} such that F^r is spanned by the last dim F^r of them.
template <class T>
Matrix<T> adapted_basis(const Filtration<T>& f) {
  const size_t n = f.ambient_dim();
  Chain<T> c = chain_echelon(n, steps_of(f));
  Matrix<T> out(0, n);
  for (size_t k = c.echelon.size(); k-- > 0;) out.append_row(c.echelon.row(k));
  return out;
}

}  // namespace

template <class T>
Dims2 intersection_dims(const Filtration<T>& f1, const Filtration<T>& f2) {
  check_ambient(f1, f2);
  Dims2 out;
  const size_t n = f1.ambient_dim();
  if (n == 0) return out;
  const auto table = chain_intersections(n, chain_echelon(n, steps_of(f1)), chain_echelon(n, steps_of(f2)));
  for (int p = f1.lowest() - 1; p <= f1.end(); ++p)
    for (int q = f2.lowest() - 1; q < f2.end(); ++q)
      out.add({p, q}, p < f1.end() ? table[size_t(p - f1.lowest() + 1)][size_t(q - f2.lowest() + 1)] : 0);
  return out;
}

template <class T>
Dims2 double_graded_dims(const Filtration<T>& f1, const Filtration<T>& f2) {
  check_ambient(f1, f2);
  const size_t n = f1.ambient_dim();
  if (n == 0) return {};
  const auto table = chain_intersections(n, chain_echelon(n, steps_of(f1)), chain_echelon(n, steps_of(f2)));
  const int p0 = f1.lowest() - 1, q0 = f2.lowest() - 1;
  return difference_table(p0, f1.end() - 1, q0, f2.end() - 1,
                          [&](int p, int q) { return table[size_t(p - p0)][size_t(q - q0)]; });
}

// In a basis adapted to f0 every F0^r is a coordinate tail, so F_i^p ∩ F0^r is
// spanned by the RREF rows with pivot in the tail and Gr^r is a block of
// columns.
template <class T>
Dims3 triple_graded_dims(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  check_ambient(f0, f1);
  check_ambient(f0, f2);
  Dims3 out;
  const size_t n = f0.ambient_dim();
  if (n == 0) return out;
  const Matrix<T> to_adapted = inverse(adapted_basis(f0));
  auto rebase = [&](const Filtration<T>& f) {
    std::vector<std::pair<Matrix<T>, std::vector<size_t>>> steps;
    for (int p = f.lowest() - 1; p < f.end(); ++p) {
      std::vector<size_t> piv;
      Matrix<T> m = f[p].is_full() ? Matrix<T>::identity(n) : rref(f[p].basis() * to_adapted, piv);
      if (f[p].is_full())
        for (size_t k = 0; k < n; ++k) piv.push_back(k);
      steps.emplace_back(std::move(m), std::move(piv));
    }
    return steps;
  };
  const auto g1 = rebase(f1), g2 = rebase(f2);
  const int p0 = f1.lowest() - 1, p1 = f1.end() - 1;
  const int q0 = f2.lowest() - 1, q1 = f2.end() - 1;
  // rows with pivot in [lo, n), restricted to columns [lo, hi)
  auto slices = [&](const auto& steps, size_t lo, size_t hi) {
    std::vector<Matrix<T>> out;
    for (auto const& [m, piv] : steps) {
      Matrix<T> s(0, hi - lo);
      for (size_t r = 0; r < m.rows(); ++r) {
        if (piv[r] < lo) continue;
        std::vector<T> v(hi - lo);
        for (size_t c = lo; c < hi; ++c) v[c - lo] = m(r, c);
        s.append_row(v);
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  for (int r = f0.lowest() - 1; r < f0.end(); ++r) {
    const size_t lo = n - f0.dim_at(r), hi = n - f0.dim_at(r + 1);
    if (lo == hi) continue;
    const auto table = chain_intersections(hi - lo, chain_echelon(hi - lo, slices(g1, lo, hi)),
                                           chain_echelon(hi - lo, slices(g2, lo, hi)));
    Dims2 t = difference_table(p0, p1, q0, q1, [&](int p, int q) { return table[size_t(p - p0)][size_t(q - q0)]; });
    for (auto const& [k, v] : t.entries) out.add({k[0], k[1], r}, v);
  }
  return out;
}

template <class T>
size_t multifilt_dim(const std::vector<Filtration<T>>& filtrations, const std::vector<int>& levels) {
  if (filtrations.size() != levels.size()) throw DimensionMismatch("one level per filtration expected");
  if (filtrations.empty()) return 0;
  Subspace<T> acc = filtrations[0][levels[0]];
  for (size_t k = 1; k < filtrations.size(); ++k) {
    check_ambient(filtrations[0], filtrations[k]);
    if (acc.is_zero()) break;
    acc = intersect(acc, filtrations[k][levels[k]]);
  }
  return acc.dim();
}

template <class T>
Subspace<T> Bigrading<T>::first(int p) const {
  Subspace<T> acc(ambient_dim);
  for (auto const& [k, v] : pieces)
    if (k.first >= p) acc = acc + v;
  return acc;
}

template <class T>
Subspace<T> Bigrading<T>::second(int q) const {
  Subspace<T> acc(ambient_dim);
  for (auto const& [k, v] : pieces)
    if (k.second >= q) acc = acc + v;
  return acc;
}

template <class T>
bool Bigrading<T>::independent() const {
  Subspace<T> acc(ambient_dim);
  size_t total = 0;
  for (auto const& [k, v] : pieces) {
    acc = acc + v;
    total += v.dim();
  }
  return acc.dim() == total;
}

template <class T>
Bigrading<T> simultaneous_bigrading(const Filtration<T>& f1, const Filtration<T>& f2) {
  check_ambient(f1, f2);
  const size_t n = f1.ambient_dim();
  Bigrading<T> out;
  out.ambient_dim = n;
  if (n == 0) return out;
  // descend from the top of the lattice F1^k ∩ F2^l, completing bases
  for (int k = f1.end() - 1; k >= f1.lowest() - 1; --k) {
    for (int l = f2.end() - 1; l >= f2.lowest() - 1; --l) {
      Subspace<T> here = intersect(f1[k], f2[l]);
      Subspace<T> span = intersect(f1[k + 1], f2[l]) + intersect(f1[k], f2[l + 1]);
      if (span.dim() == here.dim()) continue;
      Matrix<T> chosen(0, n);
      for (size_t r = 0; r < here.dim() && span.dim() < here.dim(); ++r) {
        Subspace<T> v(Matrix<T>(n, {here.basis().row(r)}));
        Subspace<T> grown = span + v;
        if (grown.dim() > span.dim()) {
          chosen.append_row(here.basis().row(r));
          span = std::move(grown);
        }
      }
      out.pieces.emplace(std::make_pair(k, l), Subspace<T>(chosen));
    }
  }
  return out;
}

template <class T>
bool are_opposed(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  for (auto const& [k, v] : triple_graded_dims(f0, f1, f2).entries)
    if (k[0] + k[1] + k[2] != 0) return false;
  return true;
}

template <class T>
bool split_compatibility_check(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  Dims3 delta = triple_graded_dims(f0, f1, f2);
  std::vector<Filtration<T>> fs{f0, f1, f2};
  for (int r = f0.lowest() - 1; r <= f0.end(); ++r)
    for (int p = f1.lowest() - 1; p <= f1.end(); ++p)
      for (int q = f2.lowest() - 1; q <= f2.end(); ++q) {
        long mass = 0;
        for (auto const& [k, v] : delta.entries)
          if (k[0] >= p && k[1] >= q && k[2] >= r) mass += v;
        if (long(multifilt_dim(fs, {r, p, q})) != mass) return false;
      }
  return true;
}

template <class T>
Filtration<T> direct_sum(const Filtration<T>& a, const Filtration<T>& b) {
  const size_t n = a.ambient_dim() + b.ambient_dim();
  int lo = std::min(a.lowest(), b.lowest());
  int hi = std::max(a.end(), b.end());
  std::vector<Subspace<T>> steps;
  for (int p = lo; p < hi; ++p) steps.push_back(direct_sum(a[p], b[p]));
  return Filtration<T>(n, lo, std::move(steps));
}

template <class T>
Filtration<T> tensor(const Filtration<T>& a, const Filtration<T>& b) {
  const size_t n = a.ambient_dim() * b.ambient_dim();
  if (n == 0) return Filtration<T>::trivial(0);
  // with adapted bases, F^p of the product is spanned by the products of
  // basis vectors whose levels add up to at least p
  auto leveled = [](const Filtration<T>& f) {
    const Matrix<T> basis = adapted_basis(f);
    const size_t m = f.ambient_dim();
    std::vector<std::pair<int, std::vector<T>>> out;
    for (size_t k = 0; k < m; ++k) {
      int level = f.lowest() - 1;
      while (f.dim_at(level + 1) >= m - k) ++level;
      out.emplace_back(level, basis.row(k));
    }
    return out;
  };
  const auto va = leveled(a), vb = leveled(b);
  const int lo = (a.lowest() - 1) + (b.lowest() - 1) + 1;
  const int hi = (a.end() - 1) + (b.end() - 1);
  std::vector<Subspace<T>> steps;
  for (int p = lo; p <= hi; ++p) {
    Matrix<T> rows(0, n);
    for (auto const& [la, x] : va)
      for (auto const& [lb, y] : vb) {
        if (la + lb < p) continue;
        std::vector<T> v(n);
        for (size_t i = 0; i < x.size(); ++i) {
          if (ScalarTraits<T>::is_zero(x[i], 0)) continue;
          for (size_t j = 0; j < y.size(); ++j) v[i * y.size() + j] = x[i] * y[j];
        }
        rows.append_row(v);
      }
    steps.emplace_back(rows);
  }
  return Filtration<T>(n, lo, std::move(steps));
}

#define HODGEREES_INSTANTIATE(T)                                                                                    \
  template class Filtration<T>;                                                                                     \
  template struct Bigrading<T>;                                                                                     \
  template Filtration<T> from_increasing(size_t, const std::map<int, Subspace<T>>&);                                \
  template std::map<int, Subspace<T>> to_increasing(const Filtration<T>&);                                          \
  template Dims2 intersection_dims(const Filtration<T>&, const Filtration<T>&);                                     \
  template Dims2 double_graded_dims(const Filtration<T>&, const Filtration<T>&);                                    \
  template Dims3 triple_graded_dims(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);              \
  template size_t multifilt_dim(const std::vector<Filtration<T>>&, const std::vector<int>&);                        \
  template Bigrading<T> simultaneous_bigrading(const Filtration<T>&, const Filtration<T>&);                         \
  template bool are_opposed(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);                      \
  template bool split_compatibility_check(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);        \
  template Filtration<T> direct_sum(const Filtration<T>&, const Filtration<T>&);                                    \
  template Filtration<T> tensor(const Filtration<T>&, const Filtration<T>&);

HODGEREES_INSTANTIATE(GaussianRational)
HODGEREES_INSTANTIATE(Complex)

}  // namespace hodgerees
