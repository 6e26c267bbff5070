#include "hodgerees/generators.hpp"

#include <algorithm>

namespace hodgerees {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int bound) {
  Rational q(mpz_class(uniform(rng, -bound, bound)), mpz_class(uniform(rng, 1, bound)));
  q.canonicalize();
  return q;
}

GaussianRational random_gaussian(Rng& rng, int bound) {
  return {random_rational(rng, bound), random_rational(rng, bound)};
}

Matrix<Exact> random_real_gl(Rng& rng, size_t n, int bound) {
  for (;;) {
    Matrix<Exact> g(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) g(r, c) = uniform(rng, -bound, bound);
    if (rank(g) == n) return g;
  }
}

Subspace<Exact> random_subspace(Rng& rng, size_t ambient, size_t dim, int bound) {
  Matrix<Exact> m(dim, ambient);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < ambient; ++c)
      m(r, c) = uniform(rng, 0, 3) == 0 ? GaussianRational(0) : random_gaussian(rng, bound);
  return Subspace<Exact>(m);
}

AdaptedMhs random_pure(Rng& rng, int w, size_t d) {
  if (w % 2 != 0 && d % 2 != 0) throw std::invalid_argument("odd weight needs even dimension");
  // Hodge types: conjugate pairs (p, w-p), p > w-p, plus (w/2, w/2) for even w
  std::vector<std::pair<int, Matrix<Exact>>> vecs;  // (p, row vector)
  size_t used = 0;
  while (used < d) {
    bool pair = d - used >= 2 && (w % 2 != 0 || uniform(rng, 0, 1) == 1);
    if (!pair) {
      Matrix<Exact> v(1, d);
      v(0, used) = 1;
      vecs.push_back({w / 2, v});
      used += 1;
      continue;
    }
    const int p = (w >= 0 ? w / 2 : (w - 1) / 2) + 1 + uniform(rng, 0, 1);
    Matrix<Exact> v(1, d), vb(1, d);
    v(0, used) = vb(0, used) = 1;
    v(0, used + 1) = GaussianRational::i();
    vb(0, used + 1) = -GaussianRational::i();
    vecs.push_back({p, v});
    vecs.push_back({w - p, vb});
    used += 2;
  }
  int top = w / 2;
  int bottom = w / 2;
  for (auto const& [p, v] : vecs) {
    top = std::max(top, p);
    bottom = std::min(bottom, p);
  }
  std::vector<Subspace<Exact>> steps;
  for (int p = bottom; p <= top; ++p) {
    Matrix<Exact> rows(0, d);
    for (auto const& [pp, v] : vecs)
      if (pp >= p) rows.append_rows(v);
    steps.emplace_back(rows);
  }
  Filtration<Exact> F(d, bottom, std::move(steps));
  // pure of weight w: W_{w-1} = 0, W_w = all
  Filtration<Exact> W(d, -w + 1, {});
  Matrix<Exact> g = random_real_gl(rng, d, 2);
  return {transform(MixedHodgeStructure<Exact>(W, F), g), std::vector<int>(d, w)};
}

AdaptedMhs random_adapted_mhs(Rng& rng, const GeneratorOptions& opt) {
  std::vector<int> pool;
  for (int w = opt.min_weight; w <= opt.max_weight; ++w) pool.push_back(w);
  std::shuffle(pool.begin(), pool.end(), rng);
  size_t length = size_t(uniform(rng, 1, int(std::min(opt.max_weight_length, pool.size()))));
  std::vector<int> ws(pool.begin(), pool.begin() + length);
  std::sort(ws.begin(), ws.end());

  AdaptedMhs acc;
  acc.mhs = MixedHodgeStructure<Exact>(Filtration<Exact>(0), Filtration<Exact>(0));
  size_t room = opt.max_dim;
  for (size_t k = 0; k < ws.size(); ++k) {
    const int w = ws[k];
    const size_t reserve = ws.size() - k - 1;  // at least one dimension left per later piece
    size_t cap = std::min<size_t>(3, room > reserve * 2 ? room - reserve * 2 : 1);
    if (w % 2 != 0 && cap < 2) continue;
    size_t d = size_t(uniform(rng, 1, int(cap)));
    if (w % 2 != 0) d = d < 2 ? 2 : d - d % 2;
    if (d > room) continue;
    AdaptedMhs piece = random_pure(rng, w, d);
    Matrix<Exact> theta = random_theta(rng, acc, piece, opt.bound);
    acc.mhs = extension_build(acc.mhs, piece.mhs, theta);
    acc.weight_of.insert(acc.weight_of.end(), piece.weight_of.begin(), piece.weight_of.end());
    room -= d;
  }
  if (acc.mhs.dim() == 0) return random_pure(rng, 0, 1);
  return acc;
}

Matrix<Exact> random_theta(Rng& rng, const AdaptedMhs& a, const AdaptedMhs& b, int bound) {
  Matrix<Exact> theta(a.weight_of.size(), b.weight_of.size());
  const int mode = uniform(rng, 0, 3);  // 0 zero, 1 real, 2-3 complex
  if (mode == 0) return theta;
  for (size_t i = 0; i < theta.rows(); ++i)
    for (size_t j = 0; j < theta.cols(); ++j) {
      if (a.weight_of[i] >= b.weight_of[j] || uniform(rng, 0, 2) == 0) continue;
      theta(i, j) = mode == 1 ? GaussianRational(random_rational(rng, bound)) : random_gaussian(rng, bound);
    }
  return theta;
}

MixedHodgeStructure<Exact> random_mhs(Rng& rng, const GeneratorOptions& opt) {
  AdaptedMhs h = random_adapted_mhs(rng, opt);
  if (!opt.basis_change) return h.mhs;
  return transform(h.mhs, random_real_gl(rng, h.mhs.dim(), 1));
}

ExtensionTriple random_extension_triple(Rng& rng, const GeneratorOptions& opt) {
  GeneratorOptions half = opt;
  half.max_dim = std::max<size_t>(1, opt.max_dim / 2);
  AdaptedMhs a = random_adapted_mhs(rng, half);
  AdaptedMhs b = random_adapted_mhs(rng, half);
  Matrix<Exact> theta = random_theta(rng, a, b, opt.bound);
  Matrix<Exact> ga = random_real_gl(rng, a.mhs.dim(), 1);
  Matrix<Exact> gb = random_real_gl(rng, b.mhs.dim(), 1);
  return {transform(a.mhs, ga), transform(b.mhs, gb), ga * theta * inverse(gb)};
}

}  // namespace hodgerees
