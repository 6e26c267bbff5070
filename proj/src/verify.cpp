#include "hodgerees/verify.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

#include "hodgerees/document.hpp"

namespace hodgerees {

namespace {

using Mhs = MixedHodgeStructure<Exact>;

// Records the checks of one case; the first failed check ends the case.
class Checker {
 public:
  size_t checks = 0;
  std::optional<std::string> failure;

  bool expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && !failure) failure = what;
    return cond && !failure;
  }
  bool failed() const { return failure.has_value(); }
  void attach(const std::string& dump) {
    if (failure) *failure += "\n" + dump;
  }
};

std::string dump(const std::string& label, const Mhs& h) { return label + " = " + to_json(h); }

template <class Body>
SuiteResult run_cases(const std::string& name, const VerifyOptions& opt, size_t cases, Body body) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Checker> out(cases);
  auto work = [&](size_t begin, size_t stride) {
    for (size_t k = begin; k < cases; k += stride) {
      if (opt.only_case && k != *opt.only_case) continue;
      Rng rng = case_rng(opt.seed, name, k);
      try {
        body(rng, out[k]);
      } catch (const std::exception& e) {
        out[k].expect(false, std::string("exception: ") + e.what());
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, unsigned(std::max<size_t>(cases, 1))));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  SuiteResult r;
  r.name = name;
  r.seed = opt.seed;
  r.cases = cases;
  for (size_t k = 0; k < cases; ++k) {
    r.checks += out[k].checks;
    if (out[k].failure) r.failures.push_back({k, *out[k].failure});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// f^{p,q} = dim(F^p ∩ conj F^q)
long f_number(const Mhs& h, const Filtration<Exact>& fbar, int p, int q) {
  return long(intersection_dim(h.hodge()[p], fbar[q]));
}

Filtration<Exact> random_filtration(Rng& rng, size_t n) {
  std::uniform_int_distribution<int> level(-2, 2);
  Matrix<Exact> basis = random_real_gl(rng, n, 2);
  // complex directions keep the three filtrations in general position
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      if (level(rng) > 0) basis(r, c) += random_gaussian(rng, 3);
  while (rank(basis) < n) basis = random_real_gl(rng, n, 2);
  std::vector<int> levels(n);
  for (auto& l : levels) l = level(rng);
  std::map<int, Subspace<Exact>> steps;
  for (int p = -2; p <= 2; ++p) {
    Matrix<Exact> rows(0, n);
    for (size_t k = 0; k < n; ++k)
      if (levels[k] >= p) rows.append_row(basis.row(k));
    steps.emplace(p, Subspace<Exact>(rows));
  }
  return Filtration<Exact>::from_levels(n, steps);
}

// Subspace of C^n of dimension d, sharing `common` random directions with
// `other` when possible so that intersections are not always minimal.
Subspace<Exact> related_subspace(Rng& rng, size_t n, size_t d, const Subspace<Exact>& other) {
  std::uniform_int_distribution<size_t> pick(0, std::min(d, other.dim()));
  const size_t common = pick(rng);
  Matrix<Exact> rows(0, n);
  for (size_t k = 0; k < common; ++k) {
    std::vector<Exact> v(n);
    for (size_t r = 0; r < other.dim(); ++r) {
      const Exact c = random_gaussian(rng, 3);
      for (size_t j = 0; j < n; ++j) v[j] += c * other.basis()(r, j);
    }
    rows.append_row(v);
  }
  rows.append_rows(random_subspace(rng, n, d - common, 5).basis());
  return Subspace<Exact>(rows);
}

// Rows of W ⊆ V1 ⊕ V2: [W1 | 0] over [A | W2] with A arbitrary.
Subspace<Exact> lift(Rng& rng, const Subspace<Exact>& w1, const Subspace<Exact>& w2, size_t d1, size_t d2) {
  Matrix<Exact> rows(0, d1 + d2);
  for (size_t r = 0; r < w1.dim(); ++r) {
    std::vector<Exact> v(d1 + d2);
    for (size_t c = 0; c < d1; ++c) v[c] = w1.basis()(r, c);
    rows.append_row(v);
  }
  std::uniform_int_distribution<int> mode(0, 2);
  const int m = mode(rng);  // 0: A = 0, 1: rational, 2: Gaussian
  for (size_t r = 0; r < w2.dim(); ++r) {
    std::vector<Exact> v(d1 + d2);
    for (size_t c = 0; c < d1; ++c)
      v[c] = m == 0 ? Exact(0) : m == 1 ? Exact(random_rational(rng, 5)) : random_gaussian(rng, 5);
    for (size_t c = 0; c < d2; ++c) v[d1 + c] = w2.basis()(r, c);
    rows.append_row(v);
  }
  return Subspace<Exact>(rows);
}

Subspace<Exact> embed_first(const Subspace<Exact>& w1, size_t d2) {
  return direct_sum(w1, Subspace<Exact>(d2));
}

// π(W) for the projection onto the last d2 coordinates
Subspace<Exact> project_second(const Subspace<Exact>& w, size_t d1, size_t d2) {
  Matrix<Exact> rows(0, d2);
  for (size_t r = 0; r < w.dim(); ++r) {
    std::vector<Exact> v(d2);
    for (size_t c = 0; c < d2; ++c) v[c] = w.basis()(r, d1 + c);
    rows.append_row(v);
  }
  return Subspace<Exact>(rows);
}

}  // namespace

Rng case_rng(uint64_t seed, const std::string& suite, size_t index) {
  std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32), uint32_t(std::hash<std::string>{}(suite)),
                    uint32_t(index)};
  return Rng(seq);
}

SuiteResult verify_operation_laws(const VerifyOptions& opt) {
  return run_cases("operation-laws", opt, opt.cases, [&](Rng& rng, Checker& c) {
    const Mhs h = random_mhs(rng, opt.generator);
    const Mhs h2 = random_mhs(rng, opt.generator);
    const long a = opt.alpha(h), a2 = opt.alpha(h2);
    const long n = long(h.dim()), n2 = long(h2.dim());
    for (int k = -2; k <= 2 && !c.failed(); ++k) {
      const Mhs twisted = tensor(h, tate<Exact>(k));
      c.expect(twisted == tate_twist(h, k), "H ⊗ T<" + std::to_string(k) + "> differs from the reindexed twist");
      const long at = opt.alpha(twisted);
      c.expect(at == a, "alpha(H ⊗ T<" + std::to_string(k) + ">) = " + std::to_string(at) + ", alpha(H) = " +
                            std::to_string(a));
    }
    if (!c.failed()) {
      const long ad = opt.alpha(dual(h));
      c.expect(ad == a, "alpha(H*) = " + std::to_string(ad) + ", alpha(H) = " + std::to_string(a));
    }
    if (!c.failed()) {
      const long as = opt.alpha(direct_sum(h, h2));
      c.expect(as == a + a2, "alpha(H ⊕ H') = " + std::to_string(as) + ", expected " + std::to_string(a + a2));
    }
    if (!c.failed()) {
      const long at = opt.alpha(tensor(h, h2));
      const long expect = n2 * a + n * a2;
      c.expect(at == expect, "alpha(H ⊗ H') = " + std::to_string(at) + ", expected " + std::to_string(expect));
    }
    c.attach(dump("H", h) + dump("H'", h2));
  });
}

SuiteResult verify_superadditivity(const VerifyOptions& opt) {
  return run_cases("superadditivity", opt, opt.cases, [&](Rng& rng, Checker& c) {
    const ExtensionTriple e = random_extension_triple(rng, opt.generator);
    const Mhs h = extension_build(e.a, e.b, e.theta);
    c.expect(bool(validate(h)), "extension is not a mixed Hodge structure: " + validate(h).diagnostic);
    const long ah = opt.alpha(h), aa = opt.alpha(e.a), ab = opt.alpha(e.b);
    c.expect(ah >= aa + ab, "alpha(H) = " + std::to_string(ah) + " < alpha(A) + alpha(B) = " + std::to_string(aa) +
                                " + " + std::to_string(ab));
    const Filtration<Exact> fh = h.hodge_conjugate(), fa = e.a.hodge_conjugate(), fb = e.b.hodge_conjugate();
    const int lo = std::min({h.hodge().lowest(), e.a.hodge().lowest(), e.b.hodge().lowest()}) - 1;
    const int hi = std::max({h.hodge().end(), e.a.hodge().end(), e.b.hodge().end()});
    for (int p = lo; p <= hi && !c.failed(); ++p)
      for (int q = lo; q <= hi && !c.failed(); ++q) {
        const long d = f_number(h, fh, p, q) - f_number(e.a, fa, p, q) - f_number(e.b, fb, p, q);
        c.expect(d <= 0, "f_H - f_A - f_B = " + std::to_string(d) + " at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
      }
    if (!c.failed()) {
      Dims2 sum = hodge_numbers(e.a).h;
      for (auto const& [k, v] : hodge_numbers(e.b).h.entries) sum.add(k, v);
      c.expect(hodge_numbers(h).h == sum, "h_H differs from h_A + h_B");
    }
    c.attach(dump("A", e.a) + dump("B", e.b) + "theta =\n" + to_string(e.theta));
  });
}

SuiteResult verify_alpha_invariants(const VerifyOptions& opt) {
  return run_cases("alpha-invariants", opt, opt.cases, [&](Rng& rng, Checker& c) {
    const Mhs h = random_mhs(rng, opt.generator);
    const HodgeNumbers n = hodge_numbers(h);
    const long a = opt.alpha(h);
    c.expect(a == alpha_from_tables(n.h, n.t), "alpha differs from its table value");
    c.expect(a >= 0, "alpha = " + std::to_string(a) + " < 0");
    const DeligneSplitting<Exact> s = deligne_splitting(h);
    const bool split = is_r_split(s);
    c.expect((a == 0) == split, "alpha = " + std::to_string(a) + " but R-split = " + (split ? "true" : "false"));
    const DeligneLemmaCheck lemma = check_deligne_lemma(h, s, n);
    c.expect(lemma.all(), "Deligne lemma: " + lemma.diagnostic);
    c.attach(dump("H", h));
  });
}

SuiteResult verify_chern(const VerifyOptions& opt) {
  return run_cases("chern", opt, opt.cases, [&](Rng& rng, Checker& c) {
    const Mhs h = random_mhs(rng, opt.generator);
    const Filtration<Exact> fbar = h.hodge_conjugate();
    const ChernP2 p2 = chern_rees_p2(h.weight(), h.hodge(), fbar);
    c.expect(p2 == chern_rees_p2_opposed(h.weight(), h.hodge(), fbar), "chern_rees_p2 differs from the opposed form");
    c.expect(p2.c1w2 == 0, "c1 = " + std::to_string(p2.c1w2) + " on a mixed Hodge structure");
    const ChernBlowup bl = chern_rees_blowup(h.weight(), h.hodge(), fbar);
    const ChernP2 qs = chern_quotient_sheaf(h.hodge(), fbar);
    c.expect(p2.ch2w4 - bl.ch2w4 == qs.ch2w4, "ch2(P2) - ch2(blowup) != ch2(quotient)");
    const long a = opt.alpha(h);
    c.expect(-p2.ch2w4 == Rational(a), "-ch2 = " + Rational(-p2.ch2w4).get_str() + ", alpha = " + std::to_string(a));
    c.attach(dump("H", h));
    if (c.failed()) return;
    // the exact-sequence identity also holds off the opposed locus
    const size_t n = 1 + rng() % 4;
    const auto f0 = random_filtration(rng, n), f1 = random_filtration(rng, n), f2 = random_filtration(rng, n);
    const ChernP2 g = chern_rees_p2(f0, f1, f2);
    const ChernBlowup gb = chern_rees_blowup(f0, f1, f2);
    c.expect(g.ch2w4 - gb.ch2w4 == chern_quotient_sheaf(f1, f2).ch2w4,
             "ch2(P2) - ch2(blowup) != ch2(quotient) on a random tri-filtered space");
    c.expect(g.rank == long(n) && gb.rank == long(n), "rank differs from the dimension");
  });
}

SuiteResult verify_rank_lemma(const VerifyOptions& opt) {
  return run_cases("rank-lemma", opt, opt.cases, [&](Rng& rng, Checker& c) {
    std::uniform_int_distribution<size_t> dim1(1, 5);
    const size_t d1 = dim1(rng);
    const size_t d2 = std::uniform_int_distribution<size_t>(1, 6 - d1)(rng);
    auto sub_dim = [&](size_t d) { return std::uniform_int_distribution<size_t>(0, d)(rng); };
    const Subspace<Exact> w1 = random_subspace(rng, d1, sub_dim(d1), 5);
    const Subspace<Exact> w1p = related_subspace(rng, d1, sub_dim(d1), w1);
    const Subspace<Exact> w2 = random_subspace(rng, d2, sub_dim(d2), 5);
    const Subspace<Exact> w2p = related_subspace(rng, d2, sub_dim(d2), w2);
    const Subspace<Exact> w = lift(rng, w1, w2, d1, d2), wp = lift(rng, w1p, w2p, d1, d2);
    const Subspace<Exact> v1 = embed_first(Subspace<Exact>::full(d1), d2);
    c.expect(intersect(w, v1) == embed_first(w1, d2) && intersect(wp, v1) == embed_first(w1p, d2),
             "lift does not meet V1 in W1");
    c.expect(project_second(w, d1, d2) == w2 && project_second(wp, d1, d2) == w2p, "lift does not project onto W2");
    const long i1 = long(intersection_dim(w1, w1p)), i2 = long(intersection_dim(w2, w2p));
    const long iw = long(intersection_dim(w, wp));
    const long lower = i1 + i2 - std::min(i2, long(d1)), upper = i1 + i2;
    c.expect(lower <= iw && iw <= upper, "dim(W ∩ W') = " + std::to_string(iw) + " outside [" +
                                             std::to_string(lower) + ", " + std::to_string(upper) + "]");
    c.attach("W =\n" + to_string(w.basis()) + "W' =\n" + to_string(wp.basis()));
  });
}

SuiteResult verify_kunneth(const VerifyOptions& opt) {
  return run_cases("kunneth", opt, opt.cases, [&](Rng& rng, Checker& c) {
    GeneratorOptions small = opt.generator;
    small.max_dim = 3;
    small.max_weight_length = 2;
    std::vector<Mhs> x, y;
    for (int d = 0; d <= 3; ++d) x.push_back(random_mhs(rng, small));
    for (int d = 0; d <= 3; ++d) y.push_back(random_mhs(rng, small));
    std::vector<long> ax, ay;
    for (auto const& h : x) ax.push_back(opt.alpha(h));
    for (auto const& h : y) ay.push_back(opt.alpha(h));
    for (int k = 0; k <= 6 && !c.failed(); ++k) {
      std::optional<Mhs> product;
      long formula = 0;
      for (int i = 0; i <= 3; ++i) {
        const int j = k - i;
        if (j < 0 || j > 3) continue;
        Mhs piece = tensor(x[i], y[j]);
        product = product ? direct_sum(*product, piece) : piece;
        formula += long(y[j].dim()) * ax[i] + long(x[i].dim()) * ay[j];
      }
      const long ak = opt.alpha(*product);
      c.expect(ak == formula, "alpha_" + std::to_string(k) + "(X x Y) = " + std::to_string(ak) + ", formula " +
                                  std::to_string(formula));
    }
    std::string tables;
    for (size_t d = 0; d < x.size(); ++d) tables += dump("H^" + std::to_string(d) + "(X)", x[d]);
    for (size_t d = 0; d < y.size(); ++d) tables += dump("H^" + std::to_string(d) + "(Y)", y[d]);
    c.attach(tables);
  });
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
  return {verify_operation_laws(opt), verify_superadditivity(opt), verify_alpha_invariants(opt),
          verify_chern(opt),          verify_rank_lemma(opt),      verify_kunneth(opt)};
}

std::string format_result(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.checks << " checks, "
     << r.failures.size() << " failures (seed " << r.seed << ")\n";
  for (auto const& f : r.failures)
    os << "  case " << f.index << " (replay: --suite " << r.name << " --seed " << r.seed << " --case " << f.index << "): " << f.detail << "\n";
  return os.str();
}

}  // namespace hodgerees
