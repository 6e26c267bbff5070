#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hodgerees/generators.hpp"

namespace hodgerees {

using AlphaFn = std::function<long(const MixedHodgeStructure<Exact>&)>;

struct VerifyOptions {
  uint64_t seed = 1;
  size_t cases = 200;
  unsigned workers = 1;
  std::optional<size_t> only_case;  // replay a single case index
  AlphaFn alpha = [](const MixedHodgeStructure<Exact>& h) { return hodgerees::alpha(h); };
  GeneratorOptions generator;
};

struct Failure {
  size_t index = 0;  // replay with the same seed and this case index
  std::string detail;
};

struct SuiteResult {
  std::string name;
  uint64_t seed = 0;
  size_t cases = 0;
  size_t checks = 0;
  double seconds = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

// Generator for case `index` of a suite; independent of the worker count.
Rng case_rng(uint64_t seed, const std::string& suite, size_t index);

// α(H ⊗ T<k>) = α(H) for k in -2..2, α(H*) = α(H), α(H ⊕ H') = α(H) + α(H'),
// α(H ⊗ H') = dim H' α(H) + dim H α(H').
SuiteResult verify_operation_laws(const VerifyOptions& opt);
// α(H) >= α(A) + α(B) and f_H - f_A - f_B <= 0 for extensions H of B by A.
SuiteResult verify_superadditivity(const VerifyOptions& opt);
// α >= 0, α ∈ Z, α = 0 iff R-split, Deligne splitting lemma (i)-(iv).
SuiteResult verify_alpha_invariants(const VerifyOptions& opt);
// Chern identities for (W, F, conj F) and for random tri-filtered spaces.
SuiteResult verify_chern(const VerifyOptions& opt);
// Bounds on dim(W ∩ W') for lifts of subspace pairs of V1 and V2.
SuiteResult verify_rank_lemma(const VerifyOptions& opt);
// α_k of a product from Künneth sums against the closed formula.
SuiteResult verify_kunneth(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

// One summary line, then the failures with their replay data.
std::string format_result(const SuiteResult& r);

}  // namespace hodgerees
