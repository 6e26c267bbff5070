#pragma once

#include <random>

#include "hodgerees/mhs.hpp"

namespace hodgerees {

using Rng = std::mt19937_64;
using Exact = GaussianRational;

// Structure in coordinates where each W_m is spanned by the first few basis
// vectors; weight_of[k] is the weight at which coordinate k enters.
struct AdaptedMhs {
  MixedHodgeStructure<Exact> mhs;
  std::vector<int> weight_of;
};

struct GeneratorOptions {
  size_t max_dim = 8;
  size_t max_weight_length = 4;
  int min_weight = -2;
  int max_weight = 4;
  int bound = 10;  // numerators and denominators of random entries
  bool basis_change = true;  // finish with a random real change of basis
};

Rational random_rational(Rng& rng, int bound);
GaussianRational random_gaussian(Rng& rng, int bound);

// Invertible n x n matrix with integer entries in [-bound, bound].
Matrix<Exact> random_real_gl(Rng& rng, size_t n, int bound);

Subspace<Exact> random_subspace(Rng& rng, size_t ambient, size_t dim, int bound);

// Pure Hodge structure of weight w and dimension d (d even when w is odd).
AdaptedMhs random_pure(Rng& rng, int w, size_t d);

// Tower of extensions of pure pieces of increasing weight with random theta
// (zero, real or complex), in adapted coordinates.
AdaptedMhs random_adapted_mhs(Rng& rng, const GeneratorOptions& opt = {});

// Adapted tower, optionally followed by a random real change of basis.
MixedHodgeStructure<Exact> random_mhs(Rng& rng, const GeneratorOptions& opt = {});

// Weight-lowering theta between adapted structures.
Matrix<Exact> random_theta(Rng& rng, const AdaptedMhs& a, const AdaptedMhs& b, int bound);

struct ExtensionTriple {
  MixedHodgeStructure<Exact> a, b;
  Matrix<Exact> theta;
};

ExtensionTriple random_extension_triple(Rng& rng, const GeneratorOptions& opt = {});

}  // namespace hodgerees
