#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hodgerees/mhs.hpp"

namespace hodgerees {

enum class Field { gaussian_rational, complex_f64 };

// JSON description of a mixed Hodge structure:
//   { "field": "gaussian_rational" | "complex_f64", "dim": n,
//     "weight_filtration": [{"weight": m, "basis": rows}, ...],
//     "hodge_filtration": [{"level": p, "basis": rows}, ...],
//     "tolerance": t (optional) }
// Exact entries are strings such as "1/2" or "1/2+3/4 i"; float entries are
// [re, im] pairs, numbers or strings.  W_m takes the value listed at the
// largest weight <= m; F^p the value at the nearest level <= p, full below
// the lowest listed level and zero above the highest.
struct MhsDocument {
  Field field = Field::gaussian_rational;
  std::optional<double> tolerance;
  std::optional<MixedHodgeStructure<GaussianRational>> exact;
  std::optional<MixedHodgeStructure<Complex>> approx;

  size_t dim() const { return exact ? exact->dim() : approx ? approx->dim() : 0; }
};

// Throws ParseError for malformed input, DimensionMismatch for wrongly sized
// rows and InvalidStructure when the weight filtration is not real or the
// structure fails validate.
MhsDocument parse_mhs_document(std::string_view text);
MhsDocument parse_mhs_file(const std::string& path);

template <class T>
std::string to_json(const MixedHodgeStructure<T>& h, std::optional<double> tolerance = {});

}  // namespace hodgerees
