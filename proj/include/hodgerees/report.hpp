#pragma once

#include <string>

#include "hodgerees/mhs.hpp"

namespace hodgerees {

// "name:" followed by one "  (p,q) value" line per nonzero entry.
std::string format_table(const std::string& name, const Dims2& table);

// h, t, f tables, dim I^{p,q}, R-split flag, α and the Chern cross-check.
template <class T>
std::string mhs_report(const MixedHodgeStructure<T>& h);

}  // namespace hodgerees
