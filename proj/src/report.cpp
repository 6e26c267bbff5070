#include "hodgerees/report.hpp"

#include <sstream>

namespace hodgerees {

std::string format_table(const std::string& name, const Dims2& table) {
  std::ostringstream os;
  os << name << ":\n";
  if (table.entries.empty()) os << "  (none)\n";
  for (auto const& [k, v] : table.entries) os << "  (" << k[0] << "," << k[1] << ") " << v << "\n";
  return os.str();
}

template <class T>
std::string mhs_report(const MixedHodgeStructure<T>& h) {
  const HodgeNumbers n = hodge_numbers(h);
  const DeligneSplitting<T> s = deligne_splitting(h);
  Dims2 idims;
  for (auto const& [k, v] : s.pieces) idims.add({k.first, k.second}, long(v.dim()));
  const long a = alpha_from_tables(n.h, n.t);
  const ChernP2 c = chern_of(h);
  const bool split = is_r_split(s);
  std::ostringstream os;
  os << "dim: " << h.dim() << "\n";
  os << "weights:";
  for (int m : h.weights()) os << " " << m;
  os << "\n";
  os << format_table("h^{p,q}", n.h) << format_table("t^{p,q}", n.t) << format_table("f^{p,q}", n.f)
     << format_table("dim I^{p,q}", idims);
  os << "R-split: " << (split ? "true" : "false") << ", alpha: " << a << "\n";
  os << "chern: " << c << "\n";
  const bool agree = c.c1w2 == 0 && c.ch2w4 == Rational(-a);
  os << "c2 == alpha: " << (agree ? "true" : "false") << "\n";
  return os.str();
}

template std::string mhs_report(const MixedHodgeStructure<GaussianRational>&);
template std::string mhs_report(const MixedHodgeStructure<Complex>&);

}  // namespace hodgerees
