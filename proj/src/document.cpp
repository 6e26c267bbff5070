#include "hodgerees/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hodgerees {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

template <class T>
T parse_entry(const json& e, const std::string& where);

template <>
GaussianRational parse_entry<GaussianRational>(const json& e, const std::string& where) {
  try {
    if (e.is_string()) return GaussianRational::parse(e.get<std::string>());
    if (e.is_number_integer()) return GaussianRational(e.get<long>());
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
  throw ParseError(where + ": exact entries must be strings or integers");
}

template <>
Complex parse_entry<Complex>(const json& e, const std::string& where) {
  try {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_string()) return parse_complex(e.get<std::string>());
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
      return {e[0].get<double>(), e[1].get<double>()};
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
  throw ParseError(where + ": float entries must be numbers, strings or [re, im] pairs");
}

template <class T>
Subspace<T> parse_basis(const json& rows, size_t n, const std::string& where) {
  if (!rows.is_array()) throw ParseError(where + ": basis must be a list of rows");
  Matrix<T> m(0, n);
  for (size_t r = 0; r < rows.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array()) throw ParseError(at + ": row must be a list");
    if (rows[r].size() != n)
      throw DimensionMismatch(at + ": row has " + std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(n));
    std::vector<T> v;
    for (size_t c = 0; c < n; ++c) v.push_back(parse_entry<T>(rows[r][c], at + "[" + std::to_string(c) + "]"));
    m.append_row(v);
  }
  return Subspace<T>(m);
}

template <class T>
std::map<int, Subspace<T>> parse_levels(const json& doc, const char* list, const char* key, size_t n) {
  const json& items = member(doc, list, "document");
  if (!items.is_array()) throw ParseError(std::string(list) + ": expected a list");
  std::map<int, Subspace<T>> out;
  for (size_t k = 0; k < items.size(); ++k) {
    const std::string where = std::string(list) + "[" + std::to_string(k) + "]";
    const json& lv = member(items[k], key, where);
    if (!lv.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    const int level = lv.get<int>();
    if (out.count(level)) throw ParseError(where + ": duplicate " + key + " " + std::to_string(level));
    out.emplace(level, parse_basis<T>(member(items[k], "basis", where), n, where + ".basis"));
  }
  return out;
}

template <class T>
MixedHodgeStructure<T> parse_structure(const json& doc, size_t n) {
  auto weights = parse_levels<T>(doc, "weight_filtration", "weight", n);
  auto levels = parse_levels<T>(doc, "hodge_filtration", "level", n);
  if (weights.empty()) throw ParseError("weight_filtration: at least one weight is required");
  for (auto const& [m, w] : weights)
    if (!w.is_real()) throw InvalidStructure("weight filtration not real (W_" + std::to_string(m) + ")");
  if (!weights.rbegin()->second.is_full())
    throw InvalidStructure("weight filtration does not exhaust the space (highest listed W_" +
                           std::to_string(weights.rbegin()->first) + ")");
  for (auto it = weights.begin(); std::next(it) != weights.end(); ++it)
    if (!std::next(it)->second.contains(it->second))
      throw InvalidStructure("weight filtration not increasing at W_" + std::to_string(std::next(it)->first));
  for (auto it = levels.begin(); std::next(it) != levels.end(); ++it)
    if (!it->second.contains(std::next(it)->second))
      throw InvalidStructure("hodge filtration not decreasing at F^" + std::to_string(std::next(it)->first));
  auto h = MixedHodgeStructure<T>::from_weights(n, weights, Filtration<T>::from_levels(n, levels));
  Validation v = validate(h);
  if (!v) throw InvalidStructure(v.diagnostic);
  return h;
}

json entry_json(const GaussianRational& x) { return x.to_string(); }
json entry_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

template <class T>
json basis_json(const Subspace<T>& s) {
  json rows = json::array();
  const Matrix<T>& b = s.basis();
  for (size_t r = 0; r < b.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < b.cols(); ++c) row.push_back(entry_json(b(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

MhsDocument parse_mhs_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  const json& field = member(doc, "field", "document");
  const json& dim = member(doc, "dim", "document");
  if (!dim.is_number_unsigned()) throw ParseError("dim: expected a nonnegative integer");
  const size_t n = dim.get<size_t>();
  MhsDocument out;
  if (auto it = doc.find("tolerance"); it != doc.end()) {
    if (!it->is_number() || it->get<double>() <= 0) throw ParseError("tolerance: expected a positive number");
    out.tolerance = it->get<double>();
  }
  if (field == "gaussian_rational") {
    out.field = Field::gaussian_rational;
    out.exact = parse_structure<GaussianRational>(doc, n);
  } else if (field == "complex_f64") {
    out.field = Field::complex_f64;
    // rank decisions made while parsing already use the document tolerance
    const double saved = float_tolerance();
    if (out.tolerance) set_float_tolerance(*out.tolerance);
    try {
      out.approx = parse_structure<Complex>(doc, n);
    } catch (...) {
      set_float_tolerance(saved);
      throw;
    }
    set_float_tolerance(saved);
  } else {
    throw ParseError("field: expected \"gaussian_rational\" or \"complex_f64\"");
  }
  return out;
}

MhsDocument parse_mhs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_mhs_document(text.str());
}

template <class T>
std::string to_json(const MixedHodgeStructure<T>& h, std::optional<double> tolerance) {
  json doc;
  doc["field"] = ScalarTraits<T>::exact ? "gaussian_rational" : "complex_f64";
  doc["dim"] = h.dim();
  json ws = json::array();
  for (auto const& [m, w] : to_increasing(h.weight())) ws.push_back({{"weight", m}, {"basis", basis_json(w)}});
  json fs = json::array();
  const Filtration<T>& f = h.hodge();
  for (int p = f.lowest() - 1; p <= f.end(); ++p) fs.push_back({{"level", p}, {"basis", basis_json(f[p])}});
  doc["weight_filtration"] = ws;
  doc["hodge_filtration"] = fs;
  if (tolerance) doc["tolerance"] = *tolerance;
  return doc.dump(2) + "\n";
}

template std::string to_json(const MixedHodgeStructure<GaussianRational>&, std::optional<double>);
template std::string to_json(const MixedHodgeStructure<Complex>&, std::optional<double>);

}  // namespace hodgerees
