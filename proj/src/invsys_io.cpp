#include <json.hpp>

#include <fstream>
#include <sstream>

#include "glres/invsys.hpp"

namespace glres {

std::string serialize_invsys(const InverseSystem& phi) {
  std::ostringstream os;
  os << "{\n  \"d\": " << phi.d() << ",\n  \"n\": " << phi.n() << ",\n  \"coeffs\": [";
  bool first = true;
  for (const auto& [m, c] : phi.coeffs()) {
    os << (first ? "\n    " : ",\n    ") << "[" << m.str() << ", \"" << to_string(c) << "\"]";
    first = false;
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

InverseSystem parse_invsys(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("inverse system file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("n") || !doc.contains("coeffs"))
    throw InputError("inverse system file needs fields d, n, coeffs");
  if (!doc["d"].is_number_integer() || !doc["n"].is_number_integer())
    throw InputError("fields d and n must be integers");
  const int d = doc["d"].get<int>();
  const int n = doc["n"].get<int>();
  if (d < 3 || d > kMaxVars || n < 2) throw InputError("need 3 <= d <= 12 and n >= 2");
  if (!doc["coeffs"].is_array()) throw InputError("coeffs must be a list of [exponents, value] pairs");
  std::map<Monomial, Rational> coeffs;
  for (const auto& item : doc["coeffs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || !item[1].is_string())
      throw InputError("each coefficient must be [[e1,...,ed], \"p/q\"]");
    std::vector<int> exps;
    for (const auto& e : item[0]) {
      if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() > 255)
        throw InputError("exponents must be small nonnegative integers");
      exps.push_back(e.get<int>());
    }
    if (static_cast<int>(exps.size()) != d) throw InputError("exponent vector length differs from d");
    Rational value;
    try {
      value = parse_rational(item[1].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    const Monomial m(exps);
    if (coeffs.count(m)) throw InputError("duplicate coefficient for monomial " + m.str());
    coeffs.emplace(m, value);
  }
  return InverseSystem(d, n, coeffs);
}

InverseSystem load_invsys(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open inverse system file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_invsys(ss.str());
}

}  // namespace glres
