#include "glres/export.hpp"

#include <sstream>

#include <json.hpp>

namespace glres {

namespace {

std::string signed_label(const OrderedBasis& b, std::size_t i) {
  return (b.sign(i) < 0 ? "-" : "") + b.element(i).str();
}

std::string list(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::uint64_t> sizes(const Resolution& res) {
  std::vector<std::uint64_t> v;
  for (const auto& b : res.bases) v.push_back(b.size());
  return v;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "cas") return Format::Cas;
  throw InputError("unknown format: " + name + " (expected text, json or cas)");
}

std::string export_text(const Resolution& res) {
  std::ostringstream os;
  os << "d = " << res.d << ", n = " << res.n << "\n";
  os << "delta = " << to_string(res.delta()) << "\n";
  os << "betti = (" << list(sizes(res)) << ")\n";
  std::vector<std::uint64_t> tw(res.twist.begin(), res.twist.end());
  os << "twists = (" << list(tw) << ")\n";
  for (int r = 0; r <= res.d; ++r) {
    os << "\nB_" << r << " basis:\n";
    for (std::size_t i = 0; i < res.bases[r].size(); ++i)
      os << "  " << i + 1 << ": " << signed_label(res.bases[r], i) << "\n";
  }
  for (int r = 1; r <= res.d; ++r) {
    const PolyMatrix& M = res.b(r);
    os << "\nb" << r << " (" << M.rows() << "x" << M.cols() << "), nonzero entries:\n";
    for (std::size_t j = 0; j < M.cols(); ++j)
      for (std::size_t i = 0; i < M.rows(); ++i)
        if (!M(i, j).is_zero()) os << "  [" << i + 1 << "," << j + 1 << "] " << M(i, j).str() << "\n";
  }
  return os.str();
}

std::string export_json(const Resolution& res) {
  nlohmann::ordered_json j;
  j["d"] = res.d;
  j["n"] = res.n;
  j["delta"] = to_string(res.delta());
  j["betti"] = sizes(res);
  j["twists"] = res.twist;
  j["phi"] = nlohmann::ordered_json::parse(serialize_invsys(res.phi));
  j["bases"] = nlohmann::ordered_json::array();
  for (const auto& b : res.bases) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < b.size(); ++i) arr.push_back(signed_label(b, i));
    j["bases"].push_back(arr);
  }
  j["maps"] = nlohmann::ordered_json::array();
  for (int r = 1; r <= res.d; ++r) {
    const PolyMatrix& M = res.b(r);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M(i, c).str());
      rows.push_back(row);
    }
    j["maps"].push_back({{"r", r}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", rows}});
  }
  return j.dump(1) + "\n";
}

std::string export_cas(const Resolution& res) {
  std::ostringstream os;
  os << "-- Macaulay2: minimal resolution of S/ann(phi), d = " << res.d << ", n = " << res.n
     << ", delta = " << to_string(res.delta()) << "\n";
  os << "S = QQ[x1..x" << res.d << "];\n";
  for (int r = 1; r <= res.d; ++r) {
    const PolyMatrix& M = res.b(r);
    // Explicit source degrees keep the twists visible to the CAS.
    os << "b" << r << " = map(S^{";
    for (std::size_t i = 0; i < M.rows(); ++i) os << (i ? "," : "") << -res.twist[r - 1];
    os << "}, S^{";
    for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? "," : "") << -res.twist[r];
    os << "}, {";
    for (std::size_t i = 0; i < M.rows(); ++i) {
      os << (i ? ",\n  {" : "\n  {");
      for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? ", " : "") << M(i, j).str();
      os << "}";
    }
    os << "});\n";
  }
  for (int r = 1; r < res.d; ++r) os << "assert(b" << r << " * b" << r + 1 << " == 0);\n";
  for (int r = 1; r <= res.d; ++r) os << "assert(isHomogeneous b" << r << ");\n";
  os << "C = chainComplex(";
  for (int r = 1; r <= res.d; ++r) os << (r > 1 ? ", " : "") << "b" << r;
  os << ");\n";
  os << "assert(all(1.." << res.d << ", i -> HH_i(C) == 0));\n";
  os << "assert(betti C == betti res coker b1);\n";
  os << "print betti C\n";
  return os.str();
}

std::string export_resolution(const Resolution& res, Format f) {
  switch (f) {
    case Format::Text: return export_text(res);
    case Format::Json: return export_json(res);
    case Format::Cas: return export_cas(res);
  }
  return {};
}

}  // namespace glres
