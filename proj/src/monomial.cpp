#include "glres/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace glres {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("number of variables out of range: " + std::to_string(nvars));
}

// Fills exps[pos..] with every split of `remaining`, larger exponents first.
void enumerate(int pos, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (pos == static_cast<int>(exps.size()) - 1) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    exps[pos] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    enumerate(pos + 1, remaining - e, exps, out);
  }
  exps[pos] = 0;
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(int nvars, std::initializer_list<int> exps) : Monomial(nvars) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  int i = 0;
  for (int e : exps) {
    if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
    exps_[i++] = static_cast<std::uint8_t>(e);
    degree_ = static_cast<std::uint16_t>(degree_ + e);
  }
}

Monomial::Monomial(const std::vector<int>& exps) : Monomial(static_cast<int>(exps.size())) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    exps_[i] = static_cast<std::uint8_t>(exps[i]);
    degree_ = static_cast<std::uint16_t>(degree_ + exps[i]);
  }
}

Monomial Monomial::variable(int nvars, int i) {
  Monomial m(nvars);
  if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
  m.exps_[i - 1] = 1;
  m.degree_ = 1;
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (int i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint8_t>(r.exps_[i] + other.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::times_var(int i) const {
  Monomial r(*this);
  ++r.exps_[i - 1];
  ++r.degree_;
  return r;
}

std::optional<Monomial> Monomial::try_divide(const Monomial& other) const {
  if (!other.divides(*this)) return std::nullopt;
  Monomial r(*this);
  for (int i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint8_t>(r.exps_[i] - other.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  auto q = try_divide(other);
  if (!q) throw std::domain_error("monomial division: " + other.str() + " does not divide " + str());
  return *q;
}

Monomial Monomial::divided_by_var(int i) const {
  if (exps_[i - 1] == 0) throw std::domain_error("monomial division by absent variable");
  Monomial r(*this);
  --r.exps_[i - 1];
  --r.degree_;
  return r;
}

int Monomial::least() const {
  for (int i = 0; i < nvars_; ++i)
    if (exps_[i] > 0) return i + 1;
  return 0;
}

Monomial Monomial::swapped(int i, int j) const {
  Monomial r(*this);
  std::swap(r.exps_[i - 1], r.exps_[j - 1]);
  return r;
}

std::string Monomial::str() const {
  std::string s = "[";
  for (int i = 0; i < nvars_; ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + "]";
}

std::string Monomial::pretty(std::string_view var) const {
  std::string s;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var;
    s += std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial Monomial::parse(std::string_view text) {
  std::string t(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("malformed monomial: '" + t + "'");
  std::vector<int> exps;
  std::string body = t.substr(1, t.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed monomial: '" + t + "'");
    }
    if (used != item.size() || e < 0) throw std::invalid_argument("malformed monomial: '" + t + "'");
    exps.push_back(e);
  }
  return Monomial(exps);
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  for (int i = 0; i < a.nvars_; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  return false;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (int i = 0; i < nvars_; ++i) h = h * 131 + exps_[i];
  return h;
}

std::vector<Monomial> monomials_of_degree(int nvars, int low_var, int degree) {
  if (low_var < 1 || low_var > nvars) throw std::out_of_range("low_var out of range");
  if (degree < 0) return {};
  std::vector<Monomial> tail_list;
  std::vector<int> tail(nvars - low_var + 1, 0);
  enumerate(0, degree, tail, tail_list);
  std::vector<Monomial> out;
  out.reserve(tail_list.size());
  std::vector<int> exps(nvars, 0);
  for (const auto& t : tail_list) {
    for (int i = 0; i < static_cast<int>(tail.size()); ++i) exps[low_var - 1 + i] = t[i + 1];
    out.emplace_back(exps);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t monomial_index(const Monomial& m) {
  // Count monomials preceding m: at position i, those sharing the prefix and
  // carrying a larger exponent of x_i.
  const int d = m.nvars();
  int remaining = m.degree();
  std::size_t idx = 0;
  for (int i = 1; i < d; ++i) {
    const int a = m[i];
    const int rest = remaining - a - 1;
    if (rest >= 0) idx += binomial(rest + d - i, d - i);
    remaining -= a;
  }
  return idx;
}

}  // namespace glres
