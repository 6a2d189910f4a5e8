#include "glres/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace glres {

Polynomial::Polynomial(const Monomial& m, const Rational& c) : nvars_(m.nvars()) {
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  return Polynomial(Monomial::one(nvars), c);
}

Polynomial Polynomial::variable(int nvars, int i) {
  return Polynomial(Monomial::variable(nvars, i), Rational(1));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::has_constant_term() const {
  return !terms_.empty() && terms_.begin()->first.degree() == 0;
}

void Polynomial::adopt(const Polynomial& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  else if (other.nvars_ != 0 && other.nvars_ != nvars_)
    throw std::invalid_argument("polynomials over different variable counts");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (nvars_ == 0) nvars_ = m.nvars();
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  adopt(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c, const Monomial& mono) {
  if (c == 0) return;
  adopt(p);
  Rational prod;
  for (const auto& [m, v] : p.terms_) {
    prod = v * c;
    add_term(m * mono, prod);
  }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.adopt(a);
  r.adopt(b);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::substitute_zero(int i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (!m.divisible_by_var(i)) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::swap_variables(int i, int j) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m.swapped(i, j), c);
  return r;
}

Polynomial Polynomial::divided(const Rational& c) const {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  Polynomial r(*this);
  for (auto& [m, v] : r.terms_) v /= c;
  return r;
}

std::string Polynomial::str(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    const bool unit = a == 1;
    if (m.degree() == 0) s += to_string(a);
    else {
      if (!unit) s += to_string(a) + "*";
      s += m.pretty(var);
    }
  }
  return s;
}

namespace {

void parse_term(std::string term, bool negative, int nvars, Polynomial& out) {
  if (term.empty()) throw std::invalid_argument("empty polynomial term");
  Rational coef = 1;
  std::vector<int> exps(nvars, 0);
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t stop = term.find('*', start);
    if (stop == std::string::npos) stop = term.size();
    const std::string factor = term.substr(start, stop - start);
    if (factor.empty()) throw std::invalid_argument("malformed polynomial term: " + term);
    if (factor[0] == 'x') {
      const auto caret = factor.find('^');
      const int var = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
      if (var < 1 || var > nvars || e < 0) throw std::invalid_argument("bad variable in term: " + term);
      exps[var - 1] += e;
    } else {
      coef *= parse_rational(factor);
    }
    start = stop + 1;
  }
  out.add_term(Monomial(exps), negative ? Rational(-coef) : coef);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  Polynomial out(nvars);
  if (s == "0") return out;
  std::size_t i = 0;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    i = 1;
  }
  std::string cur;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if ((c == '+' || c == '-') && !cur.empty() && cur.back() != '^') {
      parse_term(cur, negative, nvars, out);
      cur.clear();
      negative = c == '-';
    } else {
      cur += c;
    }
  }
  parse_term(cur, negative, nvars, out);
  return out;
}

}  // namespace glres
