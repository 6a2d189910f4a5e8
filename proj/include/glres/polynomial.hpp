#pragma once

#include <map>
#include <string>
#include <string_view>

#include "glres/monomial.hpp"
#include "glres/rational.hpp"

namespace glres {

// Sparse polynomial in x_1..x_d with rational coefficients. Zero
// coefficients are never stored. A default-constructed polynomial is zero
// and adopts the variable count of whatever it is combined with.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(const Monomial& m, const Rational& c);
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // -1 for the zero polynomial; the common degree when homogeneous.
  int degree() const;
  bool is_homogeneous() const;
  bool has_constant_term() const;

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  // Accumulates c*m*p without temporaries.
  void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  // Kills every term divisible by x_i.
  Polynomial substitute_zero(int i) const;
  Polynomial substitute_x1_zero() const { return substitute_zero(1); }
  Polynomial swap_variables(int i, int j) const;
  // Divides every coefficient by c (c != 0).
  Polynomial divided(const Rational& c) const;

  // "3*x1^2*x2 - 1/2*x3", "0" for zero.
  std::string str(std::string_view var = "x") const;
  // Inverse of str(): sums of [coef*]x<i>[^e]*... terms. Throws std::invalid_argument.
  static Polynomial parse(std::string_view text, int nvars);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(const Polynomial& other);

  int nvars_ = 0;
  Terms terms_;
};

}  // namespace glres
