#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glres {

inline constexpr int kMaxVars = 12;

// Exponent vector over x_1..x_d. Variables are 1-based throughout.
//
// Ordering (operator<): lower degree first; within a degree, the
// lexicographically larger exponent vector comes first, so x1 > x2 > ... > xd
// and e.g. x2^2 < x2*x3 < x3^2 in list order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::initializer_list<int> exps);
  explicit Monomial(const std::vector<int>& exps);

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i - 1]; }
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const;
  bool divisible_by_var(int i) const { return exps_[i - 1] > 0; }
  Monomial operator*(const Monomial& other) const;
  Monomial times_var(int i) const;
  // Requires divisibility; throws std::domain_error otherwise.
  Monomial operator/(const Monomial& other) const;
  Monomial divided_by_var(int i) const;
  std::optional<Monomial> try_divide(const Monomial& other) const;

  // Smallest index i with x_i | m; 0 for the constant monomial.
  int least() const;
  // Monomial of degree d-1 variables obtained by swapping two variables.
  Monomial swapped(int i, int j) const;

  std::string str() const;  // "[2,0,1]"
  // "x1^2*x3", "1" for the constant monomial.
  std::string pretty(std::string_view var = "x") const;
  static Monomial parse(std::string_view text);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
  friend bool operator<=(const Monomial& a, const Monomial& b) { return !(b < a); }
  friend bool operator>=(const Monomial& a, const Monomial& b) { return !(a < b); }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

// All monomials of the given degree in x_low..x_nvars, in monomial order.
std::vector<Monomial> monomials_of_degree(int nvars, int low_var, int degree);

// Position of m inside monomials_of_degree(m.nvars(), 1, m.degree()).
std::size_t monomial_index(const Monomial& m);

std::uint64_t binomial(int n, int k);

}  // namespace glres

template <>
struct std::hash<glres::Monomial> {
  std::size_t operator()(const glres::Monomial& m) const noexcept { return m.hash(); }
};
