#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glres/matrix.hpp"
#include "glres/monomial.hpp"
#include "glres/polynomial.hpp"

namespace glres {

// Malformed user input (file contents, flags).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sum of c_m * m^* in the dual basis of a fixed degree.
class DualElement {
 public:
  DualElement() = default;
  DualElement(int nvars, int degree) : nvars_(nvars), degree_(degree) {}
  static DualElement basis(const Monomial& m);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  DualElement& operator+=(const DualElement& other);

  friend bool operator==(const DualElement& a, const DualElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::map<Monomial, Rational> terms_;
};

// phi in D_{2n-2}: coefficients t_m for monomials m of degree 2n-2.
class InverseSystem {
 public:
  InverseSystem(int d, int n, const std::map<Monomial, Rational>& coeffs);

  int d() const { return d_; }
  int n() const { return n_; }
  int socle_degree() const { return 2 * n_ - 2; }
  // Nonzero coefficients only, in monomial order.
  const std::map<Monomial, Rational>& coeffs() const { return coeffs_; }
  // t_m; zero for monomials of the wrong degree.
  const Rational& t(const Monomial& m) const;
  DualElement as_dual() const;
  // phi with x_i and x_j exchanged.
  InverseSystem swapped(int i, int j) const;

  friend bool operator==(const InverseSystem& a, const InverseSystem& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int d_;
  int n_;
  std::map<Monomial, Rational> coeffs_;
  std::vector<Rational> dense_;  // indexed by monomial_index
};

struct Catalecticant {
  std::vector<Monomial> index;  // monomials of degree n-1, monomial order
  RatMatrix T;
  Rational delta;
  RatMatrix Q;

  bool admissible() const { return delta != 0; }
  const Rational& q(const Monomial& m1, const Monomial& m2) const {
    return Q(monomial_index(m1), monomial_index(m2));
  }
};

DualElement contract(const Monomial& mu, const DualElement& nu);
DualElement contract(const Polynomial& g, const DualElement& nu);
// Pairing of equal-degree elements: g(nu) as a scalar.
Rational evaluate(const Polynomial& g, const DualElement& nu);

RatMatrix catalecticant_matrix(const InverseSystem& phi, int j);
Catalecticant delta_and_Q(const InverseSystem& phi);

// q(nu) = sum over m2 of nu_{m2} * sum over m1 of Q[m1,m2] * m1.
Polynomial q_of(const Catalecticant& cat, const DualElement& nu);
// m(Phi~) for m free of x1: sum over m2 of t_{m*m2} (x1*m2)^*.
DualElement tilde_contract(const InverseSystem& phi, const Monomial& m);

std::vector<Polynomial> ann_degree(const InverseSystem& phi, int j);
std::vector<std::size_t> hilbert_function(const InverseSystem& phi);

inline constexpr int kRandomRetryBudget = 32;
// Throws std::runtime_error when no admissible system is found.
InverseSystem random_invsys(int d, int n, std::uint64_t seed, int bound);

// Sum of (x_i^2)^* (n = 2); for general n the sum of (x_i^{2n-2})^* is
// inadmissible, so this family is n = 2 only.
InverseSystem sum_of_squares(int d);

// Canonical JSON document; parse(serialize(phi)) == phi and the text is a
// fixed point of serialize(parse(.)).
std::string serialize_invsys(const InverseSystem& phi);
InverseSystem parse_invsys(const std::string& text);
InverseSystem load_invsys(const std::string& path);

}  // namespace glres
