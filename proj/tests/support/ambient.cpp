#include "ambient.hpp"

#include <stdexcept>

#include "oracles.hpp"

namespace ambient {

namespace {

// x_i^*(x_a): sum over positions k with a_k = i of (-1)^{k+1} x_{a minus a_k}.
int contract_wedge(int i, const std::vector<int>& a, std::vector<int>& rest) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] == i) {
      rest = a;
      rest.erase(rest.begin() + k);
      return k % 2 == 0 ? 1 : -1;
    }
  return 0;
}

// x_a ^ x_b as sign times the sorted list; 0 on overlap.
int wedge(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) return 0;
      if (out[i] > out[j]) sign = -sign;
    }
  std::sort(out.begin(), out.end());
  return sign;
}

void add(Vec& v, const Key& k, const Polynomial& p) {
  Polynomial& slot = v[k];
  slot += p;
  if (slot.is_zero()) v.erase(k);
}

Polynomial scalar(int d, const Rational& c) { return Polynomial::constant(d, c); }
Polynomial xvar(int d, int i) { return Polynomial::variable(d, i); }

// Dual element of D(U*) as monomial -> coefficient.
using Dual = std::map<Monomial, Rational>;

struct Data {
  const glres::InverseSystem& phi;
  int d, n;
  std::vector<Monomial> low;  // degree n-1, all variables
  RatMatrix Q;
  Rational delta;

  explicit Data(const glres::InverseSystem& p) : phi(p), d(p.d()), n(p.n()) {
    for (const auto& e : oracle::brute_monomials(d, n - 1)) low.emplace_back(e);
    const RatMatrix T = oracle::catalecticant(phi, n - 1);
    delta = oracle::gauss_det(T);
    if (delta == 0) throw std::domain_error("inadmissible");
    const RatMatrix inv = oracle::gauss_inverse(T);
    Q = RatMatrix(T.rows(), T.cols());
    for (std::size_t i = 0; i < T.rows(); ++i)
      for (std::size_t j = 0; j < T.cols(); ++j) Q(i, j) = inv(i, j) * delta;
  }
  std::size_t idx(const Monomial& m) const {
    for (std::size_t i = 0; i < low.size(); ++i)
      if (low[i] == m) return i;
    throw std::logic_error("monomial not of degree n-1");
  }
  // Phi~ = sum over m of t_m (x1 m)^*; mu(Phi~) for a monomial mu.
  Dual mu_on_tilde(const Monomial& mu) const {
    Dual out;
    for (const auto& [m, t] : phi.coeffs()) {
      const Monomial big = m.times_var(1);
      if (mu.divides(big)) out[big / mu] += t;
    }
    return out;
  }
  // q(nu) in Sym_{n-1}(U) with rational coefficients.
  Polynomial q(const Dual& nu) const {
    Polynomial out(d);
    for (const auto& [m2, c] : nu)
      for (std::size_t i = 0; i < low.size(); ++i) out.add_term(low[i], Q(i, idx(m2)) * c);
    return out;
  }
  // g(Phi~) for g in Sym(U).
  Dual on_tilde(const Polynomial& g) const {
    Dual out;
    for (const auto& [mu, c] : g.terms())
      for (const auto& [m, v] : mu_on_tilde(mu)) out[m] += c * v;
    return out;
  }
};

// sum over i >= 2 of x_i^*(theta) (x) x_i(nu) with coefficient coef.
void add_eta(Vec& out, const std::vector<int>& theta, const Dual& nu, const Polynomial& coef, int d) {
  for (int i = 2; i <= d; ++i) {
    std::vector<int> rest;
    const int s = contract_wedge(i, theta, rest);
    if (s == 0) continue;
    for (const auto& [m, c] : nu) {
      if (c == 0 || !m.divisible_by_var(i)) continue;
      add(out, Key{rest, m.divided_by_var(i), true}, coef * Rational(s * c));
    }
  }
}

void add_kappa(Vec& out, const std::vector<int>& theta, const Polynomial& mu, const Polynomial& coef, int d) {
  for (int i = 2; i <= d; ++i) {
    std::vector<int> rest;
    const int s = contract_wedge(i, theta, rest);
    if (s == 0) continue;
    for (const auto& [m, c] : mu.terms()) add(out, Key{rest, m.times_var(i), false}, coef * Rational(s * c));
  }
}

// Kos(theta) (x) payload: sum over k of (-1)^{k+1} x_{theta_k} theta minus theta_k.
void add_kos(Vec& out, const std::vector<int>& theta, const Monomial& m, bool dual, const Polynomial& coef, int d) {
  for (std::size_t k = 0; k < theta.size(); ++k) {
    std::vector<int> rest = theta;
    rest.erase(rest.begin() + k);
    add(out, Key{rest, m, dual}, coef * xvar(d, theta[k]) * Rational(k % 2 == 0 ? 1 : -1));
  }
}

Polynomial proj(const Polynomial& g) { return g.substitute_zero(1); }

Vec apply_interior(const Data& D, const Vec& input) {
  const int d = D.d;
  const Polynomial x1 = xvar(d, 1);
  Vec out;
  for (const auto& [key, coef] : input) {
    if (key.dual) {
      const Dual nu{{key.m, Rational(1)}};
      const Polynomial qn = D.q(nu);
      add_eta(out, key.wedge, D.on_tilde(qn), coef * x1 * Rational(-1), d);
      add_kos(out, key.wedge, key.m, true, coef * scalar(d, D.delta), d);
      add_kappa(out, key.wedge, proj(qn), coef * x1 * Rational(-1), d);
    } else {
      const Polynomial qm = D.q(D.mu_on_tilde(key.m));
      add_eta(out, key.wedge, D.on_tilde(qm), coef * x1, d);
      add_kappa(out, key.wedge, proj(qm), coef * x1, d);
      add_kos(out, key.wedge, key.m, false, coef * scalar(d, D.delta), d);
    }
  }
  return out;
}

}  // namespace

Vec eta(const std::vector<int>& c, const Monomial& m, int d) {
  Vec out;
  add_eta(out, c, Dual{{m, Rational(1)}}, scalar(d, 1), d);
  return out;
}

Vec kappa(const std::vector<int>& c, const Monomial& m, int d) {
  Vec out;
  add_kappa(out, c, Polynomial(m, Rational(1)), scalar(d, 1), d);
  return out;
}

Vec embed(const BasisElement& e, int d) {
  return e.kind == glres::Kind::X ? eta(e.a, e.m, d) : kappa(e.a, e.m, d);
}

std::map<std::size_t, Polynomial> solve_in(const glres::OrderedBasis& basis, const Vec& v, int d) {
  // Coordinates rows = keys of the basis embeddings.
  std::map<Key, std::size_t> row_of;
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    cols.push_back(embed(basis.element(j), d));
    for (const auto& [k, p] : cols.back()) row_of.emplace(k, 0);
  }
  for (const auto& [k, p] : v)
    if (!row_of.count(k)) throw std::logic_error("vector leaves the span of the basis");
  std::size_t r = 0;
  for (auto& [k, i] : row_of) i = r++;
  RatMatrix E(row_of.size(), basis.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, p] : cols[j]) E(row_of[k], j) = p.coefficient(Monomial::one(d)) * basis.sign(j);

  // Group v by x-monomial; solve E c = v_mu by least squares normal equations (E has full column rank).
  std::map<Monomial, std::vector<Rational>> parts;
  for (const auto& [k, p] : v)
    for (const auto& [mu, c] : p.terms()) {
      auto& vec = parts[mu];
      vec.resize(row_of.size(), Rational(0));
      vec[row_of[k]] = c;
    }
  const RatMatrix Et = E.transpose();
  const RatMatrix inv = oracle::gauss_inverse(Et * E);
  std::map<std::size_t, Polynomial> out;
  for (const auto& [mu, vec] : parts) {
    RatMatrix b(vec.size(), 1);
    for (std::size_t i = 0; i < vec.size(); ++i) b(i, 0) = vec[i];
    const RatMatrix c = inv * (Et * b);
    const RatMatrix back = E * c;
    if (!(back == b)) throw std::logic_error("vector leaves the span of the basis");
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (c(j, 0) != 0) {
        out[j].add_term(mu, c(j, 0));
        if (out[j].is_zero()) out.erase(j);
      }
  }
  return out;
}

glres::PolyMatrix differential(const glres::InverseSystem& phi, int r) {
  const Data D(phi);
  const int d = D.d, n = D.n;
  const Polynomial x1 = xvar(d, 1);
  const auto src = glres::enumerate_basis(d, n, r);
  const auto dst = glres::enumerate_basis(d, n, r - 1);
  glres::PolyMatrix M(dst.size(), src.size());

  if (r == 1) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      const BasisElement& e = src.element(j);
      const Vec v = embed(e, d);
      Polynomial p(d);
      for (const auto& [k, c] : v) {
        const Rational s = c.coefficient(Monomial::one(d));
        if (k.dual) {
          p += x1 * D.q(Dual{{k.m, Rational(1)}}) * s;
        } else {
          p += Polynomial(k.m, D.delta * s);
          p -= x1 * D.q(D.mu_on_tilde(k.m)) * s;
        }
      }
      M(0, j) = p;
    }
    return M;
  }

  auto place = [&](std::size_t j, const Vec& out) {
    for (const auto& [k, p] : out)
      if (k.dual && k.m.divisible_by_var(1)) throw std::logic_error("x1^* component survives");
    for (const auto& [i, p] : solve_in(dst, out, d)) M(i, j) = p;
  };

  if (r == d) {
    std::vector<int> omega;
    for (int i = 2; i <= d; ++i) omega.push_back(i);
    Vec out;
    for (const auto& e : oracle::brute_monomials(d, n)) {
      const Monomial m(e);
      if (m.divisible_by_var(1)) continue;
      const Polynomial coef = Polynomial(m, D.delta) - x1 * D.q(D.mu_on_tilde(m));
      for (const auto& [k, c] : eta(omega, m, d)) add(out, k, coef * c);
    }
    for (const auto& e : oracle::brute_monomials(d, n - 1)) {
      const Monomial m(e);
      if (m.divisible_by_var(1)) continue;
      const Polynomial coef = x1 * D.q(Dual{{m, Rational(1)}}) * Rational(-1);
      for (const auto& [k, c] : kappa(omega, m, d)) add(out, k, coef * c);
    }
    place(0, out);
    return M;
  }

  for (std::size_t j = 0; j < src.size(); ++j) place(j, apply_interior(D, embed(src.element(j), d)));
  return M;
}

glres::Combination straighten(bool is_eta, const std::vector<int>& c, const Monomial& m, int d, int n) {
  const auto basis = glres::enumerate_basis(d, n, static_cast<int>(c.size()));
  const Vec v = is_eta ? eta(c, m, d) : kappa(c, m, d);
  glres::Combination out;
  for (const auto& [j, p] : solve_in(basis, v, d)) out[basis.element(j)] = p.coefficient(Monomial::one(d));
  return out;
}

int pairing(const BasisElement& e, const BasisElement& f, int d) {
  if (e.r + f.r != d) return 0;
  if (e.r == 0 || f.r == 0) return 1;
  if (e.kind == f.kind) return 0;
  // [mu(nu')](theta'_r) ^ theta_{d-r} with Y = kappa(theta' (x) mu) first,
  // or -[mu'(nu)](theta_r) ^ theta'_{d-r} with X first.
  const BasisElement& y = e.kind == glres::Kind::Y ? e : f;
  const BasisElement& x = e.kind == glres::Kind::Y ? f : e;
  if (!y.m.divides(x.m)) return 0;
  const Monomial rest = x.m / y.m;  // degree one: x_j^*
  int j = 0;
  for (int i = 1; i <= d; ++i)
    if (rest.divisible_by_var(i)) j = i;
  std::vector<int> contracted, result;
  if (e.kind == glres::Kind::Y) {
    const int s = contract_wedge(j, y.a, contracted);
    return s * wedge(contracted, x.a, result);
  }
  const int s = contract_wedge(j, x.a, contracted);
  return -s * wedge(contracted, y.a, result);
}

}  // namespace ambient
