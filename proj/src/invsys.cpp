#include "glres/invsys.hpp"

#include <random>

#include "glres/linalg.hpp"

namespace glres {

DualElement DualElement::basis(const Monomial& m) {
  DualElement e(m.nvars(), m.degree());
  e.add_term(m, 1);
  return e;
}

Rational DualElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DualElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.degree() != degree_) throw std::invalid_argument("dual element degree mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DualElement& DualElement::operator+=(const DualElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

InverseSystem::InverseSystem(int d, int n, const std::map<Monomial, Rational>& coeffs)
    : d_(d), n_(n) {
  if (d < 3 || d > kMaxVars) throw InputError("d must lie in [3, " + std::to_string(kMaxVars) + "]");
  if (n < 2) throw InputError("n must be at least 2");
  const int deg = 2 * n - 2;
  dense_.assign(binomial(deg + d - 1, d - 1), Rational(0));
  for (const auto& [m, c] : coeffs) {
    if (m.nvars() != d) throw InputError("coefficient monomial " + m.str() + " has wrong length");
    if (m.degree() != deg)
      throw InputError("coefficient monomial " + m.str() + " is not of degree " + std::to_string(deg));
    if (c == 0) continue;
    coeffs_.emplace(m, c);
    dense_[monomial_index(m)] = c;
  }
}

const Rational& InverseSystem::t(const Monomial& m) const {
  static const Rational zero(0);
  if (m.degree() != 2 * n_ - 2) return zero;
  return dense_[monomial_index(m)];
}

DualElement InverseSystem::as_dual() const {
  DualElement e(d_, 2 * n_ - 2);
  for (const auto& [m, c] : coeffs_) e.add_term(m, c);
  return e;
}

InverseSystem InverseSystem::swapped(int i, int j) const {
  std::map<Monomial, Rational> c;
  for (const auto& [m, v] : coeffs_) c.emplace(m.swapped(i, j), v);
  return InverseSystem(d_, n_, c);
}

DualElement contract(const Monomial& mu, const DualElement& nu) {
  DualElement out(nu.nvars(), nu.degree() - mu.degree());
  if (mu.degree() > nu.degree()) return out;
  for (const auto& [m, c] : nu.terms())
    if (auto q = m.try_divide(mu)) out.add_term(*q, c);
  return out;
}

DualElement contract(const Polynomial& g, const DualElement& nu) {
  const int deg = g.is_zero() ? 0 : g.degree();
  if (!g.is_homogeneous()) throw std::invalid_argument("contract: polynomial must be homogeneous");
  DualElement out(nu.nvars(), nu.degree() - deg);
  for (const auto& [mu, c] : g.terms()) {
    DualElement part = contract(mu, nu);
    for (const auto& [m, v] : part.terms()) out.add_term(m, c * v);
  }
  return out;
}

Rational evaluate(const Polynomial& g, const DualElement& nu) {
  Rational s = 0;
  for (const auto& [mu, c] : g.terms()) s += c * nu.coefficient(mu);
  return s;
}

RatMatrix catalecticant_matrix(const InverseSystem& phi, int j) {
  const int top = phi.socle_degree();
  if (j < 0 || j > top) throw std::out_of_range("catalecticant degree out of range");
  const auto rows = monomials_of_degree(phi.d(), 1, j);
  const auto cols = monomials_of_degree(phi.d(), 1, top - j);
  RatMatrix m(rows.size(), cols.size(), Rational(0));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = phi.t(rows[a] * cols[b]);
  return m;
}

Catalecticant delta_and_Q(const InverseSystem& phi) {
  Catalecticant cat;
  cat.index = monomials_of_degree(phi.d(), 1, phi.n() - 1);
  cat.T = catalecticant_matrix(phi, phi.n() - 1);
  DetAdj da = det_and_adjugate(cat.T);
  cat.delta = da.det;
  cat.Q = std::move(da.adj);
  return cat;
}

Polynomial q_of(const Catalecticant& cat, const DualElement& nu) {
  if (!nu.is_zero() && nu.degree() != static_cast<int>(cat.index.front().degree()))
    throw std::invalid_argument("q_of: dual element must have degree n-1");
  Polynomial out(cat.index.front().nvars());
  for (const auto& [m2, c] : nu.terms()) {
    const std::size_t col = monomial_index(m2);
    for (std::size_t row = 0; row < cat.index.size(); ++row)
      if (cat.Q(row, col) != 0) out.add_term(cat.index[row], c * cat.Q(row, col));
  }
  return out;
}

DualElement tilde_contract(const InverseSystem& phi, const Monomial& m) {
  if (m.divisible_by_var(1)) throw std::invalid_argument("tilde_contract: monomial divisible by x1");
  const int top = phi.socle_degree();
  if (m.degree() > top) throw std::invalid_argument("tilde_contract: degree too large");
  DualElement out(phi.d(), top - m.degree() + 1);
  for (const auto& m2 : monomials_of_degree(phi.d(), 1, top - m.degree())) {
    const Rational& c = phi.t(m * m2);
    if (c != 0) out.add_term(m2.times_var(1), c);
  }
  return out;
}

std::vector<Polynomial> ann_degree(const InverseSystem& phi, int j) {
  const auto mons = monomials_of_degree(phi.d(), 1, j);
  std::vector<Polynomial> out;
  if (j > phi.socle_degree()) {
    for (const auto& m : mons) out.emplace_back(m, Rational(1));
    return out;
  }
  // g = sum c_mu mu kills phi iff c lies in the left kernel of the catalecticant.
  const RatMatrix cat = catalecticant_matrix(phi, j);
  for (const auto& v : kernel_basis(cat.transpose())) {
    Polynomial g(phi.d());
    for (std::size_t i = 0; i < mons.size(); ++i) g.add_term(mons[i], v[i]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::size_t> hilbert_function(const InverseSystem& phi) {
  if (determinant(catalecticant_matrix(phi, phi.n() - 1)) == 0) throw std::domain_error("hilbert_function: delta is zero");
  std::vector<std::size_t> h;
  for (int j = 0; j <= phi.socle_degree(); ++j) h.push_back(rank(catalecticant_matrix(phi, j)));
  return h;
}

InverseSystem random_invsys(int d, int n, std::uint64_t seed, int bound) {
  if (d < 3 || n < 2) throw InputError("random_invsys requires d >= 3 and n >= 2");
  if (bound < 0) throw InputError("coefficient bound must be nonnegative");
  const auto mons = monomials_of_degree(d, 1, 2 * n - 2);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (int retry = 0; retry < kRandomRetryBudget; ++retry) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(retry)};
    std::mt19937_64 rng(seq);
    std::map<Monomial, Rational> coeffs;
    for (const auto& m : mons) {
      const long v = static_cast<long>(rng() % span) - bound;
      if (v != 0) coeffs.emplace(m, Rational(v));
    }
    InverseSystem phi(d, n, coeffs);
    if (determinant(catalecticant_matrix(phi, n - 1)) != 0) return phi;
  }
  throw std::runtime_error("could not find an admissible inverse system within the retry budget");
}

InverseSystem sum_of_squares(int d) {
  std::map<Monomial, Rational> c;
  for (int i = 1; i <= d; ++i) c.emplace(Monomial::variable(d, i) * Monomial::variable(d, i), Rational(1));
  return InverseSystem(d, 2, c);
}

}  // namespace glres
