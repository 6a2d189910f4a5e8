// Interior differentials evaluated on elementary generators eta(theta (x) m^*)
// and kappa(theta (x) m), then straightened into the standard basis.
#include "glres/differentials.hpp"

namespace glres {

namespace {

void add_comb(Column& col, const Combination& comb, const Polynomial& coef) {
  if (coef.is_zero()) return;
  for (const auto& [e, c] : comb) {
    Polynomial& p = col[e];
    p += coef * c;
    if (p.is_zero()) col.erase(e);
  }
}

Polynomial x1_times(int d, const Rational& c) { return Polynomial(Monomial::variable(d, 1), c); }

Column column_X(const Ingredients& in, const BasisElement& e) {
  const int d = in.d(), n = in.n();
  const Monomial x1 = in.x(1);
  const Monomial& m = e.m;
  Column col;
  for (int j = 2; j <= d; ++j) {
    const auto [s, rest] = wedge_contract(j, e.a);
    if (s == 0) continue;
    // -delta x_j eta(x_j^* theta (x) m^*)
    add_comb(col, expand_eta(rest, m), Polynomial(in.x(j), Rational(-s) * in.delta()));
    if (!m.divisible_by_var(j)) continue;
    const Monomial mj = m.divided_by_var(j);
    for (const auto& m2 : in.mons(2, n)) {
      Rational c = 0;
      for (const auto& m1 : in.mons(1, n - 2)) c += in.t(m1 * m2) * in.Q(x1 * m1, mj);
      add_comb(col, expand_eta(rest, m2), x1_times(d, Rational(-s) * c));
    }
    for (const auto& m1 : in.mons(2, n - 1))
      add_comb(col, expand_kappa(rest, m1), x1_times(d, Rational(-s) * in.Q(m1, mj)));
  }
  return col;
}

Column column_Y(const Ingredients& in, const BasisElement& e) {
  const int d = in.d(), n = in.n();
  const Monomial x1 = in.x(1);
  const Monomial& m = e.m;
  const auto& low = in.mons(1, n - 2);
  Column col;
  for (int j = 2; j <= d; ++j) {
    const auto [s, rest] = wedge_contract(j, e.a);
    if (s == 0) continue;
    const Monomial xjm = in.x(j) * m;
    for (const auto& m3 : in.mons(2, n)) {
      Rational c = 0;
      for (const auto& m2 : low) {
        const Rational& tj = in.t(xjm * m2);
        if (tj == 0) continue;
        for (const auto& m1 : low) c += tj * in.Q(x1 * m1, x1 * m2) * in.t(m1 * m3);
      }
      add_comb(col, expand_eta(rest, m3), x1_times(d, Rational(s) * c));
    }
    for (const auto& m1 : in.mons(2, n - 1)) {
      Rational c = 0;
      for (const auto& m2 : low) c += in.t(xjm * m2) * in.Q(m1, x1 * m2);
      add_comb(col, expand_kappa(rest, m1), x1_times(d, Rational(s) * c));
    }
    add_comb(col, expand_kappa(rest, m), Polynomial(in.x(j), Rational(-s) * in.delta()));
  }
  return col;
}

}  // namespace

Column br_column_elementary(const Ingredients& in, const BasisElement& e) {
  if (e.r < 2 || e.r > in.d() - 1 || !is_standard(e, in.d(), in.n()))
    throw std::invalid_argument("not a standard interior basis element: " + e.str());
  return e.kind == Kind::X ? column_X(in, e) : column_Y(in, e);
}

}  // namespace glres
