#include "glres/differentials.hpp"

#include <algorithm>

namespace glres {

namespace {

Rational sgn(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// col[target] += c * x_var (var 0 means the constant monomial).
void add_linear(Column& col, const BasisElement& target, const Rational& c, int var, int d) {
  if (c == 0) return;
  const Monomial mono = var == 0 ? Monomial::one(d) : Monomial::variable(d, var);
  Polynomial& p = col[target];
  p.add_term(mono, c);
  if (p.is_zero()) col.erase(target);
}

std::vector<int> drop(const std::vector<int>& a, std::initializer_list<std::size_t> positions) {
  std::vector<int> b;
  for (std::size_t i = 1; i <= a.size(); ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) b.push_back(a[i - 1]);
  return b;
}

// [2..g] followed by g+1 followed by a_g..a_r with the given positions removed.
std::vector<int> inserted(const std::vector<int>& a, int g, std::initializer_list<std::size_t> positions) {
  std::vector<int> b(a.begin(), a.begin() + (g - 1));
  b.push_back(g + 1);
  for (std::size_t i = g; i <= a.size(); ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) b.push_back(a[i - 1]);
  return b;
}

void check_element(const Ingredients& in, const BasisElement& e, Kind kind) {
  if (e.kind != kind || e.r < 2 || e.r > in.d() - 1 || !is_standard(e, in.d(), in.n()))
    throw std::invalid_argument("not a standard interior basis element of the expected kind: " + e.str());
}

}  // namespace

Ingredients::Ingredients(const InverseSystem& phi) : Ingredients(phi, delta_and_Q(phi)) {}

Ingredients::Ingredients(const InverseSystem& phi, const Catalecticant& cat)
    : phi_(phi), cat_(cat), d_(phi.d()), n_(phi.n()) {}

const std::vector<Monomial>& Ingredients::mons(int low, int s) const {
  auto key = std::make_pair(low, s);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, monomials_of_degree(d_, low, s)).first;
  return it->second;
}

PolyMatrix b1_matrix(const Ingredients& in) {
  const int d = in.d(), n = in.n();
  const OrderedBasis B1 = enumerate_basis(d, n, 1);
  PolyMatrix M(1, B1.size());
  const Monomial x1 = in.x(1);
  for (std::size_t j = 0; j < B1.size(); ++j) {
    const BasisElement& e = B1.element(j);
    const int a1 = e.a.front();
    Polynomial p(d);
    if (e.kind == Kind::X) {
      const Monomial mq = e.m.divided_by_var(a1);
      for (const auto& m1 : in.mons(1, n - 1)) p.add_term(x1 * m1, in.Q(m1, mq));
    } else {
      p.add_term(e.m.times_var(a1), in.delta());
      for (const auto& m1 : in.mons(1, n - 2))
        for (const auto& m2 : in.mons(1, n - 1))
          p.add_term(x1 * m2, -in.Q(m2, x1 * m1) * in.t(in.x(a1) * m1 * e.m));
    }
    M(0, j) = std::move(p);
  }
  return M;
}

PolyMatrix bd_matrix(const Ingredients& in) {
  const int d = in.d(), n = in.n();
  const OrderedBasis Bd1 = enumerate_basis(d, n, d - 1);
  PolyMatrix M(Bd1.size(), 1);
  const Monomial x1 = in.x(1);
  std::vector<int> full;
  for (int i = 2; i <= d; ++i) full.push_back(i);
  for (const auto& m : in.mons(2, n)) {
    Polynomial p(d);
    p.add_term(m, in.delta());
    for (const auto& m1 : in.mons(1, n - 2))
      for (const auto& m2 : in.mons(1, n - 1)) p.add_term(x1 * m2, -in.Q(m2, x1 * m1) * in.t(m1 * m));
    M(Bd1.position(make_X(full, m)), 0) = std::move(p);
  }
  for (const auto& m : in.mons(2, n - 1)) {
    Polynomial p(d);
    for (const auto& m1 : in.mons(1, n - 1)) p.add_term(x1 * m1, -in.Q(m1, m));
    M(Bd1.position(make_Y(full, m)), 0) = std::move(p);
  }
  return M;
}

Column br_column_X(const Ingredients& in, const BasisElement& e) {
  check_element(in, e, Kind::X);
  const int d = in.d(), n = in.n(), r = e.r;
  const std::vector<int>& a = e.a;
  const Monomial& m = e.m;
  const int gamma = initial_run(a);
  const int lm = m.least();
  const Monomial x1 = in.x(1);
  auto A = [&](int k) { return a[k - 1]; };
  auto div = [&](int v) { return m.divisible_by_var(v); };
  Column col;

  // Summand 1.
  for (int l = 2; l <= gamma; ++l)
    for (int k = l; k <= r; ++k)
      for (const auto& m2 : in.mons(l, n - 1)) {
        Rational c = 0;
        for (const auto& m1 : in.mons(1, n - 2)) {
          if (div(A(k))) c += in.t(m1 * m2 * in.x(l)) * in.Q(x1 * m1, m.divided_by_var(A(k)));
          if (div(l)) c -= in.t(m1 * m2 * in.x(A(k))) * in.Q(x1 * m1, m.divided_by_var(l));
        }
        add_linear(col, make_X(drop(a, {std::size_t(k)}), m2.times_var(l)), sgn(k) * c, 1, d);
      }
  // Summand 2.
  for (int j = gamma; j <= r; ++j)
    for (int k = j + 1; k <= r; ++k)
      for (const auto& m2 : in.mons(gamma + 1, n - 1)) {
        Rational c = 0;
        for (const auto& m1 : in.mons(1, n - 2)) {
          if (div(A(k))) c += in.t(m1 * m2 * in.x(A(j))) * in.Q(x1 * m1, m.divided_by_var(A(k)));
          if (div(A(j))) c -= in.t(m1 * m2 * in.x(A(k))) * in.Q(x1 * m1, m.divided_by_var(A(j)));
        }
        const auto target = make_X(inserted(a, gamma, {std::size_t(j), std::size_t(k)}), m2.times_var(gamma + 1));
        add_linear(col, target, sgn(gamma + j + k) * c, 1, d);
      }
  // Summand 3.
  for (int j = 1; j <= lm - 1; ++j)
    for (int k = j + 1; k <= r; ++k) {
      if (!div(A(k))) continue;
      const auto target = make_X(drop(a, {std::size_t(k)}), m.times_var(j + 1).divided_by_var(A(k)));
      add_linear(col, target, sgn(k + 1) * in.delta(), A(j), d);
    }
  // Summand 4.
  for (int j = lm; j <= r; ++j)
    add_linear(col, make_X(drop(a, {std::size_t(j)}), m), sgn(j) * in.delta(), A(j), d);
  // Summand 5.
  for (int k = 2; k <= r; ++k)
    for (const auto& m1 : in.mons(A(1), n - 1)) {
      Rational c = 0;
      if (div(A(k))) c += in.Q(m1, m.divided_by_var(A(k)));
      if (m1.divisible_by_var(A(k)) && div(A(1)))
        c -= in.Q(m1.times_var(A(1)).divided_by_var(A(k)), m.divided_by_var(A(1)));
      add_linear(col, make_Y(drop(a, {std::size_t(k)}), m1), sgn(k) * c, 1, d);
    }
  // Summand 6.
  if (r >= 2 && div(A(1)))
    for (int l = A(1) + 1; l <= A(2) - 1; ++l)
      for (int k = 2; k <= r; ++k)
        for (const auto& m1 : in.mons(l, n - 1)) {
          if (!m1.divisible_by_var(A(k))) continue;
          const Rational c = in.Q(m1.times_var(l).divided_by_var(A(k)), m.divided_by_var(A(1)));
          std::vector<int> list{l};
          for (int v : drop(a, {1, std::size_t(k)})) list.push_back(v);
          add_linear(col, make_Y(list, m1), sgn(k + 1) * c, 1, d);
        }
  // Summand 7.
  if (div(A(1)))
    for (const auto& m1 : in.mons(A(2), n - 1))
      add_linear(col, make_Y(drop(a, {1}), m1), -in.Q(m1, m.divided_by_var(A(1))), 1, d);
  return col;
}

Column br_column_Y(const Ingredients& in, const BasisElement& e) {
  check_element(in, e, Kind::Y);
  const int d = in.d(), n = in.n(), r = e.r;
  const std::vector<int>& a = e.a;
  const Monomial& m = e.m;
  const int gamma = initial_run(a);
  const int lm = m.least();
  const Monomial x1 = in.x(1);
  auto A = [&](int k) { return a[k - 1]; };
  const auto& low = in.mons(1, n - 2);
  Column col;

  // sum over m1, m2 of Q(x1 m1, x1 m2) t(x_u m m2) t(x_v m1 m3)
  auto qtt = [&](int u, int v, const Monomial& m3) {
    Rational c = 0;
    for (const auto& m2 : low) {
      const Rational& tu = in.t(in.x(u) * m * m2);
      if (tu == 0) continue;
      for (const auto& m1 : low) c += in.Q(x1 * m1, x1 * m2) * tu * in.t(in.x(v) * m1 * m3);
    }
    return c;
  };
  // sum over m2 of t(x_u m m2) Q(p, x1 m2)
  auto tq = [&](int u, const Monomial& p) {
    Rational c = 0;
    for (const auto& m2 : low) c += in.t(in.x(u) * m * m2) * in.Q(p, x1 * m2);
    return c;
  };

  // Summand 1.
  for (int l = 2; l <= gamma; ++l)
    for (int k = l; k <= r; ++k)
      for (const auto& m3 : in.mons(l, n - 1)) {
        const Rational c = qtt(l, A(k), m3) - qtt(A(k), l, m3);
        add_linear(col, make_X(drop(a, {std::size_t(k)}), m3.times_var(l)), sgn(k) * c, 1, d);
      }
  // Summand 2.
  for (int j = gamma; j <= r; ++j)
    for (int k = j + 1; k <= r; ++k)
      for (const auto& m3 : in.mons(gamma + 1, n - 1)) {
        const Rational c = qtt(A(j), A(k), m3) - qtt(A(k), A(j), m3);
        const auto target = make_X(inserted(a, gamma, {std::size_t(j), std::size_t(k)}), m3.times_var(gamma + 1));
        add_linear(col, target, sgn(j + gamma + k) * c, 1, d);
      }
  // Summand 3.
  for (int l = 2; l <= A(1) - 1; ++l)
    for (int j = 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k)
        for (const auto& m1 : in.mons(l, n - 1)) {
          Rational c = 0;
          if (m1.divisible_by_var(A(j))) c += tq(A(k), m1.times_var(l).divided_by_var(A(j)));
          if (m1.divisible_by_var(A(k))) c -= tq(A(j), m1.times_var(l).divided_by_var(A(k)));
          std::vector<int> list{l};
          for (int v : drop(a, {std::size_t(j), std::size_t(k)})) list.push_back(v);
          add_linear(col, make_Y(list, m1), sgn(k + j) * c, 1, d);
        }
  // Summand 4.
  for (int k = 2; k <= r; ++k)
    for (const auto& m1 : in.mons(A(1), n - 1)) {
      Rational c = -tq(A(k), m1);
      if (m1.divisible_by_var(A(k))) c += tq(A(1), m1.times_var(A(1)).divided_by_var(A(k)));
      add_linear(col, make_Y(drop(a, {std::size_t(k)}), m1), sgn(k) * c, 1, d);
    }
  // Summand 5.
  for (int l = A(1) + 1; l <= A(2) - 1; ++l)
    for (int k = 2; k <= r; ++k)
      for (const auto& m1 : in.mons(l, n - 1)) {
        if (!m1.divisible_by_var(A(k))) continue;
        const Rational c = tq(A(1), m1.times_var(l).divided_by_var(A(k)));
        std::vector<int> list{l};
        for (int v : drop(a, {1, std::size_t(k)})) list.push_back(v);
        add_linear(col, make_Y(list, m1), sgn(k) * c, 1, d);
      }
  // Summand 6.
  for (const auto& m1 : in.mons(A(2), n - 1))
    add_linear(col, make_Y(drop(a, {1}), m1), tq(A(1), m1), 1, d);
  // Summand 7.
  for (int j = 2; j <= r; ++j)
    add_linear(col, make_Y(drop(a, {std::size_t(j)}), m), sgn(j) * in.delta(), A(j), d);
  // Summands 8 and 9.
  if (A(2) <= lm) {
    add_linear(col, make_Y(drop(a, {1}), m), -in.delta(), A(1), d);
  } else {
    const Monomial base = m.divided_by_var(lm);
    for (int k = 2; k <= r; ++k) {
      std::vector<int> list{lm};
      for (int v : drop(a, {1, std::size_t(k)})) list.push_back(v);
      add_linear(col, make_Y(list, base.times_var(A(k))), -sgn(k) * in.delta(), A(1), d);
    }
  }
  return col;
}

PolyMatrix assemble(const std::vector<Column>& cols, const OrderedBasis& rows) {
  PolyMatrix M(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [target, p] : cols[j]) M(rows.position(target), j) += p;
  return M;
}

namespace {

Resolution skeleton_resolution(const InverseSystem& phi, Catalecticant cat) {
  if (!cat.admissible())
    throw InadmissibleError(
        "inadmissible inverse system: det T = 0, so the catalecticant is singular, A has a nonzero "
        "component in degree n-1 of the ideal, and no Gorenstein-linear resolution exists");
  Resolution res{phi.d(), phi.n(), phi, std::move(cat), {}, {}, twists(phi.d(), phi.n())};
  for (int r = 0; r <= phi.d(); ++r) res.bases.push_back(enumerate_basis(phi.d(), phi.n(), r));
  res.maps.resize(phi.d() + 1);
  return res;
}

Resolution build(const InverseSystem& phi, bool elementary) {
  Resolution res = skeleton_resolution(phi, delta_and_Q(phi));
  const Ingredients in(phi, res.cat);
  const int d = res.d;
  res.maps[1] = b1_matrix(in);
  for (int r = 2; r <= d - 1; ++r) {
    std::vector<Column> cols;
    for (const auto& [s, e] : res.bases[r].entries()) {
      if (elementary) cols.push_back(br_column_elementary(in, e));
      else cols.push_back(e.kind == Kind::X ? br_column_X(in, e) : br_column_Y(in, e));
    }
    res.maps[r] = assemble(cols, res.bases[r - 1]);
  }
  res.maps[d] = bd_matrix(in);
  return res;
}

}  // namespace

Resolution build_resolution(const InverseSystem& phi) { return build(phi, false); }
Resolution build_resolution_elementary(const InverseSystem& phi) { return build(phi, true); }

RatMatrix pp_matrix(int d, const OrderedBasis& rows, const OrderedBasis& cols) {
  RatMatrix P(rows.size(), cols.size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      P(i, j) = rows.sign(i) * cols.sign(j) * pp_value(d, rows.element(i), cols.element(j));
  return P;
}

std::vector<PolyMatrix> skeleton(const Resolution& res) {
  std::vector<PolyMatrix> out(res.maps.size());
  for (std::size_t r = 1; r < res.maps.size(); ++r) {
    const PolyMatrix& M = res.maps[r];
    out[r] = PolyMatrix(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) out[r](i, j) = M(i, j).substitute_x1_zero();
  }
  return out;
}

PolyMatrix rebase(const PolyMatrix& m, const OrderedBasis& raw_rows, const OrderedBasis& raw_cols,
                  const OrderedBasis& rows, const OrderedBasis& cols) {
  // New element = sign * raw element, so the entry picks up both signs.
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t ri = raw_rows.position(rows.element(i));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::size_t cj = raw_cols.position(cols.element(j));
      const int s = rows.sign(i) * raw_rows.sign(ri) * cols.sign(j) * raw_cols.sign(cj);
      out(i, j) = s == 1 ? m(ri, cj) : -m(ri, cj);
    }
  }
  return out;
}

Resolution in_bases(const Resolution& res, const std::vector<OrderedBasis>& bases) {
  Resolution out = res;
  out.bases = bases;
  for (int r = 1; r <= res.d; ++r)
    out.maps[r] = rebase(res.maps[r], res.bases[r - 1], res.bases[r], bases[r - 1], bases[r]);
  return out;
}

Resolution in_symmetric_bases(const Resolution& res) {
  std::vector<OrderedBasis> bases;
  for (int r = 0; r <= res.d; ++r) bases.push_back(symmetric_basis(res.d, res.n, r));
  return in_bases(res, bases);
}

}  // namespace glres
