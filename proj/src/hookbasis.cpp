#include "glres/hookbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace glres {

namespace {

void add_to(Combination& c, const BasisElement& e, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = c.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

// All strictly increasing lists of length k drawn from [lo, hi], lex order.
void subsets(int lo, int hi, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? lo : cur.back() + 1;
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    subsets(lo, hi, k, cur, out);
    cur.pop_back();
  }
}

std::vector<int> without(const std::vector<int>& a, std::size_t pos) {
  std::vector<int> b;
  b.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != pos) b.push_back(a[i]);
  return b;
}

}  // namespace

std::string BasisElement::str() const {
  std::string s = kind == Kind::X ? "X(" : "Y(";
  s += std::to_string(r) + "; ";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "; " + m.str() + ")";
}

bool operator<(const BasisElement& p, const BasisElement& q) {
  if (p.kind != q.kind) return p.kind == Kind::X;
  if (p.r != q.r) return p.r < q.r;
  if (p.a != q.a) return p.a < q.a;
  return p.m < q.m;
}

BasisElement make_X(const std::vector<int>& a, const Monomial& m) {
  return BasisElement{Kind::X, static_cast<int>(a.size()), a, m};
}

BasisElement make_Y(const std::vector<int>& a, const Monomial& m) {
  return BasisElement{Kind::Y, static_cast<int>(a.size()), a, m};
}

BasisElement boundary_Y0(int d) { return BasisElement{Kind::Y, 0, {}, Monomial::one(d)}; }

BasisElement boundary_Xd(int d) {
  std::vector<int> a;
  for (int i = 2; i <= d; ++i) a.push_back(i);
  return BasisElement{Kind::X, d, a, Monomial::one(d)};
}

int initial_run(const std::vector<int>& a) {
  int g = 1;
  for (int v : a) {
    if (v == g + 1) ++g;
    else if (v > g + 1) break;
  }
  return g;
}

bool is_standard(const BasisElement& e, int d, int n) {
  if (e.m.nvars() != d) return false;
  if (e.r == 0) return e.kind == Kind::Y && e.a.empty() && e.m.degree() == 0;
  if (e.r == d) return e == boundary_Xd(d);
  if (e.r < 0 || e.r > d - 1 || static_cast<int>(e.a.size()) != e.r) return false;
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    if (e.a[i] < 2 || e.a[i] > d) return false;
    if (i && e.a[i] <= e.a[i - 1]) return false;
  }
  if (e.m.divisible_by_var(1)) return false;
  if (e.kind == Kind::X) return e.m.degree() == n && e.m.least() <= initial_run(e.a);
  return e.m.degree() == n - 1 && e.a.front() <= e.m.least();
}

OrderedBasis::OrderedBasis(int r, std::vector<std::pair<int, BasisElement>> entries)
    : r_(r), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!pos_.emplace(entries_[i].second, i).second)
      throw std::invalid_argument("duplicate element in ordered basis: " + entries_[i].second.str());
}

std::size_t OrderedBasis::position(const BasisElement& e) const {
  auto it = pos_.find(e);
  if (it == pos_.end()) throw std::out_of_range("element not in basis: " + e.str());
  return it->second;
}

std::size_t OrderedBasis::count(Kind k) const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                [k](const auto& p) { return p.second.kind == k; }));
}

OrderedBasis enumerate_basis(int d, int n, int r) {
  if (r < 0 || r > d) throw std::out_of_range("homological degree out of range");
  std::vector<std::pair<int, BasisElement>> out;
  if (r == 0) return OrderedBasis(0, {{1, boundary_Y0(d)}});
  if (r == d) return OrderedBasis(d, {{1, boundary_Xd(d)}});
  std::vector<std::vector<int>> lists;
  std::vector<int> cur;
  subsets(2, d, r, cur, lists);
  for (const auto& a : lists) {
    const int g = initial_run(a);
    for (const auto& m : monomials_of_degree(d, 2, n))
      if (m.least() <= g) out.emplace_back(1, make_X(a, m));
  }
  for (const auto& a : lists)
    for (const auto& m : monomials_of_degree(d, a.front(), n - 1)) out.emplace_back(1, make_Y(a, m));
  return OrderedBasis(r, std::move(out));
}

Ranks rank_formulas(int d, int n, int r) {
  if (r == 0 || r == d) return {r == d ? 1u : 0u, r == 0 ? 1u : 0u, 1};
  const std::uint64_t k = binomial(d + n - 2, r - 1) * binomial(d + n - r - 2, n - 1);
  const std::uint64_t l = binomial(d + n - 2, r - 1 + n) * binomial(r + n - 2, r - 1);
  return {k, l, k + l};
}

std::vector<std::uint64_t> betti_numbers(int d, int n) {
  std::vector<std::uint64_t> b;
  for (int r = 0; r <= d; ++r) b.push_back(rank_formulas(d, n, r).beta);
  return b;
}

std::vector<int> twists(int d, int n) {
  std::vector<int> t{0};
  for (int r = 1; r <= d - 1; ++r) t.push_back(n + r - 1);
  t.push_back(2 * n + d - 2);
  return t;
}

int sort_wedge(std::vector<int>& a) {
  int sign = 1;
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = i; j > 0 && a[j - 1] >= a[j]; --j) {
      if (a[j - 1] == a[j]) return 0;
      std::swap(a[j - 1], a[j]);
      sign = -sign;
    }
  return sign;
}

std::pair<int, std::vector<int>> wedge_contract(int i, const std::vector<int>& a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] == i) return {k % 2 == 0 ? 1 : -1, without(a, k)};
  return {0, {}};
}

Combination expand_eta(const std::vector<int>& c, const Monomial& m) {
  Combination out;
  const int g = initial_run(c);
  if (m.least() <= g) {
    out.emplace(make_X(c, m), Rational(1));
    return out;
  }
  // Positions k >= g (1-based) hold the entries of c beyond the initial run.
  const Monomial shifted = m.times_var(g + 1);
  for (std::size_t k = g; k <= c.size(); ++k) {
    const int ck = c[k - 1];
    if (!m.divisible_by_var(ck)) continue;
    std::vector<int> a(c.begin(), c.begin() + (g - 1));
    a.push_back(g + 1);
    for (std::size_t j = g; j <= c.size(); ++j)
      if (j != k) a.push_back(c[j - 1]);
    add_to(out, make_X(a, shifted.divided_by_var(ck)), Rational((k + g) % 2 == 0 ? 1 : -1));
  }
  return out;
}

Combination expand_kappa(const std::vector<int>& c, const Monomial& m) {
  Combination out;
  const int lm = m.least();
  if (c.front() <= lm) {
    out.emplace(make_Y(c, m), Rational(1));
    return out;
  }
  const Monomial base = m.divided_by_var(lm);
  for (std::size_t k = 1; k <= c.size(); ++k) {
    std::vector<int> a{lm};
    for (std::size_t j = 1; j <= c.size(); ++j)
      if (j != k) a.push_back(c[j - 1]);
    add_to(out, make_Y(a, base.times_var(c[k - 1])), Rational(k % 2 == 1 ? 1 : -1));
  }
  return out;
}

std::pair<PolyMatrix, PolyMatrix> skeleton_kos_blocks(int d, int n, int r) {
  if (r < 2 || r > d - 1) throw std::out_of_range("skeleton blocks need 2 <= r <= d-1");
  const OrderedBasis src = enumerate_basis(d, n, r);
  const OrderedBasis dst = enumerate_basis(d, n, r - 1);
  const std::size_t kx_src = src.count(Kind::X), kx_dst = dst.count(Kind::X);
  PolyMatrix K(kx_dst, kx_src), L(dst.size() - kx_dst, src.size() - kx_src);
  // Kos(x_a (x) v) = sum over k of (-1)^k x_{a_k} (x_{a minus a_k} (x) v).
  for (std::size_t j = 0; j < src.size(); ++j) {
    const BasisElement& e = src.element(j);
    for (std::size_t k = 1; k <= e.a.size(); ++k) {
      const std::vector<int> rest = without(e.a, k - 1);
      const Combination comb =
          e.kind == Kind::X ? expand_eta(rest, e.m) : expand_kappa(rest, e.m);
      const Polynomial xk = Polynomial::variable(d, e.a[k - 1]);
      const Rational sign = k % 2 == 0 ? 1 : -1;
      for (const auto& [target, coef] : comb) {
        const std::size_t row = dst.position(target);
        if (e.kind == Kind::X) K(row, j) += xk * Rational(sign * coef);
        else L(row - kx_dst, j - kx_src) += xk * Rational(sign * coef);
      }
    }
  }
  return {K, L};
}

int pp_value(int d, const BasisElement& e, const BasisElement& f) {
  if (e.r + f.r != d) return 0;
  if (e.r == 0) return f.r == d ? 1 : 0;
  if (f.r == 0) return e.r == d ? 1 : 0;
  if (e.kind == f.kind) return 0;
  const BasisElement& y = e.kind == Kind::Y ? e : f;
  const BasisElement& x = e.kind == Kind::Y ? f : e;
  if (y.m.times_var(y.a.front()) != x.m) return 0;
  std::vector<int> tail(y.a.begin() + 1, y.a.end());
  std::vector<int> w;
  if (e.kind == Kind::Y) {
    w = tail;
    w.insert(w.end(), x.a.begin(), x.a.end());
  } else {
    w = x.a;
    w.insert(w.end(), tail.begin(), tail.end());
  }
  const int s = sort_wedge(w);
  if (s == 0) return 0;
  // X of degree s paired against Y carries (-1)^s.
  return e.kind == Kind::Y ? s : (e.r % 2 == 0 ? s : -s);
}

OrderedBasis dual_ordered_basis(int d, int n, int r) {
  const OrderedBasis src = enumerate_basis(d, n, r);
  const OrderedBasis other = enumerate_basis(d, n, d - r);
  std::vector<std::pair<int, BasisElement>> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    int found = 0;
    for (std::size_t j = 0; j < other.size(); ++j) {
      const int v = pp_value(d, src.element(i), other.element(j));
      if (v == 0) continue;
      if (found) throw std::logic_error("pairing matrix is not a signed permutation");
      out.emplace_back(v, other.element(j));
      found = 1;
    }
    if (!found) throw std::logic_error("no dual partner for " + src.element(i).str());
  }
  return OrderedBasis(d - r, std::move(out));
}

OrderedBasis symmetric_basis(int d, int n, int r) {
  if (2 * r < d) return enumerate_basis(d, n, r);
  if (2 * r > d) return dual_ordered_basis(d, n, d - r);
  const OrderedBasis raw = enumerate_basis(d, n, r);
  const OrderedBasis dual = dual_ordered_basis(d, n, r);
  std::vector<std::pair<int, BasisElement>> out;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw.element(i).kind == Kind::X) out.push_back(raw.entries()[i]);
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw.element(i).kind == Kind::X) out.push_back(dual.entries()[i]);
  return OrderedBasis(r, std::move(out));
}

}  // namespace glres
