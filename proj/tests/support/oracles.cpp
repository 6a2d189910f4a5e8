#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

RatMatrix minor_of(const RatMatrix& m, std::size_t skip_r, std::size_t skip_c) {
  RatMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == skip_r) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == skip_c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Row echelon in place; returns rank and the determinant sign/product.
std::size_t eliminate(RatMatrix& m, Rational* det) {
  std::size_t rank = 0;
  Rational prod = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) {
      prod = 0;
      continue;
    }
    if (p != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
      prod = -prod;
    }
    prod *= m(rank, c);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  if (det) *det = rank == m.rows() ? prod : Rational(0);
  return rank;
}

void odometer(int nvars, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur.push_back(e);
    odometer(nvars, left - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Rational cofactor_det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square only");
  if (m.rows() == 0) return 1;
  if (m.rows() == 1) return m(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(0, j) == 0) continue;
    const Rational c = m(0, j) * cofactor_det(minor_of(m, 0, j));
    s += j % 2 == 0 ? c : Rational(-c);
  }
  return s;
}

RatMatrix cofactor_adjugate(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = cofactor_det(minor_of(m, i, j));
      adj(j, i) = (i + j) % 2 == 0 ? c : Rational(-c);
    }
  return adj;
}

Rational gauss_det(RatMatrix m) {
  Rational det;
  eliminate(m, &det);
  return det;
}

std::size_t gauss_rank(RatMatrix m) { return eliminate(m, nullptr); }

RatMatrix gauss_inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular");
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

bool brute_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a > b;
}

std::vector<std::vector<int>> brute_monomials(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  odometer(nvars, degree, cur, out);
  std::sort(out.begin(), out.end(), brute_less);
  return out;
}

std::uint64_t pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

std::vector<std::uint64_t> betti_closed_form(int d, int n) {
  std::vector<std::uint64_t> b{1};
  for (int i = 1; i <= d - 1; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(2 * n + d - 2) * pascal(n + d - 2, i - 1) *
                              pascal(n + d - i - 2, n - 1);
    if (num % (n + i - 1) != 0) throw std::logic_error("closed form not integral");
    b.push_back(num / (n + i - 1));
  }
  b.push_back(1);
  return b;
}

std::vector<std::uint64_t> betti_from_hilbert(const std::vector<std::size_t>& hf, int d, int n) {
  std::vector<long long> poly(hf.size() + d, 0);
  for (std::size_t e = 0; e < hf.size(); ++e)
    for (int k = 0; k <= d; ++k)
      poly[e + k] += static_cast<long long>(hf[e]) * static_cast<long long>(pascal(d, k)) * (k % 2 ? -1 : 1);
  std::vector<std::uint64_t> b;
  b.push_back(static_cast<std::uint64_t>(poly[0]));
  for (int r = 1; r <= d - 1; ++r) b.push_back(static_cast<std::uint64_t>(std::llabs(poly[n + r - 1])));
  b.push_back(static_cast<std::uint64_t>(std::llabs(poly[2 * n + d - 2])));
  return b;
}

RatMatrix catalecticant(const glres::InverseSystem& phi, int j) {
  const auto a = brute_monomials(phi.d(), j);
  const auto b = brute_monomials(phi.d(), phi.socle_degree() - j);
  RatMatrix T(a.size(), b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      std::vector<int> prod(phi.d());
      for (int v = 0; v < phi.d(); ++v) prod[v] = a[i][v] + b[k][v];
      T(i, k) = phi.t(Monomial(prod));
    }
  return T;
}

std::vector<std::size_t> hilbert(const glres::InverseSystem& phi) {
  std::vector<std::size_t> h;
  for (int j = 0; j <= phi.socle_degree(); ++j) h.push_back(gauss_rank(catalecticant(phi, j)));
  return h;
}

std::vector<Rational> contraction(const Polynomial& g, const glres::InverseSystem& phi) {
  const int j = g.degree();
  const auto b = brute_monomials(phi.d(), phi.socle_degree() - j);
  std::vector<Rational> out(b.size(), Rational(0));
  for (const auto& [mu, c] : g.terms())
    for (std::size_t k = 0; k < b.size(); ++k) {
      std::vector<int> prod(phi.d());
      for (int v = 0; v < phi.d(); ++v) prod[v] = mu[v + 1] + b[k][v];
      out[k] += c * phi.t(Monomial(prod));
    }
  return out;
}

}  // namespace oracle
