#include "glres/linalg.hpp"

#include <stdexcept>

namespace glres {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Polynomial& y = b(k, j);
        if (y.is_zero()) continue;
        for (const auto& [m, coef] : x.terms()) c(i, j).add_scaled(y, coef, m);
      }
    }
  return c;
}

PolyMatrix operator*(const RatMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += b(k, j) * a(i, k);
    }
  return c;
}

PolyMatrix operator*(const PolyMatrix& a, const RatMatrix& b) {
  return (b.transpose() * a.transpose()).transpose();
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix c(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

PolyMatrix scaled(const PolyMatrix& a, const Rational& s) {
  PolyMatrix c(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

bool is_zero(const PolyMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

EchelonForm fraction_free_echelon(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<mpz_class> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  EchelonForm ef;
  mpz_class prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      ef.swap_sign = -ef.swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ef.pivots.push_back(c);
    ++r;
  }
  ef.upper = Matrix<mpz_class>(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) ef.upper(i, j) = a(i, j);
  return ef;
}

std::size_t rank(const RatMatrix& m) { return fraction_free_echelon(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const EchelonForm ef = fraction_free_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = ef.pivots.size(); i-- > 0;) {
      const std::size_t p = ef.pivots[i];
      Rational s = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (x[j] != 0 && ef.upper(i, j) != 0) s += Rational(ef.upper(i, j)) * x[j];
      x[p] = -s / Rational(ef.upper(i, p));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const EchelonForm ef = fraction_free_echelon(m);
  if (ef.pivots.size() < n) return 0;
  // The last Bareiss pivot is the determinant of the row-scaled matrix.
  Rational det(ef.upper(n - 1, n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    det /= Rational(l);
  }
  return ef.swap_sign * det;
}

RatMatrix solve(const RatMatrix& m, const RatMatrix& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix a(m), x(b);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(p, j), x(c, j));
    }
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < x.cols(); ++j) x(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j)
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (x(c, j) != 0) x(i, j) -= f * x(c, j);
    }
  }
  return x;
}

DetAdj det_and_adjugate(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  DetAdj out{determinant(m), RatMatrix(n, n, Rational(0))};
  if (n == 0) return out;
  if (out.det != 0) {
    RatMatrix rhs = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) rhs(i, i) = out.det;
    out.adj = solve(m, rhs);
    return out;
  }
  // Singular: the adjugate vanishes unless rank is n-1; then use cofactors.
  if (n == 1) {
    out.adj(0, 0) = 1;
    return out;
  }
  if (rank(m) + 1 < n) return out;
  RatMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Rational cof = determinant(minor);
      out.adj(j, i) = ((i + j) % 2 == 0) ? cof : Rational(-cof);
    }
  return out;
}

RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t length) {
  RatMatrix m(length, cols.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != length) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < length; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace glres
