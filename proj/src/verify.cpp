#include "glres/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "glres/linalg.hpp"
#include "glres/modrank.hpp"

namespace glres {

namespace {

CheckResult ok(std::string name, std::string detail) { return {std::move(name), true, "", std::move(detail)}; }
CheckResult fail(std::string name, std::string witness, std::string detail = "") {
  return {std::move(name), false, std::move(witness), std::move(detail)};
}

std::string label(const OrderedBasis& b, std::size_t i) {
  return (b.sign(i) < 0 ? "-" : "") + b.element(i).str();
}

// First nonzero entry of a*b, as "row,col"; empty when the product vanishes.
std::string first_nonzero(const PolyMatrix& m, const OrderedBasis* rows, const OrderedBasis* cols) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        std::ostringstream os;
        os << "row " << (rows ? label(*rows, i) : std::to_string(i)) << ", col "
           << (cols ? label(*cols, j) : std::to_string(j)) << ": " << m(i, j).str();
        return os.str();
      }
  return "";
}

std::string mismatch(const PolyMatrix& got, const PolyMatrix& want, const OrderedBasis& rows,
                     const OrderedBasis& cols) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape differs";
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (!(got(i, j) == want(i, j)))
        return "row " + label(rows, i) + ", col " + label(cols, j) + ": got " + got(i, j).str() + ", expected " +
               want(i, j).str();
  return "";
}

PolyMatrix block(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  PolyMatrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
  return out;
}

std::size_t count_monomials(int d, int low, int e) {
  if (e < 0) return 0;
  return binomial(d - low + e, e);
}

// Rank lower bound of the degree-e strand of one map, stopping at `target`.
std::size_t modular_strand_rank(int d, int low, const PolyMatrix& m, int src_twist, int dst_twist, int e,
                                std::size_t target, std::uint32_t p) {
  const auto mult = monomials_of_degree(d, low, e - src_twist);
  const auto dst = monomials_of_degree(d, low, e - dst_twist);
  if (mult.empty() || dst.empty()) return 0;
  std::unordered_map<Monomial, std::uint32_t> where;
  where.reserve(dst.size() * 2);
  for (std::size_t k = 0; k < dst.size(); ++k) where.emplace(dst[k], static_cast<std::uint32_t>(k));

  // Column j as (row, monomial, residue) triples.
  struct Term {
    std::uint32_t row;
    Monomial mono;
    std::uint32_t val;
  };
  std::vector<std::vector<Term>> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& [mono, c] : m(i, j).terms())
        cols[j].push_back({static_cast<std::uint32_t>(i), mono, residue(c, p)});

  // Monomial-major coordinates with the monomial list reversed: pivots land on
  // the smallest monomials, which keeps fill-in low.
  const std::uint32_t R = static_cast<std::uint32_t>(m.rows());
  const std::uint32_t last = static_cast<std::uint32_t>(dst.size() - 1);
  ModularEchelon ech(dst.size() * R, p);
  std::vector<ModularEchelon::Entry> v;
  for (const auto& mu : mult)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v.clear();
      for (const auto& t : cols[j]) v.emplace_back((last - where.at(mu * t.mono)) * R + t.row, t.val);
      ech.insert(v);
      if (ech.rank() >= target) return ech.rank();
    }
  return ech.rank();
}

std::size_t certified_rank(int d, int low, const PolyMatrix& m, int src_twist, int dst_twist, int e,
                           std::size_t target) {
  std::size_t best = 0;
  for (std::uint32_t p : {kDefaultPrime, kBackupPrime}) {
    try {
      best = std::max(best, modular_strand_rank(d, low, m, src_twist, dst_twist, e, target, p));
    } catch (const std::domain_error&) {
      // p divides a denominator; try the other prime.
    }
    if (best >= target) break;
  }
  return best;
}

// Rows of the contraction map g -> g(phi), g in S_j, into D_{2n-2-j}.
RatMatrix contraction_rows(const InverseSystem& phi, const std::vector<Polynomial>& gs) {
  const int j = gs.empty() ? 0 : gs.front().degree();
  const auto target = monomials_of_degree(phi.d(), 1, phi.socle_degree() - j);
  RatMatrix M(gs.size(), target.size(), Rational(0));
  const DualElement dphi = phi.as_dual();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const DualElement img = contract(gs[i], dphi);
    for (std::size_t k = 0; k < target.size(); ++k) M(i, k) = img.coefficient(target[k]);
  }
  return M;
}

RatMatrix coefficient_rows(const std::vector<Polynomial>& gs, const std::vector<Monomial>& mons) {
  RatMatrix M(gs.size(), mons.size(), Rational(0));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t k = 0; k < mons.size(); ++k) M(i, k) = gs[i].coefficient(mons[k]);
  return M;
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix M(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) M(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) M(a.rows() + i, j) = b(i, j);
  return M;
}

PolyMatrix to_poly(const RatMatrix& m, int d) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial::constant(d, m(i, j));
  return out;
}

std::string complex_witness(const std::vector<PolyMatrix>& maps, const std::vector<OrderedBasis>* bases) {
  for (std::size_t r = 1; r + 1 < maps.size(); ++r) {
    const std::string w = first_nonzero(maps[r] * maps[r + 1], bases ? &(*bases)[r - 1] : nullptr,
                                        bases ? &(*bases)[r + 1] : nullptr);
    if (!w.empty()) return "b" + std::to_string(r) + "*b" + std::to_string(r + 1) + " at " + w;
  }
  return "";
}

}  // namespace

ExactnessTable certify_exactness(int d, int low, const std::vector<PolyMatrix>& maps, const std::vector<int>& twist,
                                 const std::vector<std::size_t>& h0, int dmax) {
  ExactnessTable out;
  const int L = static_cast<int>(maps.size()) - 1;
  // The upper bound rank b_r <= dim F_r - rank b_{r+1} needs b_r b_{r+1} = 0 over Q.
  if (const std::string w = complex_witness(maps, nullptr); !w.empty()) {
    out.ok = false;
    out.witness = "not a complex: " + w;
    return out;
  }
  std::vector<std::size_t> beta(L + 1);
  beta[0] = maps[1].rows();
  for (int r = 1; r <= L; ++r) beta[r] = maps[r].cols();

  for (int e = 0; e <= dmax; ++e) {
    std::vector<long long> D(L + 1), T(L + 2, 0);
    for (int r = 0; r <= L; ++r) D[r] = static_cast<long long>(beta[r] * count_monomials(d, low, e - twist[r]));
    for (int r = L; r >= 1; --r) T[r] = D[r] - T[r + 1];
    const long long h = e < static_cast<int>(h0.size()) ? static_cast<long long>(h0[e]) : 0;
    std::vector<std::size_t> row(L + 1, 0);
    auto bad = [&](std::string w) {
      out.ok = false;
      out.witness = "degree " + std::to_string(e) + ": " + w;
    };
    for (int r = 1; r <= L && out.ok; ++r)
      if (T[r] < 0) bad("position " + std::to_string(r) + " would need negative rank");
    if (out.ok && D[0] - T[1] != h)
      bad("H0 dimension " + std::to_string(D[0] - T[1]) + " differs from " + std::to_string(h));
    for (int r = L; r >= 1 && out.ok; --r) {
      const auto need = static_cast<std::size_t>(T[r]);
      row[r] = need == 0 ? 0 : certified_rank(d, low, maps[r], twist[r], twist[r - 1], e, need);
      if (row[r] < need)
        bad("rank of b" + std::to_string(r) + " is " + std::to_string(row[r]) + " mod p, exactness needs " +
            std::to_string(need));
    }
    out.rank.push_back(row);
    if (!out.ok) break;
  }
  return out;
}

bool Report::passed() const {
  for (const auto& c : entries)
    if (!c.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : entries) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    if (!c.pass) os << "  witness: " << c.witness << '\n';
  }
  os << (passed() ? "all checks passed" : "some checks failed") << '\n';
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["pass"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : entries)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

CheckResult check_complex(const Resolution& res) {
  for (int r = 1; r < res.d; ++r) {
    const std::string w = first_nonzero(res.b(r) * res.b(r + 1), &res.bases[r - 1], &res.bases[r + 1]);
    if (!w.empty()) return fail("complex", "b" + std::to_string(r) + "*b" + std::to_string(r + 1) + " at " + w);
  }
  return ok("complex", "all " + std::to_string(res.d - 1) + " consecutive products vanish");
}

CheckResult check_betti_and_degrees(const Resolution& res) {
  const std::string name = "betti";
  const int d = res.d, n = res.n;
  // Closed form: beta_i = (2n+d-2)/(n+i-1) C(n+d-2, i-1) C(n+d-i-2, n-1).
  std::vector<std::uint64_t> beta{1};
  for (int i = 1; i <= d - 1; ++i) {
    mpz_class num = mpz_class(2 * n + d - 2) * mpz_class(binomial(n + d - 2, i - 1)) *
                    mpz_class(binomial(n + d - i - 2, n - 1));
    if (num % (n + i - 1) != 0) return fail(name, "closed form not integral at i=" + std::to_string(i));
    beta.push_back(mpz_class(num / (n + i - 1)).get_ui());
  }
  beta.push_back(1);
  std::vector<int> tw{0};
  for (int r = 1; r <= d - 1; ++r) tw.push_back(n + r - 1);
  tw.push_back(2 * n + d - 2);
  if (res.twist != tw) return fail(name, "twist list differs from (0, n, ..., n+d-2, 2n+d-2)");

  for (int r = 0; r <= d; ++r)
    if (res.bases[r].size() != beta[r])
      return fail(name, "B_" + std::to_string(r) + " has " + std::to_string(res.bases[r].size()) +
                            " basis elements, expected " + std::to_string(beta[r]));
  for (int r = 1; r <= d; ++r) {
    const PolyMatrix& M = res.b(r);
    if (M.rows() != beta[r - 1] || M.cols() != beta[r])
      return fail(name, "b" + std::to_string(r) + " has shape " + std::to_string(M.rows()) + "x" +
                            std::to_string(M.cols()));
    const int want = tw[r] - tw[r - 1];
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) {
        const Polynomial& p = M(i, j);
        if (p.is_zero()) continue;
        if (p.has_constant_term() || !p.is_homogeneous() || p.degree() != want)
          return fail(name, "b" + std::to_string(r) + " row " + label(res.bases[r - 1], i) + ", col " +
                                label(res.bases[r], j) + ": entry " + p.str() + " is not homogeneous of degree " +
                                std::to_string(want));
      }
  }
  std::ostringstream os;
  os << "betti (";
  for (int r = 0; r <= d; ++r) os << beta[r] << (r < d ? "," : ")");
  os << " twists (";
  for (int r = 0; r <= d; ++r) os << tw[r] << (r < d ? "," : ")");
  return ok(name, os.str());
}

CheckResult check_euler_hilbert(const Resolution& res) {
  const std::string name = "euler";
  const int d = res.d;
  const int top = res.twist.back();
  std::vector<mpz_class> lhs(top + d + 1, 0), rhs(top + d + 1, 0);
  for (int r = 0; r <= d; ++r) {
    const mpz_class b(static_cast<unsigned long>(res.bases[r].size()));
    lhs[res.twist[r]] += r % 2 == 0 ? b : mpz_class(-b);
  }
  const auto hf = hilbert_function(res.phi);
  // (1-t)^d coefficients times HS_A(t).
  for (int k = 0; k <= d; ++k) {
    const mpz_class c = mpz_class(static_cast<unsigned long>(binomial(d, k))) * (k % 2 == 0 ? 1 : -1);
    for (std::size_t e = 0; e < hf.size(); ++e) rhs[k + e] += c * static_cast<unsigned long>(hf[e]);
  }
  for (std::size_t e = 0; e < lhs.size(); ++e)
    if (lhs[e] != rhs[e])
      return fail(name, "coefficient of t^" + std::to_string(e) + ": betti side " + lhs[e].get_str() +
                            ", Hilbert side " + rhs[e].get_str());
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < lhs.size(); ++e) {
    if (lhs[e] == 0) continue;
    const bool neg = lhs[e] < 0;
    const mpz_class a = abs(lhs[e]);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1 || e == 0) os << a.get_str();
    if (e > 0) os << "t" << (e > 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  return ok(name, "sum (-1)^r beta_r t^twist = (1-t)^d HS_A(t) = " + os.str());
}

CheckResult check_exactness_up_to(const Resolution& res, int dmax) {
  const std::string name = "exactness";
  if (dmax < 0) dmax = 2 * res.n + res.d;
  const auto table = certify_exactness(res.d, 1, res.maps, res.twist, hilbert_function(res.phi), dmax);
  if (!table.ok) return fail(name, table.witness);
  return ok(name, "exact with coker(b1) = A in every degree e <= " + std::to_string(dmax));
}

CheckResult check_ann_match(const Resolution& res) {
  const std::string name = "ann";
  const int d = res.d, n = res.n;
  const auto mons = monomials_of_degree(d, 1, n);
  std::vector<Polynomial> cols;
  for (std::size_t j = 0; j < res.b(1).cols(); ++j) cols.push_back(res.b(1)(0, j));
  const DualElement dphi = res.phi.as_dual();
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!contract(cols[j], dphi).is_zero())
      return fail(name, "column " + label(res.bases[1], j) + " does not annihilate phi");
  const auto oracle = ann_degree(res.phi, n);
  const RatMatrix B = coefficient_rows(cols, mons), O = coefficient_rows(oracle, mons);
  const std::size_t rb = rank(B), ro = rank(O), rboth = rank(stack(B, O));
  if (rb != cols.size()) return fail(name, "columns of b1 span only " + std::to_string(rb) + " dimensions");
  if (ro != rb || rboth != rb)
    return fail(name, "span mismatch: b1 rank " + std::to_string(rb) + ", kernel rank " + std::to_string(ro) +
                          ", joint rank " + std::to_string(rboth));
  return ok(name, "b1 columns span ann(phi)_" + std::to_string(n) + " of dimension " + std::to_string(rb));
}

CheckResult check_skeleton(const Resolution& res) {
  const std::string name = "skeleton";
  const int d = res.d, n = res.n;
  const Rational& delta = res.delta();
  const auto sk = skeleton(res);
  const PolyMatrix& s1 = sk[1];
  // b1 mod x1: X columns vanish, Y(a1; m) maps to delta x_{a1} m.
  for (std::size_t j = 0; j < s1.cols(); ++j) {
    const BasisElement& e = res.bases[1].element(j);
    const Polynomial want =
        e.kind == Kind::X ? Polynomial(d) : Polynomial(e.m.times_var(e.a.front()), delta);
    if (!(s1(0, j) == want)) return fail(name, "b1 mod x1 at col " + e.str() + ": " + s1(0, j).str());
  }
  const PolyMatrix& sd = sk[d];
  for (std::size_t i = 0; i < sd.rows(); ++i) {
    const BasisElement& e = res.bases[d - 1].element(i);
    const Polynomial want = e.kind == Kind::Y ? Polynomial(d) : Polynomial(e.m, delta);
    if (!(sd(i, 0) == want)) return fail(name, "b" + std::to_string(d) + " mod x1 at row " + e.str() + ": " + sd(i, 0).str());
  }
  for (int r = 2; r <= d - 1; ++r) {
    const OrderedBasis& rows = res.bases[r - 1];
    const OrderedBasis& cols = res.bases[r];
    const std::size_t kr = rows.count(Kind::X), kc = cols.count(Kind::X);
    const auto [K, L] = skeleton_kos_blocks(d, n, r);
    const PolyMatrix& s = sk[r];
    const std::string tag = "b" + std::to_string(r) + " mod x1 ";
    if (auto w = first_nonzero(block(s, 0, kr, kc, s.cols()), nullptr, nullptr); !w.empty())
      return fail(name, tag + "Y->X block nonzero at " + w);
    if (auto w = first_nonzero(block(s, kr, s.rows(), 0, kc), nullptr, nullptr); !w.empty())
      return fail(name, tag + "X->Y block nonzero at " + w);
    if (auto w = mismatch(block(s, 0, kr, 0, kc), scaled(K, delta), rows, cols); !w.empty())
      return fail(name, tag + "X block differs from delta*Kos: " + w);
    if (auto w = mismatch(block(s, kr, s.rows(), kc, s.cols()), scaled(L, delta), rows, cols); !w.empty())
      return fail(name, tag + "Y block differs from delta*Kos: " + w);
  }
  std::string detail = "block structure holds";

  if (d == 4 && n == 2) {
    const GoldenSkeleton& g = golden_d4n2();
    const auto gsk = skeleton(in_bases(res, g.bases));
    for (int r = 1; r <= 4; ++r)
      if (auto w = mismatch(gsk[r], scaled(g.maps[r], delta), g.bases[r - 1], g.bases[r]); !w.empty())
        return fail(name, "golden b" + std::to_string(r) + " mismatch at " + w);
    detail += "; matches the d=4, n=2 golden table";
  }

  // L strand over x2..xd, scaled to delta = 1: resolves k[x2..xd]/(x2..xd)^n.
  std::vector<PolyMatrix> strand(d);
  std::vector<int> tw(d);
  for (int r = 0; r < d; ++r) tw[r] = res.twist[r];
  const Rational inv = 1 / delta;
  {
    const std::size_t k1 = res.bases[1].count(Kind::X);
    strand[1] = scaled(block(sk[1], 0, 1, k1, sk[1].cols()), inv);
  }
  for (int r = 2; r <= d - 1; ++r) {
    const std::size_t kr = res.bases[r - 1].count(Kind::X), kc = res.bases[r].count(Kind::X);
    strand[r] = scaled(block(sk[r], kr, sk[r].rows(), kc, sk[r].cols()), inv);
  }
  const int dmax = 2 * n + d;
  std::vector<std::size_t> h0;
  for (int e = 0; e < n; ++e) h0.push_back(count_monomials(d, 2, e));
  const auto table = certify_exactness(d, 2, strand, tw, h0, dmax);
  if (!table.ok) return fail(name, "L strand: " + table.witness);
  detail += "; L strand resolves the truncation up to degree " + std::to_string(dmax);
  return ok(name, detail);
}

CheckResult check_duality(const Resolution& res) {
  const std::string name = "duality";
  const int d = res.d;
  const Resolution sym = in_symmetric_bases(res);

  // pp on the symmetric bases: identity below the middle, graded-symmetric above.
  for (int r = 0; r <= d; ++r) {
    const RatMatrix P = pp_matrix(d, sym.bases[r], sym.bases[d - r]);
    const std::size_t N = P.rows();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Rational want = 0;
        if (2 * r < d) {
          want = i == j ? 1 : 0;
        } else if (2 * r > d) {
          want = (i == j ? 1 : 0) * ((r * (d - r)) % 2 == 0 ? 1 : -1);
        } else {
          const std::size_t half = N / 2;
          if (j == i + half) want = 1;
          if (i == j + half) want = r % 2 == 0 ? 1 : -1;
        }
        if (P(i, j) != want)
          return fail(name, "pp(" + label(sym.bases[r], i) + ", " + label(sym.bases[d - r], j) + ") = " +
                                P(i, j).get_str() + ", expected " + want.get_str());
      }
  }
  if (auto w = mismatch(sym.b(d), sym.b(1).transpose(), sym.bases[d - 1], sym.bases[d]); !w.empty())
    return fail(name, "b_d is not the transpose of b1 in dual bases: " + w);
  std::string detail = "b_d = b1^T in dual bases";

  if (d == 3) {
    const PolyMatrix& M = sym.b(2);
    if (auto w = mismatch(M, scaled(M.transpose(), Rational(-1)), sym.bases[1], sym.bases[2]); !w.empty())
      return fail(name, "b2 is not alternating: " + w);
    detail += "; b2 alternating";
  }
  if (d == 4) {
    const PolyMatrix& M2 = sym.b(2);
    const std::size_t h = sym.bases[2].count(Kind::X);
    const PolyMatrix A = block(M2, 0, M2.rows(), 0, h), B = block(M2, 0, M2.rows(), h, M2.cols());
    PolyMatrix want(M2.cols(), M2.rows());
    for (std::size_t i = 0; i < B.cols(); ++i)
      for (std::size_t j = 0; j < B.rows(); ++j) want(i, j) = -B(j, i);
    for (std::size_t i = 0; i < A.cols(); ++i)
      for (std::size_t j = 0; j < A.rows(); ++j) want(h + i, j) = -A(j, i);
    if (auto w = mismatch(sym.b(3), want, sym.bases[2], sym.bases[3]); !w.empty())
      return fail(name, "b3 differs from -[B^T; A^T]: " + w);
    detail += "; b3 = -[B^T; A^T]";
  }

  // Product rule: b_{r+1}^T P_r + (-1)^{r+1} P_{r+1} b_{d-r} = 0, all pairs.
  for (int r = 0; r <= d - 1; ++r) {
    const PolyMatrix P_r = to_poly(pp_matrix(d, res.bases[r], res.bases[d - r]), d);
    const PolyMatrix P_r1 = to_poly(pp_matrix(d, res.bases[r + 1], res.bases[d - r - 1]), d);
    const PolyMatrix resid =
        res.b(r + 1).transpose() * P_r + scaled(P_r1 * res.b(d - r), Rational(r % 2 == 0 ? -1 : 1));
    if (auto w = first_nonzero(resid, &res.bases[r + 1], &res.bases[d - r]); !w.empty())
      return fail(name, "product rule residual at r=" + std::to_string(r) + ", " + w);
  }
  detail += "; product rule holds on all basis pairs";
  return ok(name, detail);
}

CheckResult check_wlp(const Resolution& res, int var) {
  const std::string name = var == 1 ? "wlp" : "wlp-x" + std::to_string(var);
  const int d = res.d, n = res.n;
  if (var < 1 || var > d) return fail(name, "variable index out of range");
  if (var != 1) {
    // Relabel so that x_var plays the role of x1 and rebuild everything.
    std::optional<Resolution> built;
    try {
      built = build_resolution(res.phi.swapped(1, var));
    } catch (const InadmissibleError& err) {
      return fail(name, std::string("relabeled system rejected: ") + err.what());
    }
    const Resolution& moved = *built;
    if (moved.delta() != res.delta()) return fail(name, "delta changed under relabeling");
    if (auto c = check_complex(moved); !c.pass) return fail(name, "relabeled " + c.witness);
    auto r = check_wlp(moved, 1);
    r.name = name;
    if (r.pass) r.detail = "x" + std::to_string(var) + " promoted: rebuilt complex ok; " + r.detail;
    return r;
  }
  const auto hf = hilbert_function(res.phi);
  const auto src = monomials_of_degree(d, 1, n - 1);
  std::vector<Polynomial> images;
  for (const auto& m : src) images.emplace_back(m.times_var(var), Rational(1));
  // A_n is dual to the image of S_n in D_{n-2}, so rank of x*S_{n-1} there is dim x*A_{n-1}.
  const std::size_t rk = rank(contraction_rows(res.phi, images));
  if (hf[n - 1] != src.size()) return fail(name, "A_{n-1} is smaller than S_{n-1}");
  if (rk != hf[n])
    return fail(name, "x" + std::to_string(var) + "*A_" + std::to_string(n - 1) + " has dimension " +
                          std::to_string(rk) + " < dim A_" + std::to_string(n) + " = " + std::to_string(hf[n]));
  return ok(name, "x1*A_" + std::to_string(n - 1) + " = A_" + std::to_string(n) + " (dimension " +
                      std::to_string(rk) + ")");
}

Report run_checks(const Resolution& res, const std::vector<std::string>& names, int dmax) {
  std::map<std::string, std::function<CheckResult()>> table{
      {"complex", [&] { return check_complex(res); }},
      {"betti", [&] { return check_betti_and_degrees(res); }},
      {"euler", [&] { return check_euler_hilbert(res); }},
      {"exactness", [&] { return check_exactness_up_to(res, dmax); }},
      {"ann", [&] { return check_ann_match(res); }},
      {"skeleton", [&] { return check_skeleton(res); }},
      {"duality", [&] { return check_duality(res); }},
      {"wlp", [&] { return check_wlp(res, 1); }},
  };
  std::vector<std::function<CheckResult()>> jobs;
  for (const auto& nm : names) {
    auto it = table.find(nm);
    if (it == table.end()) throw std::invalid_argument("unknown check: " + nm);
    jobs.push_back(it->second);
    if (nm == "wlp" && res.d >= 2) jobs.push_back([&] { return check_wlp(res, 2); });
  }
  std::vector<std::future<CheckResult>> futs;
  for (auto& job : jobs) futs.push_back(std::async(std::launch::async, job));
  Report rep;
  for (auto& f : futs) rep.entries.push_back(f.get());
  return rep;
}

}  // namespace glres
