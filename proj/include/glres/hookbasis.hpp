#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glres/matrix.hpp"
#include "glres/monomial.hpp"

namespace glres {

enum class Kind { X, Y };

// X^{(r)}_{a,m} = eta(x_a (x) m^*) with m of degree n, or
// Y^{(r)}_{a,m} = kappa(x_a (x) m) with m of degree n-1. Boundary modules:
// B_0 is spanned by Y^{(0)} (empty a, m = 1) and B_d by X^{(d)}
// (a = 2..d, m = 1).
struct BasisElement {
  Kind kind = Kind::X;
  int r = 0;
  std::vector<int> a;
  Monomial m;

  std::string str() const;  // "X(2; 2,3; [0,2,0,0])"
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  // Raw basis order: X before Y, then a-list lex, then monomial order.
  friend bool operator<(const BasisElement& p, const BasisElement& q);
};

BasisElement make_X(const std::vector<int>& a, const Monomial& m);
BasisElement make_Y(const std::vector<int>& a, const Monomial& m);
BasisElement boundary_Y0(int d);
BasisElement boundary_Xd(int d);

// True when e satisfies the standard-basis conditions for (d, n).
bool is_standard(const BasisElement& e, int d, int n);

// Largest g with [2, g] contained in a; 1 when 2 is not in a.
int initial_run(const std::vector<int>& a);

using Combination = std::map<BasisElement, Rational>;

class OrderedBasis {
 public:
  OrderedBasis() = default;
  OrderedBasis(int r, std::vector<std::pair<int, BasisElement>> entries);

  int r() const { return r_; }
  std::size_t size() const { return entries_.size(); }
  const BasisElement& element(std::size_t i) const { return entries_[i].second; }
  int sign(std::size_t i) const { return entries_[i].first; }
  const std::vector<std::pair<int, BasisElement>>& entries() const { return entries_; }
  // Position of e; throws std::out_of_range if absent.
  std::size_t position(const BasisElement& e) const;
  bool contains(const BasisElement& e) const { return pos_.count(e) != 0; }
  std::size_t count(Kind k) const;

 private:
  int r_ = 0;
  std::vector<std::pair<int, BasisElement>> entries_;
  std::map<BasisElement, std::size_t> pos_;
};

OrderedBasis enumerate_basis(int d, int n, int r);

struct Ranks {
  std::uint64_t k, l, beta;
};
Ranks rank_formulas(int d, int n, int r);
std::vector<std::uint64_t> betti_numbers(int d, int n);
std::vector<int> twists(int d, int n);

// Sorts the list in place; returns the permutation sign, or 0 on a repeat.
int sort_wedge(std::vector<int>& a);
// x_i^*(x_a): sign and remaining list; sign 0 when i is not in a.
std::pair<int, std::vector<int>> wedge_contract(int i, const std::vector<int>& a);

// Straightening of eta(x_c (x) m^*) (m of degree n) into X^{(|c|)} elements.
Combination expand_eta(const std::vector<int>& c, const Monomial& m);
// Straightening of kappa(x_c (x) m) (m of degree n-1) into Y^{(|c|)} elements.
Combination expand_kappa(const std::vector<int>& c, const Monomial& m);

// Kos (x) 1 on the X-block and on the Y-block of B_r -> B_{r-1}, raw
// orderings, no delta factor. 2 <= r <= d-1.
std::pair<PolyMatrix, PolyMatrix> skeleton_kos_blocks(int d, int n, int r);

// Coefficient of X^{(d)} in pp(e (x) f), e in B_r and f in B_{d-r}.
int pp_value(int d, const BasisElement& e, const BasisElement& f);

// Signed basis of B_{d-r} dual to enumerate_basis(r): pp(e_i (x) g_j) = [i=j].
OrderedBasis dual_ordered_basis(int d, int n, int r);

// Self-dual ordering generalizing the small-d examples: raw basis below the
// middle, duals of the raw complementary basis above it, and in the middle
// degree the raw X block followed by its duals.
OrderedBasis symmetric_basis(int d, int n, int r);

}  // namespace glres
