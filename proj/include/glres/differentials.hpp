#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "glres/hookbasis.hpp"
#include "glres/invsys.hpp"
#include "glres/matrix.hpp"

namespace glres {

// Raised when delta = det T vanishes.
struct InadmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Image of one basis element, keyed by target basis element.
using Column = std::map<BasisElement, Polynomial>;

struct Resolution {
  int d = 0;
  int n = 0;
  InverseSystem phi;
  Catalecticant cat;
  std::vector<OrderedBasis> bases;  // B_0 .. B_d
  std::vector<PolyMatrix> maps;     // maps[r] = [b_r] for r = 1..d; maps[0] unused
  std::vector<int> twist;

  const Rational& delta() const { return cat.delta; }
  const PolyMatrix& b(int r) const { return maps.at(r); }
};

// Shared lookups for the column formulas.
class Ingredients {
 public:
  explicit Ingredients(const InverseSystem& phi);
  Ingredients(const InverseSystem& phi, const Catalecticant& cat);

  int d() const { return d_; }
  int n() const { return n_; }
  const InverseSystem& phi() const { return phi_; }
  const Catalecticant& cat() const { return cat_; }
  const Rational& delta() const { return cat_.delta; }
  const Rational& t(const Monomial& m) const { return phi_.t(m); }
  const Rational& Q(const Monomial& a, const Monomial& b) const { return cat_.q(a, b); }
  // Monomials of degree s in x_low..x_d (cached).
  const std::vector<Monomial>& mons(int low, int s) const;
  Monomial x(int i) const { return Monomial::variable(d_, i); }

 private:
  InverseSystem phi_;
  Catalecticant cat_;
  int d_, n_;
  mutable std::map<std::pair<int, int>, std::vector<Monomial>> cache_;
};

PolyMatrix b1_matrix(const Ingredients& in);
Column br_column_X(const Ingredients& in, const BasisElement& e);
Column br_column_Y(const Ingredients& in, const BasisElement& e);
PolyMatrix bd_matrix(const Ingredients& in);

Resolution build_resolution(const InverseSystem& phi);
Resolution build_resolution_elementary(const InverseSystem& phi);

// Columns of the elementary-generator route for interior r.
Column br_column_elementary(const Ingredients& in, const BasisElement& e);

PolyMatrix assemble(const std::vector<Column>& cols, const OrderedBasis& rows);

// Matrix of pp_r on rows(B_r) x cols(B_{d-r}); entries in {-1, 0, 1}.
RatMatrix pp_matrix(int d, const OrderedBasis& rows, const OrderedBasis& cols);

// Every matrix reduced mod x1, same bases as res.
std::vector<PolyMatrix> skeleton(const Resolution& res);

// Re-expresses [b_r] (given in the raw bases) in signed, reordered bases.
PolyMatrix rebase(const PolyMatrix& m, const OrderedBasis& raw_rows, const OrderedBasis& raw_cols,
                  const OrderedBasis& rows, const OrderedBasis& cols);
// res with every matrix re-expressed in the given bases (one per degree).
Resolution in_bases(const Resolution& res, const std::vector<OrderedBasis>& bases);
// The self-dual ordering of symmetric_basis in every degree.
Resolution in_symmetric_bases(const Resolution& res);

}  // namespace glres
