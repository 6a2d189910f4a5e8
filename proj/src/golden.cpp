#include <sstream>
#include <string>

#include "glres/verify.hpp"

namespace glres {

namespace {

constexpr int kD = 4;

// Rows separated by ';', entries by ','.
PolyMatrix parse_rows(const std::string& text, std::size_t rows, std::size_t cols) {
  PolyMatrix M(rows, cols);
  std::stringstream all(text);
  std::string row;
  std::size_t i = 0;
  while (std::getline(all, row, ';')) {
    std::stringstream rs(row);
    std::string cell;
    std::size_t j = 0;
    while (std::getline(rs, cell, ',')) M(i, j++) = Polynomial::parse(cell, kD);
    if (j != cols) throw std::logic_error("golden table row has the wrong length");
    ++i;
  }
  if (i != rows) throw std::logic_error("golden table has the wrong number of rows");
  return M;
}

Monomial mono(std::initializer_list<int> tail) {
  std::vector<int> e{0};
  e.insert(e.end(), tail);
  return Monomial(e);
}

GoldenSkeleton make() {
  GoldenSkeleton g;
  const Monomial x2 = mono({1, 0, 0}), x3 = mono({0, 1, 0}), x4 = mono({0, 0, 1});
  const Monomial x22 = mono({2, 0, 0}), x23 = mono({1, 1, 0}), x24 = mono({1, 0, 1});
  const Monomial x33 = mono({0, 2, 0}), x34 = mono({0, 1, 1}), x44 = mono({0, 0, 2});

  g.bases.emplace_back(0, std::vector<std::pair<int, BasisElement>>{{1, boundary_Y0(kD)}});
  g.bases.emplace_back(1, std::vector<std::pair<int, BasisElement>>{
                              {1, make_X({2}, x22)},
                              {1, make_X({2}, x23)},
                              {1, make_X({2}, x24)},
                              {1, make_Y({2}, x2)},
                              {1, make_Y({2}, x3)},
                              {1, make_Y({2}, x4)},
                              {1, make_Y({3}, x3)},
                              {1, make_Y({3}, x4)},
                              {1, make_Y({4}, x4)},
                          });
  g.bases.emplace_back(2, std::vector<std::pair<int, BasisElement>>{
                              {1, make_X({2, 3}, x22)},
                              {1, make_X({2, 3}, x23)},
                              {1, make_X({2, 3}, x24)},
                              {1, make_X({2, 3}, x33)},
                              {1, make_X({2, 3}, x34)},
                              {1, make_X({2, 4}, x22)},
                              {1, make_X({2, 4}, x23)},
                              {1, make_X({2, 4}, x24)},
                              {1, make_Y({2, 4}, x2)},
                              {1, make_Y({2, 4}, x3)},
                              {1, make_Y({2, 4}, x4)},
                              {1, make_Y({3, 4}, x3)},
                              {1, make_Y({3, 4}, x4)},
                              {-1, make_Y({2, 3}, x2)},
                              {-1, make_Y({2, 3}, x3)},
                              {-1, make_Y({2, 3}, x4)},
                          });
  g.bases.emplace_back(3, std::vector<std::pair<int, BasisElement>>{
                              {-1, make_Y({2, 3, 4}, x2)},
                              {-1, make_Y({2, 3, 4}, x3)},
                              {-1, make_Y({2, 3, 4}, x4)},
                              {1, make_X({2, 3, 4}, x22)},
                              {1, make_X({2, 3, 4}, x23)},
                              {1, make_X({2, 3, 4}, x24)},
                              {1, make_X({2, 3, 4}, x33)},
                              {1, make_X({2, 3, 4}, x34)},
                              {1, make_X({2, 3, 4}, x44)},
                          });
  g.bases.emplace_back(4, std::vector<std::pair<int, BasisElement>>{{1, boundary_Xd(kD)}});

  g.maps.resize(5);
  g.maps[1] = parse_rows("0,0,0,x2^2,x2*x3,x2*x4,x3^2,x3*x4,x4^2", 1, 9);
  g.maps[2] = parse_rows(
      "x3,-x2,0,0,0,x4,0,-x2,0,0,0,0,0,0,0,0;"
      "0,x3,0,-x2,0,0,x4,0,0,0,0,0,0,0,0,0;"
      "0,0,x3,0,-x2,0,0,x4,0,0,0,0,0,0,0,0;"
      "0,0,0,0,0,0,0,0,x4,0,0,0,0,-x3,0,0;"
      "0,0,0,0,0,0,0,0,0,x4,0,0,0,x2,-x3,0;"
      "0,0,0,0,0,0,0,0,-x2,0,x4,0,0,0,0,-x3;"
      "0,0,0,0,0,0,0,0,0,0,0,x4,0,0,x2,0;"
      "0,0,0,0,0,0,0,0,0,-x2,0,-x3,x4,0,0,x2;"
      "0,0,0,0,0,0,0,0,0,0,-x2,0,-x3,0,0,0",
      9, 16);
  g.maps[3] = parse_rows(
      "0,0,0,-x4,0,x2,0,0,0;"
      "0,0,0,0,-x4,0,0,x2,0;"
      "0,0,0,0,0,-x4,0,0,x2;"
      "0,0,0,0,0,0,-x4,x3,0;"
      "0,0,0,0,0,0,0,-x4,x3;"
      "0,0,0,x3,-x2,0,0,0,0;"
      "0,0,0,0,x3,0,-x2,0,0;"
      "0,0,0,0,0,x3,0,-x2,0;"
      "-x3,0,0,0,0,0,0,0,0;"
      "x2,-x3,0,0,0,0,0,0,0;"
      "0,0,-x3,0,0,0,0,0,0;"
      "0,x2,0,0,0,0,0,0,0;"
      "0,0,x2,0,0,0,0,0,0;"
      "-x4,0,0,0,0,0,0,0,0;"
      "0,-x4,0,0,0,0,0,0,0;"
      "x2,0,-x4,0,0,0,0,0,0",
      16, 9);
  g.maps[4] = g.maps[1].transpose();
  return g;
}

}  // namespace

const GoldenSkeleton& golden_d4n2() {
  static const GoldenSkeleton g = make();
  return g;
}

}  // namespace glres
