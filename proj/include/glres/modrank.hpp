#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "glres/rational.hpp"

namespace glres {

// Incremental sparse row echelon form over Z/p. Used only to certify lower
// bounds on ranks of rational matrices with p-integral entries: a family of
// vectors independent mod p is independent over Q.
class ModularEchelon {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (index, value mod p)

  ModularEchelon(std::size_t dim, std::uint32_t prime);

  // Returns true when the vector is independent of those inserted so far.
  bool insert(const std::vector<Entry>& entries);
  std::size_t rank() const { return rows_.size(); }
  std::uint32_t prime() const { return p_; }

 private:
  struct Row {
    std::vector<std::uint32_t> idx;
    std::vector<std::uint32_t> val;  // val[0] == 1 at idx[0]
  };

  std::uint32_t p_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<Row> rows_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::uint32_t> heap_;
};

// Residue of q mod p; throws std::domain_error if p divides the denominator.
std::uint32_t residue(const Rational& q, std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

inline constexpr std::uint32_t kDefaultPrime = 2147483629u;  // largest prime < 2^31
inline constexpr std::uint32_t kBackupPrime = 2147483587u;

}  // namespace glres
