#include "glres/modrank.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace glres {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t residue(const Rational& q, std::uint32_t p) {
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw std::domain_error("denominator divisible by the prime");
  return static_cast<std::uint32_t>(num * mod_inverse(static_cast<std::uint32_t>(den), p) % p);
}

ModularEchelon::ModularEchelon(std::size_t dim, std::uint32_t prime)
    : p_(prime), pivot_of_(dim, -1), acc_(dim, 0) {}

bool ModularEchelon::insert(const std::vector<Entry>& entries) {
  const auto greater = std::greater<std::uint32_t>();
  heap_.clear();
  for (const auto& [i, v] : entries) {
    if (v == 0) continue;
    if (acc_[i] == 0) heap_.push_back(i);
    acc_[i] = (acc_[i] + v) % p_;
  }
  std::make_heap(heap_.begin(), heap_.end(), greater);
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), greater);
    const std::uint32_t i = heap_.back();
    heap_.pop_back();
    if (acc_[i] == 0) continue;
    const std::int32_t pr = pivot_of_[i];
    if (pr < 0) {
      // New pivot. Gather the remainder; duplicates in the heap are skipped
      // because each acc_ slot is cleared once read.
      Row row;
      const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(acc_[i]), p_);
      row.idx.push_back(i);
      row.val.push_back(1);
      acc_[i] = 0;
      std::sort(heap_.begin(), heap_.end());
      for (std::uint32_t j : heap_) {
        if (acc_[j] == 0) continue;
        row.idx.push_back(j);
        row.val.push_back(static_cast<std::uint32_t>(acc_[j] * inv % p_));
        acc_[j] = 0;
      }
      heap_.clear();
      pivot_of_[i] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const Row& row = rows_[pr];
    const std::uint64_t c = p_ - acc_[i];
    acc_[i] = 0;
    for (std::size_t k = 1; k < row.idx.size(); ++k) {
      const std::uint32_t j = row.idx[k];
      if (acc_[j] == 0) {
        heap_.push_back(j);
        std::push_heap(heap_.begin(), heap_.end(), greater);
      }
      acc_[j] = (acc_[j] + c * row.val[k]) % p_;
    }
  }
  return false;
}

}  // namespace glres
