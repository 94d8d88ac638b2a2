#ifndef POLYFACE_GALOIS_HPP
#define POLYFACE_GALOIS_HPP

#include <vector>

namespace polyface {

// Table-driven arithmetic for GF(p^m), q <= 256. Elements are 0..q-1 encoded
// as base-p digit strings of an irreducible monic polynomial representation.
class GaloisField {
 public:
  explicit GaloisField(int q);  // throws when q is not a prime power

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on 0

  static bool is_prime_power(int q);

 private:
  int q_ = 0;
  std::vector<int> add_, mul_, neg_;
};

// k x n generator matrix over GF(q) in which every k columns are linearly
// independent (Vandermonde columns, plus the unit column when n == q+1).
// Requires 1 <= k <= n <= q+1; verified before returning.
std::vector<std::vector<int>> mds_generator(int k, int n, int q);

// Exhaustive check that every k-subset of columns is nonsingular.
bool mds_check(const GaloisField& gf, const std::vector<std::vector<int>>& generator);

}  // namespace polyface

#endif
