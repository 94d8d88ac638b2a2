#include "polyface/galois.hpp"

#include <stdexcept>

namespace polyface {

namespace {

int smallest_prime_factor(int q) {
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

// Polynomials over Z_p as little-endian coefficient vectors.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
  while (a.size() >= m.size()) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] - lead * m[i]) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

bool divides(const Poly& divisor, Poly value, int p) {
  value = poly_mod(std::move(value), divisor, p);
  for (int c : value)
    if (c != 0) return false;
  return true;
}

// All monic polynomials of degree d, coefficients mod p, enumerated by value.
std::vector<Poly> monic_polys(int d, int p) {
  std::vector<Poly> out;
  int count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly f(d + 1, 0);
    int rest = code;
    for (int i = 0; i < d; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[d] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

Poly find_irreducible(int p, int m) {
  for (Poly f : monic_polys(m, p)) {
    bool irreducible = true;
    for (int d = 1; irreducible && 2 * d <= m; ++d)
      for (const Poly& g : monic_polys(d, p))
        if (divides(g, f, p)) {
          irreducible = false;
          break;
        }
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

int encode(const Poly& f, int p) {
  int value = 0;
  for (std::size_t i = f.size(); i-- > 0;) value = value * p + f[i];
  return value;
}

Poly decode(int value, int p, int m) {
  Poly f(m, 0);
  for (int i = 0; i < m; ++i) {
    f[i] = value % p;
    value /= p;
  }
  return f;
}

}  // namespace

bool GaloisField::is_prime_power(int q) {
  if (q < 2) return false;
  int p = smallest_prime_factor(q);
  while (q % p == 0) q /= p;
  return q == 1;
}

GaloisField::GaloisField(int q) : q_(q) {
  if (!is_prime_power(q) || q > 256) throw std::invalid_argument("field order must be a prime power <= 256");
  int p = smallest_prime_factor(q);
  int m = 0;
  for (int t = q; t > 1; t /= p) ++m;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  if (m == 1) {
    for (int a = 0; a < q; ++a) {
      neg_[a] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
    return;
  }
  Poly irr = find_irreducible(p, m);
  for (int a = 0; a < q; ++a) {
    Poly fa = decode(a, p, m);
    Poly na(m, 0);
    for (int i = 0; i < m; ++i) na[i] = (p - fa[i]) % p;
    neg_[a] = encode(na, p);
    for (int b = 0; b < q; ++b) {
      Poly fb = decode(b, p, m);
      Poly sum(m, 0);
      for (int i = 0; i < m; ++i) sum[i] = (fa[i] + fb[i]) % p;
      add_[a * q + b] = encode(sum, p);
      Poly prod = poly_mod(poly_mul(fa, fb, p), irr, p);
      prod.resize(m, 0);
      mul_[a * q + b] = encode(prod, p);
    }
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("field table is inconsistent");
}

std::vector<std::vector<int>> mds_generator(int k, int n, int q) {
  GaloisField gf(q);
  if (k < 1 || k > n || n > q + 1) throw std::invalid_argument("MDS generator needs 1 <= k <= n <= q+1");
  std::vector<std::vector<int>> g(k, std::vector<int>(n, 0));
  int vandermonde_cols = n <= q ? n : q;
  for (int col = 0; col < vandermonde_cols; ++col) {
    int power = 1;
    for (int row = 0; row < k; ++row) {
      g[row][col] = power;
      power = gf.mul(power, col);
    }
  }
  if (n == q + 1) g[k - 1][n - 1] = 1;  // column at infinity
  if (!mds_check(gf, g)) throw std::logic_error("generator failed the MDS check");
  return g;
}

bool mds_check(const GaloisField& gf, const std::vector<std::vector<int>>& generator) {
  int k = static_cast<int>(generator.size());
  int n = static_cast<int>(generator[0].size());
  std::vector<int> pick(k);
  // iterate k-subsets of columns
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<int>> m(k, std::vector<int>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r][c] = generator[r][pick[c]];
    // Gaussian elimination over GF(q)
    int rank = 0;
    for (int col = 0; col < k && rank < k; ++col) {
      int pivot = rank;
      while (pivot < k && m[pivot][col] == 0) ++pivot;
      if (pivot == k) continue;
      std::swap(m[rank], m[pivot]);
      int scale = gf.inv(m[rank][col]);
      for (int c = 0; c < k; ++c) m[rank][c] = gf.mul(m[rank][c], scale);
      for (int r = 0; r < k; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        int factor = m[r][col];
        for (int c = 0; c < k; ++c) m[r][c] = gf.sub(m[r][c], gf.mul(factor, m[rank][c]));
      }
      ++rank;
    }
    if (rank < k) return false;
    int idx = k - 1;
    while (idx >= 0 && pick[idx] == n - k + idx) --idx;
    if (idx < 0) break;
    ++pick[idx];
    for (int i = idx + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return true;
}

}  // namespace polyface
