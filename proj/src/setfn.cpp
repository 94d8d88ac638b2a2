#include "polyface/setfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polyface/cone.hpp"

namespace polyface {

std::vector<int> mask_elements(SubsetMask a) {
  std::vector<int> out;
  for (int e = 1; e <= 32; ++e)
    if ((a >> (e - 1)) & 1u) out.push_back(e);
  return out;
}

SubsetMask mask_of(const std::vector<int>& elements, int n) {
  SubsetMask a = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("element outside ground set");
    SubsetMask bit = 1u << (e - 1);
    if (a & bit) throw std::invalid_argument("duplicate element in subset");
    a |= bit;
  }
  return a;
}

static void check_size(int n, std::size_t count) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size must be in 1..16");
  if (count != (std::size_t{1} << n)) throw std::invalid_argument("value array must have 2^n entries");
}

RankVector::RankVector(int n_, std::vector<Rational> values_) : n(n_), values(std::move(values_)) {
  check_size(n, values.size());
  if (values[0] != 0) throw std::invalid_argument("value at the empty set must be 0");
}

RankVector RankVector::zero(int n) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size must be in 1..16");
  return RankVector(n, std::vector<Rational>(std::size_t{1} << n, Rational(0)));
}

const Rational& RankVector::at(SubsetMask a) const {
  if (a >= values.size()) throw std::out_of_range("subset outside ground set");
  return values[a];
}

bool RankVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

EntropyVector::EntropyVector(int n_, std::vector<double> values_) : n(n_), values(std::move(values_)) {
  check_size(n, values.size());
}

double EntropyVector::at(SubsetMask a) const {
  if (a >= values.size()) throw std::out_of_range("subset outside ground set");
  return values[a];
}

PolymatroidCheck is_polymatroid(const RankVector& h) {
  PolymatroidCheck out;
  if (h.values[0] != 0) {
    out.ok = false;
    out.message = "value at the empty set must be 0";
    return out;
  }
  for (const FacetId& f : enumerate_facets(h.n)) {
    if (slack(h, f) < 0) {
      out.ok = false;
      out.violated = f;
      out.message = "violates " + f.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

bool is_polymatroid_within(const EntropyVector& h, double tol) {
  if (std::abs(h.values[0]) > tol) return false;
  for (const FacetId& f : enumerate_facets(h.n))
    if (slack(h, f) < -tol) return false;
  return true;
}

bool is_integer_minimal(const RankVector& h) {
  BigInt g = 0;
  for (const Rational& v : h.values) {
    if (denominator(v) != 1) return false;
    g = boost::multiprecision::gcd(g, numerator(v));
  }
  return g == 1 || g == -1;
}

bool is_modular(const RankVector& h) {
  SubsetMask full = full_mask(h.n);
  for (SubsetMask a = 1; a <= full; ++a) {
    Rational sum = 0;
    for (int e : mask_elements(a)) sum += h.values[1u << (e - 1)];
    if (h.values[a] != sum) return false;
  }
  return true;
}

bool is_tight(const RankVector& h) {
  SubsetMask full = full_mask(h.n);
  for (int i = 1; i <= h.n; ++i)
    if (h.values[full] != h.values[full & ~(1u << (i - 1))]) return false;
  return true;
}

static void check_same_ground(int n1, int n2) {
  if (n1 != n2) throw std::invalid_argument("mismatched ground set sizes");
}

RankVector add(const RankVector& h1, const RankVector& h2) {
  check_same_ground(h1.n, h2.n);
  std::vector<Rational> vals(h1.values.size());
  for (std::size_t a = 0; a < vals.size(); ++a) vals[a] = h1.values[a] + h2.values[a];
  return RankVector(h1.n, std::move(vals));
}

RankVector scaled(const Rational& c, const RankVector& h) {
  std::vector<Rational> vals(h.values.size());
  for (std::size_t a = 0; a < vals.size(); ++a) vals[a] = c * h.values[a];
  return RankVector(h.n, std::move(vals));
}

bool proportional(const RankVector& h1, const RankVector& h2) {
  check_same_ground(h1.n, h2.n);
  if (h1.is_zero() || h2.is_zero()) return false;
  std::size_t pivot = 0;
  while (pivot < h1.values.size() && h1.values[pivot] == 0) ++pivot;
  if (h2.values[pivot] == 0) return false;
  Rational c = h2.values[pivot] / h1.values[pivot];
  if (c <= 0) return false;
  for (std::size_t a = 0; a < h1.values.size(); ++a)
    if (h2.values[a] != c * h1.values[a]) return false;
  return true;
}

EntropyVector combine(double a, const RankVector& h1, double b, const RankVector& h2) {
  check_same_ground(h1.n, h2.n);
  if (a < 0 || b < 0) throw std::invalid_argument("coefficients must be nonnegative");
  std::vector<double> vals(h1.values.size());
  for (std::size_t m = 0; m < vals.size(); ++m)
    vals[m] = a * static_cast<double>(h1.values[m]) + b * static_cast<double>(h2.values[m]);
  return EntropyVector(h1.n, std::move(vals));
}

EntropyVector to_entropy(const RankVector& h, double scale) {
  std::vector<double> vals(h.values.size());
  for (std::size_t m = 0; m < vals.size(); ++m) vals[m] = scale * static_cast<double>(h.values[m]);
  return EntropyVector(h.n, std::move(vals));
}

// Expands a mask over the relabeled ground set 1..|S| back to the original.
static SubsetMask expand_mask(SubsetMask packed, const std::vector<int>& elements) {
  SubsetMask out = 0;
  for (std::size_t idx = 0; idx < elements.size(); ++idx)
    if ((packed >> idx) & 1u) out |= 1u << (elements[idx] - 1);
  return out;
}

RankVector restrict_to(const RankVector& h, SubsetMask s) {
  if (s == 0 || s > full_mask(h.n)) throw std::invalid_argument("restriction set must be a nonempty subset");
  auto elements = mask_elements(s);
  int m = static_cast<int>(elements.size());
  std::vector<Rational> vals(std::size_t{1} << m);
  for (SubsetMask a = 0; a < vals.size(); ++a) vals[a] = h.values[expand_mask(a, elements)];
  return RankVector(m, std::move(vals));
}

EntropyVector restrict_to(const EntropyVector& h, SubsetMask s) {
  if (s == 0 || s > full_mask(h.n)) throw std::invalid_argument("restriction set must be a nonempty subset");
  auto elements = mask_elements(s);
  int m = static_cast<int>(elements.size());
  std::vector<double> vals(std::size_t{1} << m);
  for (SubsetMask a = 0; a < vals.size(); ++a) vals[a] = h.values[expand_mask(a, elements)];
  return EntropyVector(m, std::move(vals));
}

RankVector relabel(const RankVector& h, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != h.n) throw std::invalid_argument("permutation size mismatch");
  SubsetMask seen = 0;
  for (int image : perm) {
    if (image < 1 || image > h.n) throw std::invalid_argument("permutation image outside ground set");
    seen |= 1u << (image - 1);
  }
  if (seen != full_mask(h.n)) throw std::invalid_argument("not a permutation");
  std::vector<Rational> vals(h.values.size());
  for (SubsetMask a = 0; a < vals.size(); ++a) {
    SubsetMask image = 0;
    for (int e = 1; e <= h.n; ++e)
      if ((a >> (e - 1)) & 1u) image |= 1u << (perm[e - 1] - 1);
    vals[image] = h.values[a];
  }
  return RankVector(h.n, std::move(vals));
}

}  // namespace polyface
