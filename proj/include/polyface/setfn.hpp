#ifndef POLYFACE_SETFN_HPP
#define POLYFACE_SETFN_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyface/facet.hpp"
#include "polyface/rational.hpp"

namespace polyface {

inline constexpr int kMaxGroundSet = 16;

inline SubsetMask full_mask(int n) { return static_cast<SubsetMask>((1u << n) - 1u); }
inline bool mask_contains(SubsetMask a, int element) { return (a >> (element - 1)) & 1u; }
inline int mask_size(SubsetMask a) { return std::popcount(a); }

// Elements of A in ascending order, 1-based.
std::vector<int> mask_elements(SubsetMask a);
// Inverse of mask_elements; validates 1 <= e <= n and rejects duplicates.
SubsetMask mask_of(const std::vector<int>& elements, int n);

// A set function 2^{N_n} -> Q stored densely by bitmask. values[0] must be 0.
struct RankVector {
  int n = 0;
  std::vector<Rational> values;

  RankVector() = default;
  RankVector(int n_, std::vector<Rational> values_);
  static RankVector zero(int n);

  const Rational& at(SubsetMask a) const;  // throws on a >= 2^n
  bool is_zero() const;
  bool operator==(const RankVector&) const = default;
};

// Real-valued twin of RankVector; entries are entropies in nats.
struct EntropyVector {
  int n = 0;
  std::vector<double> values;

  EntropyVector() = default;
  EntropyVector(int n_, std::vector<double> values_);
  double at(SubsetMask a) const;
};

struct PolymatroidCheck {
  bool ok = false;
  std::optional<FacetId> violated;  // first violated facet in canonical order
  std::string message;              // set when the failure is not facet-shaped
};

// Checks h(0)=0 plus every elemental inequality; reports the first violation.
PolymatroidCheck is_polymatroid(const RankVector& h);
// Tolerant variant for entropy vectors.
bool is_polymatroid_within(const EntropyVector& h, double tol = kTol);

// True iff every entry is an integer and the entries' gcd is 1.
bool is_integer_minimal(const RankVector& h);
// h(A) = sum of singletons for all A.
bool is_modular(const RankVector& h);
// h(N) = h(N \ i) for all i.
bool is_tight(const RankVector& h);

RankVector add(const RankVector& h1, const RankVector& h2);
RankVector scaled(const Rational& c, const RankVector& h);
// True iff h2 = c*h1 for some c > 0 (both nonzero).
bool proportional(const RankVector& h1, const RankVector& h2);

// Pointwise a*h1 + b*h2 in nats.
EntropyVector combine(double a, const RankVector& h1, double b, const RankVector& h2);
EntropyVector to_entropy(const RankVector& h, double scale = 1.0);

// Restriction onto S with elements relabeled 1..|S| in increasing order.
RankVector restrict_to(const RankVector& h, SubsetMask s);
EntropyVector restrict_to(const EntropyVector& h, SubsetMask s);

// perm[i-1] is the image of element i; h'(perm(A)) = h(A).
RankVector relabel(const RankVector& h, const std::vector<int>& perm);

}  // namespace polyface

#endif
