#ifndef POLYFACE_FACET_HPP
#define POLYFACE_FACET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polyface {

// Bit (i-1) set <=> element i in A.
using SubsetMask = std::uint32_t;

// One elemental inequality of the Shannon cone: either
//   F(i):      h(N) >= h(N\i)
//   F(i;j|K):  h(K u i) + h(K u j) >= h(K) + h(K u ij),  i < j, K disjoint.
struct FacetId {
  enum class Kind { MonotoneAtTop, Submodular };

  Kind kind = Kind::MonotoneAtTop;
  int i = 0;
  int j = 0;          // Submodular only, i < j
  SubsetMask K = 0;   // Submodular only

  static FacetId monotone(int i);
  static FacetId submodular(int i, int j, SubsetMask K);

  // Canonical order: all F(i) by i, then F(i;j|K) by (i, j, K).
  friend auto operator<=>(const FacetId& a, const FacetId& b) {
    auto ka = a.kind == Kind::MonotoneAtTop ? 0 : 1;
    auto kb = b.kind == Kind::MonotoneAtTop ? 0 : 1;
    if (auto c = ka <=> kb; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.K <=> b.K;
  }
  friend bool operator==(const FacetId&, const FacetId&) = default;

  // "F(3)" or "F(1;2|3,4)"; K printed as a sorted element list.
  std::string to_string() const;
};

// All facets of Gamma_n in canonical order: n of type F(i), C(n,2)*2^(n-2) submodular.
std::vector<FacetId> enumerate_facets(int n);
std::size_t facet_count(int n);

}  // namespace polyface

#endif
