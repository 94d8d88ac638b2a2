#include "polyface/facet.hpp"

#include <stdexcept>

namespace polyface {

FacetId FacetId::monotone(int i) {
  if (i < 1) throw std::invalid_argument("facet element must be >= 1");
  FacetId f;
  f.kind = Kind::MonotoneAtTop;
  f.i = i;
  return f;
}

FacetId FacetId::submodular(int i, int j, SubsetMask K) {
  if (i < 1 || j <= i) throw std::invalid_argument("submodular facet needs 1 <= i < j");
  if (K & ((1u << (i - 1)) | (1u << (j - 1))))
    throw std::invalid_argument("K must be disjoint from {i,j}");
  FacetId f;
  f.kind = Kind::Submodular;
  f.i = i;
  f.j = j;
  f.K = K;
  return f;
}

std::string FacetId::to_string() const {
  if (kind == Kind::MonotoneAtTop) return "F(" + std::to_string(i) + ")";
  std::string out = "F(" + std::to_string(i) + ";" + std::to_string(j) + "|";
  bool first = true;
  for (int e = 1; e <= 32; ++e) {
    if ((K >> (e - 1)) & 1u) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
  }
  out += ")";
  return out;
}

std::vector<FacetId> enumerate_facets(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("ground set size must be in 1..16");
  std::vector<FacetId> out;
  out.reserve(facet_count(n));
  for (int i = 1; i <= n; ++i) out.push_back(FacetId::monotone(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SubsetMask ij = (1u << (i - 1)) | (1u << (j - 1));
      SubsetMask rest = static_cast<SubsetMask>((1u << n) - 1u) & ~ij;
      // iterate all K subsets of rest in increasing mask order
      SubsetMask K = 0;
      while (true) {
        out.push_back(FacetId::submodular(i, j, K));
        if (K == rest) break;
        K = (K - rest) & rest;  // next subset of rest
      }
    }
  }
  return out;
}

std::size_t facet_count(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("ground set size must be in 1..16");
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t per_pair = n >= 2 ? (std::size_t{1} << (n - 2)) : 0;
  return static_cast<std::size_t>(n) + pairs * per_pair;
}

}  // namespace polyface
