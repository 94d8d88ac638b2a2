#ifndef POLYFACE_CONE_HPP
#define POLYFACE_CONE_HPP

#include <vector>

#include "polyface/setfn.hpp"

namespace polyface {

// Slack of one elemental inequality at h; nonnegative for polymatroids.
Rational slack(const RankVector& h, const FacetId& f);
double slack(const EntropyVector& h, const FacetId& f);

// Facets tight at h, in canonical order. Throws std::domain_error when any
// slack is negative ("not a polymatroid").
struct TightSet {
  std::vector<FacetId> facets;
};
TightSet tight_set(const RankVector& h);

// Dimension of the minimal face of Gamma_n containing h: the nullity of the
// tight-equality system over the 2^n - 1 nonempty-subset coordinates, computed
// by exact fraction-free elimination.
int minimal_face_dim(const RankVector& h);

// minimal_face_dim(h) == 1. Throws on the zero vector.
bool is_extreme_ray(const RankVector& h);

// minimal_face_dim(h1 + h2) == 2 for two non-proportional extreme rays.
// Precondition failures throw with distinct messages.
bool is_two_face(const RankVector& h1, const RankVector& h2);

// Every extreme ray is modular or tight; property-test hook.
bool modular_or_tight_check(const RankVector& h);

}  // namespace polyface

#endif
