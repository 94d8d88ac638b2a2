#ifndef POLYFACE_CONSTRUCTIONS_HPP
#define POLYFACE_CONSTRUCTIONS_HPP

#include "polyface/chi.hpp"
#include "polyface/distribution.hpp"
#include "polyface/matroid.hpp"

namespace polyface {

// Two-level pmf (p, (1-p)/(v-1), ...) on v symbols with entropy target_nats,
// found by bisection on p (tolerance 1e-12 on the entropy, <= 200 iterations).
// The returned masses are exact rationals summing to 1.
std::vector<Rational> two_level_pmf(int v, double target_nats);

// Uniform distribution whose entropy vector is ln(v) * rank(U_{k,n}):
// k = 1 by copying one uniform symbol, k = n by independent coordinates,
// k = n-1 by a modular sum over Z_v, otherwise an MDS generator over GF(v)
// (needs v a prime power with n <= v+1). Throws "no construction available"
// outside the supported set.
JointDistribution uniform_matroid_dist(int k, int n, int v);

// Uniform distribution realizing ln(v) * rank(M) for a matroid whose
// simplification is uniform: loops become constant coordinates and parallel
// elements copies of their class representative.
JointDistribution uniform_matroid_realization(const Matroid& m, int v);

// One variable with entropy b copied over alpha, constant elsewhere; realizes
// b * rank(U_{1,|alpha|}^{alpha,n}).
JointDistribution rank_one_dist(SubsetMask alpha, int n, double b);

// A face point backed by an explicit distribution.
struct Certificate {
  JointDistribution distribution;
  RankVector face_m;   // rank of the matroid ray
  RankVector face_u;   // rank of the rank-1 ray U_{1,|alpha|}^{alpha,n}
  SubsetMask alpha = 0;
  int v = 0;
  double a = 0.0;
  double b = 0.0;       // ln v - a by construction
  double residual = 0.0;
};

// Boundary construction for Matus-type faces: reweights the uniform support of
// ln(v) * rank(M) so the designated coordinate's marginal entropy is a, with
// p(x) = q(x_designated) / v^(rank-1). Claims the point (a, ln v - a) on the
// face (M, U_{1,|alpha|}^{alpha,n}) and verifies the whole entropy vector.
Certificate matus_boundary_dist(const Matroid& m, SubsetMask alpha, int v, double a,
                                const ChiOracle& chi = ChiOracle());

}  // namespace polyface

#endif
