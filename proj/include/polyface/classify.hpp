#ifndef POLYFACE_CLASSIFY_HPP
#define POLYFACE_CLASSIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "polyface/chi.hpp"
#include "polyface/matroid.hpp"

namespace polyface {

enum class FaceType { AllEntropic, Matus, ChenYeung, NonEntropic, Uncovered };
enum class Membership { Entropic, NonEntropic, Unknown };

std::string to_string(FaceType t);
std::string to_string(Membership m);

// Type of the restricted pair on one circuit of size m with t = |C n alpha|:
//   m = 2                -> AllEntropic (rank-1 restriction)
//   m >= 3, t = m        -> AllEntropic
//   m = 3, t = 2         -> Matus
//   anything else        -> ChenYeung (t = 0 gives the pure-ray constraint)
FaceType restricted_pair_type(int m, int t);

struct CircuitAnalysis {
  SubsetMask circuit = 0;
  int m = 0;  // circuit size
  int t = 0;  // overlap with alpha
  FaceType restricted_type = FaceType::Uncovered;
};

struct FaceReport {
  FaceType face_type = FaceType::Uncovered;
  bool two_face_confirmed = false;
  int sum_face_dim = 0;  // minimal-face dimension of rank(M) + rank(U)
  std::vector<CircuitAnalysis> circuit_analysis;  // circuits of size >= 2 only
  bool m_loops_subset_of_u_loops = false;
  bool u_loops_subset_of_m_loops = false;
  ChiOracle::Probe chi;
  std::vector<std::string> notes;
};

// Decision procedure for the face (M, U_{1,|alpha|}^{alpha,n}). M must be
// connected after loop deletion (i.e. span an extreme ray); the two-face
// verdict is recorded rather than enforced.
FaceReport classify_face(const Matroid& m, SubsetMask alpha, const ChiOracle& chi = ChiOracle());

// Tri-state membership of the embedded point (a, b), coordinates in nats.
// chi answers membership of v in the matroid ray's characteristic set.
Membership region_membership(FaceType type, const std::function<Tri(int)>& chi, double a,
                             double b);

struct RegionPiece {
  enum class Kind { Strip, Ray, Staircase, Gap };
  std::string label;
  Kind kind = Kind::Strip;
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};
std::string to_string(RegionPiece::Kind k);

// Plot data over 0 < a <= a_max: the Matus staircase a+b = ln(ceil(e^a)) with
// per-v entropic strips, Chen-Yeung vertical rays at a = ln v, and explicit
// gap pieces where chi leaves v unresolved.
std::vector<RegionPiece> region_boundary_data(FaceType type, const std::function<Tri(int)>& chi,
                                              double a_max);

}  // namespace polyface

#endif
