#ifndef POLYFACE_DISTRIBUTION_HPP
#define POLYFACE_DISTRIBUTION_HPP

#include <map>
#include <vector>

#include "polyface/setfn.hpp"

namespace polyface {

using Outcome = std::vector<int>;  // one 0-based symbol per coordinate

// Finite joint distribution with exact rational masses. Masses must be
// positive and sum to exactly 1; alphabet symbols may be unused.
class JointDistribution {
 public:
  JointDistribution(std::vector<int> alphabets, std::map<Outcome, Rational> pmf);

  int coords() const { return static_cast<int>(alphabets_.size()); }
  const std::vector<int>& alphabets() const { return alphabets_; }
  const std::map<Outcome, Rational>& pmf() const { return pmf_; }

 private:
  std::vector<int> alphabets_;
  std::map<Outcome, Rational> pmf_;
};

// h(A) = -sum p(x_A) ln p(x_A) over marginal masses, in nats; h(empty) = 0.
EntropyVector entropy_vector(const JointDistribution& d);

// Coordinates restricted to S (kept in order, relabeled 1..|S|).
JointDistribution marginal(const JointDistribution& d, SubsetMask s);

// Independent coupling with coordinates paired; alphabet sizes multiply and
// entropy vectors add.
JointDistribution product(const JointDistribution& d1, const JointDistribution& d2);

// Insert a constant coordinate at `position` (1..n+1).
JointDistribution add_loop(const JointDistribution& d, int position);
// Append an exact copy of coordinate `source` as coordinate n+1.
JointDistribution parallel_extend(const JointDistribution& d, int source);

// Multipartite compatibility graph of the support: vertices are used symbols
// per coordinate, edges where the pairwise marginal mass is positive.
struct SupportGraphReport {
  struct Component {
    std::vector<std::pair<int, int>> vertices;  // (coordinate, symbol)
    bool complete_multipartite = false;
    bool vertex_masses_equal = false;
    bool edge_masses_equal = false;
  };
  std::vector<Component> components;
  bool all_complete = false;
  bool masses_uniform = false;
  bool pass() const { return all_complete && masses_uniform; }
};
SupportGraphReport support_graph_diagnostic(const JointDistribution& d);

// Solves h = a*r1 + b*r2 from the first two rationally independent
// coordinates, then verifies every subset within kTol.
struct FaceMembership {
  bool ok = false;
  double a = 0.0;
  double b = 0.0;
  double max_residual = 0.0;
  SubsetMask worst_subset = 0;
};
FaceMembership check_face_membership(const EntropyVector& h, const RankVector& r1,
                                     const RankVector& r2);

}  // namespace polyface

#endif
