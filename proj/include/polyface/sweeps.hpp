#ifndef POLYFACE_SWEEPS_HPP
#define POLYFACE_SWEEPS_HPP

#include <string>
#include <vector>

namespace polyface {

// One property suite over the bundled catalog.
struct SweepResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> details;  // one line per failing case
  bool passed() const { return failures == 0 && cases > 0; }
};

SweepResult sweep_facet_counts();            // counts match n + C(n,2) 2^(n-2), n = 2..6
SweepResult sweep_connected_iff_extreme();   // connectivity <-> extreme ray, full catalog
SweepResult sweep_modular_or_tight();        // every catalog extreme ray is modular or tight
SweepResult sweep_circuit_noncontainment();  // distinct connected pairs on one ground set
SweepResult sweep_circuit_roundtrip();       // circuits -> matroid -> circuits is the identity
SweepResult sweep_uniform_circuit_family();  // circuits of U_{k,alpha} are the (k+1)-subsets + loops
SweepResult sweep_two_face_u11();            // rank M + rank U_{1,1} spans a 2-face (n <= 5)
SweepResult sweep_two_face_u12();            // rank M + rank U_{1,2} spans a 2-face
SweepResult sweep_scale_invariance();        // tight set and face dim invariant under scaling

std::vector<SweepResult> run_all_sweeps();   // sorted by suite name

}  // namespace polyface

#endif
