#ifndef POLYFACE_CHI_HPP
#define POLYFACE_CHI_HPP

#include <functional>
#include <vector>

#include "polyface/matroid.hpp"

namespace polyface {

enum class Tri { True, False, Unknown };

// Membership rule for the p-characteristic set of a matroid: the integers
// v >= 2 for which (ln v) * rank is an entropy vector. True answers are backed
// by the built-in table or by a verified generator construction; False and
// Unknown are kept distinct.
class ChiOracle {
 public:
  static constexpr int kProbeLo = 2;
  static constexpr int kProbeHi = 16;

  Tri query(const Matroid& m, int v) const;

  // A support realization this library can actually build (copies, modular
  // sums, or an MDS generator over GF(v)); strictly stronger than query ==
  // True for table-only members.
  bool has_support_construction(const Matroid& m, int v) const;

  std::function<Tri(int)> bind(const Matroid& m) const;

  struct Probe {
    std::vector<int> members, non_members, undetermined;
  };
  Probe probe(const Matroid& m) const;  // sweep of v in [kProbeLo, kProbeHi]
};

}  // namespace polyface

#endif
