#ifndef POLYFACE_MATROID_HPP
#define POLYFACE_MATROID_HPP

#include <utility>
#include <vector>

#include "polyface/setfn.hpp"

namespace polyface {

// U_{k,n'}^{alpha,n}: restriction on alpha is uniform of rank k, everything
// outside alpha is a loop.
struct UniformSpec {
  int k = 1;
  SubsetMask alpha = 0;
  int n = 0;
};

class Matroid {
 public:
  // Validates integrality, 0 <= rank(A) <= |A| and the polymatroid axioms,
  // then derives circuits, loops and parallel classes.
  static Matroid from_rank(RankVector rank);
  // rank(A) = max size of a subset of A containing no circuit. The family must
  // be an antichain and round-trip back to itself, else "circuit axioms
  // violated" is thrown.
  static Matroid from_circuits(int n, std::vector<SubsetMask> circuits);
  static Matroid uniform(const UniformSpec& spec);

  int ground_size() const { return rank_.n; }
  const RankVector& rank() const { return rank_; }
  Rational rank_of(SubsetMask a) const { return rank_.at(a); }
  int full_rank() const;

  // Minimal dependent sets including singleton loops, ordered by (size, mask).
  const std::vector<SubsetMask>& circuits() const { return circuits_; }
  SubsetMask loops() const { return loops_; }
  // Partition of the non-loops into parallel classes, ordered by least element.
  const std::vector<SubsetMask>& parallel_classes() const { return parallel_classes_; }
  std::vector<std::pair<int, int>> parallel_pairs() const;

  // Every pair of distinct non-loop elements shares a circuit; matroids with
  // at most one non-loop element count as connected.
  bool connected_after_loop_deletion() const;

  // Extension helpers: new element appended as ground element n+1 unless a
  // position is given for the loop.
  Matroid with_loop(int position) const;            // 1 <= position <= n+1
  Matroid with_parallel_copy(int source) const;     // copy of a non-loop element

  struct Simplification {
    int rank = 0;        // rank of the whole matroid
    int size = 0;        // number of parallel classes
    bool is_uniform = false;  // one representative per class forms U_{rank,size}
  };
  Simplification simplification() const;

  bool operator==(const Matroid& other) const { return rank_ == other.rank_; }

 private:
  Matroid() = default;
  void derive();

  RankVector rank_;
  std::vector<SubsetMask> circuits_;
  SubsetMask loops_ = 0;
  std::vector<SubsetMask> parallel_classes_;
};

// Neither circuit family contains the other (for two distinct connected
// matroids on the same ground set). Precondition violations throw.
bool circuit_noncontainment_check(const Matroid& m1, const Matroid& m2);

// Ground sets concatenated; used to build disconnected catalog examples.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

}  // namespace polyface

#endif
