#ifndef POLYFACE_LINALG_HPP
#define POLYFACE_LINALG_HPP

#include <vector>

#include "polyface/rational.hpp"

namespace polyface {

// Rank of an integer matrix by Bareiss fraction-free elimination.
// Deterministic pivoting: first nonzero entry scanning rows in order,
// columns left to right. The matrix is consumed.
int matrix_rank_bareiss(std::vector<std::vector<BigInt>> m);

}  // namespace polyface

#endif
