#ifndef POLYFACE_CATALOG_HPP
#define POLYFACE_CATALOG_HPP

#include <string>
#include <vector>

#include "polyface/matroid.hpp"

namespace polyface {

struct CatalogEntry {
  std::string name;
  Matroid matroid;
};

// Deterministic bundled corpus on ground sets n <= 6: uniform matroids
// U_{k,n'}^{alpha,n} (all alpha for n <= 4, initial-segment alpha for n = 5,6),
// loop/parallel extensions of U_{2,3} and U_{2,4}, and free matroids plus
// direct sums as disconnected negatives.
const std::vector<CatalogEntry>& standard_catalog();

}  // namespace polyface

#endif
