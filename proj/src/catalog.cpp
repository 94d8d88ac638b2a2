#include "polyface/catalog.hpp"

#include <sstream>

namespace polyface {

static std::string uniform_name(int k, SubsetMask alpha, int n) {
  std::ostringstream out;
  out << "U(" << k << "," << mask_size(alpha) << ";a=";
  bool first = true;
  for (int e : mask_elements(alpha)) {
    if (!first) out << ",";
    out << e;
    first = false;
  }
  out << ";n=" << n << ")";
  return out.str();
}

static std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto push_uniforms = [&out](int n, SubsetMask alpha) {
    for (int k = 1; k <= mask_size(alpha); ++k)
      out.push_back({uniform_name(k, alpha, n), Matroid::uniform({k, alpha, n})});
  };
  for (int n = 1; n <= 6; ++n) {
    if (n <= 4) {
      for (SubsetMask alpha = 1; alpha <= full_mask(n); ++alpha) push_uniforms(n, alpha);
    } else {
      for (int np = 1; np <= n; ++np) push_uniforms(n, full_mask(np));
    }
  }

  Matroid u23 = Matroid::uniform({2, full_mask(3), 3});
  Matroid u24 = Matroid::uniform({2, full_mask(4), 4});
  Matroid u23p3 = u23.with_parallel_copy(3);
  out.push_back({"U(2,3)+par(3)@4", u23p3});
  out.push_back({"U(2,3)+par(1)@4", u23.with_parallel_copy(1)});
  out.push_back({"U(2,3)+par(3)@4+loop@5", u23p3.with_loop(5)});
  out.push_back({"U(2,3)+par(3)@4+par(3)@5", u23p3.with_parallel_copy(3)});
  out.push_back({"U(2,3)+par(3)@4+par(1)@5", u23p3.with_parallel_copy(1)});
  out.push_back({"U(2,4)+par(4)@5", u24.with_parallel_copy(4)});
  out.push_back({"U(2,4)+par(4)@5+loop@6", u24.with_parallel_copy(4).with_loop(6)});
  out.push_back({"U(2,4)+loop@5+par(2)@6", u24.with_loop(5).with_parallel_copy(2)});

  Matroid u12 = Matroid::uniform({1, full_mask(2), 2});
  out.push_back({"U(1,2)(+)U(1,2)", direct_sum(u12, u12)});
  out.push_back({"U(2,3)(+)U(1,2)", direct_sum(u23, u12)});
  out.push_back({"U(2,3)(+)U(2,3)", direct_sum(u23, u23)});
  out.push_back({"U(1,2)(+)U(1,2)+loop@5", direct_sum(u12, u12).with_loop(5)});
  return out;
}

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

}  // namespace polyface
