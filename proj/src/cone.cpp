#include "polyface/cone.hpp"

#include <stdexcept>

#include "polyface/linalg.hpp"

namespace polyface {

Rational slack(const RankVector& h, const FacetId& f) {
  SubsetMask full = full_mask(h.n);
  if (f.kind == FacetId::Kind::MonotoneAtTop) {
    if (f.i > h.n) throw std::out_of_range("facet element outside ground set");
    return Rational(h.values[full] - h.values[full & ~(1u << (f.i - 1))]);
  }
  if (f.j > h.n || (f.K & ~full)) throw std::out_of_range("facet outside ground set");
  SubsetMask bi = 1u << (f.i - 1), bj = 1u << (f.j - 1);
  return Rational(h.values[f.K | bi] + h.values[f.K | bj] - h.values[f.K] -
                  h.values[f.K | bi | bj]);
}

double slack(const EntropyVector& h, const FacetId& f) {
  SubsetMask full = full_mask(h.n);
  if (f.kind == FacetId::Kind::MonotoneAtTop) {
    if (f.i > h.n) throw std::out_of_range("facet element outside ground set");
    return h.values[full] - h.values[full & ~(1u << (f.i - 1))];
  }
  if (f.j > h.n || (f.K & ~full)) throw std::out_of_range("facet outside ground set");
  SubsetMask bi = 1u << (f.i - 1), bj = 1u << (f.j - 1);
  return h.values[f.K | bi] + h.values[f.K | bj] - h.values[f.K] - h.values[f.K | bi | bj];
}

TightSet tight_set(const RankVector& h) {
  TightSet out;
  for (const FacetId& f : enumerate_facets(h.n)) {
    Rational s = slack(h, f);
    if (s < 0) throw std::domain_error("not a polymatroid: violates " + f.to_string());
    if (s == 0) out.facets.push_back(f);
  }
  return out;
}

// Coefficient row of the facet equality over the 2^n - 1 nonempty-subset
// coordinates (h(empty) is pinned to 0 and dropped).
static std::vector<BigInt> facet_row(int n, const FacetId& f) {
  std::vector<BigInt> row((std::size_t{1} << n) - 1, 0);
  auto coord = [&row](SubsetMask a, int delta) {
    if (a != 0) row[a - 1] += delta;
  };
  SubsetMask full = full_mask(n);
  if (f.kind == FacetId::Kind::MonotoneAtTop) {
    coord(full, 1);
    coord(full & ~(1u << (f.i - 1)), -1);
  } else {
    SubsetMask bi = 1u << (f.i - 1), bj = 1u << (f.j - 1);
    coord(f.K | bi, 1);
    coord(f.K | bj, 1);
    coord(f.K, -1);
    coord(f.K | bi | bj, -1);
  }
  return row;
}

int minimal_face_dim(const RankVector& h) {
  TightSet tight = tight_set(h);  // also validates membership in Gamma_n
  int dim_ambient = static_cast<int>((std::size_t{1} << h.n) - 1);
  if (tight.facets.empty()) return dim_ambient;
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(tight.facets.size());
  for (const FacetId& f : tight.facets) rows.push_back(facet_row(h.n, f));
  return dim_ambient - matrix_rank_bareiss(std::move(rows));
}

bool is_extreme_ray(const RankVector& h) {
  if (h.is_zero()) throw std::invalid_argument("zero vector spans no ray");
  return minimal_face_dim(h) == 1;
}

bool is_two_face(const RankVector& h1, const RankVector& h2) {
  if (!is_extreme_ray(h1)) throw std::invalid_argument("first argument is not an extreme ray");
  if (!is_extreme_ray(h2)) throw std::invalid_argument("second argument is not an extreme ray");
  if (proportional(h1, h2)) throw std::invalid_argument("arguments span the same ray");
  RankVector sum = add(h1, h2);
  if (!is_polymatroid(sum).ok) return false;  // guards invalid inputs
  return minimal_face_dim(sum) == 2;
}

bool modular_or_tight_check(const RankVector& h) {
  if (!is_extreme_ray(h)) throw std::invalid_argument("argument is not an extreme ray");
  return is_modular(h) || is_tight(h);
}

}  // namespace polyface
