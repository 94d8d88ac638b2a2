#include "polyface/sweeps.hpp"

#include <algorithm>

#include "polyface/catalog.hpp"
#include "polyface/cone.hpp"

namespace polyface {

SweepResult sweep_facet_counts() {
  SweepResult r{"facet-counts"};
  for (int n = 2; n <= 6; ++n) {
    ++r.cases;
    std::size_t pairs = std::size_t(n) * (n - 1) / 2;
    std::size_t expected = std::size_t(n) + pairs * (std::size_t{1} << (n - 2));
    std::size_t enumerated = enumerate_facets(n).size();
    if (enumerated != expected || facet_count(n) != expected) {
      ++r.failures;
      r.details.push_back("n=" + std::to_string(n) + ": enumerated " + std::to_string(enumerated) +
                          ", formula " + std::to_string(expected));
    }
  }
  return r;
}

SweepResult sweep_connected_iff_extreme() {
  SweepResult r{"connected-iff-extreme"};
  for (const auto& entry : standard_catalog()) {
    ++r.cases;
    bool connected = entry.matroid.connected_after_loop_deletion();
    bool extreme = is_extreme_ray(entry.matroid.rank());
    if (connected != extreme) {
      ++r.failures;
      r.details.push_back(entry.name + ": connected=" + std::to_string(connected) +
                          " extreme=" + std::to_string(extreme));
    }
  }
  return r;
}

SweepResult sweep_modular_or_tight() {
  SweepResult r{"modular-or-tight"};
  for (const auto& entry : standard_catalog()) {
    if (!entry.matroid.connected_after_loop_deletion()) continue;
    ++r.cases;
    if (!modular_or_tight_check(entry.matroid.rank())) {
      ++r.failures;
      r.details.push_back(entry.name);
    }
  }
  return r;
}

SweepResult sweep_circuit_noncontainment() {
  SweepResult r{"circuit-noncontainment"};
  const auto& catalog = standard_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Matroid& m1 = catalog[i].matroid;
    if (!m1.connected_after_loop_deletion() || m1.full_rank() < 1) continue;
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      const Matroid& m2 = catalog[j].matroid;
      if (m2.ground_size() != m1.ground_size()) continue;
      if (!m2.connected_after_loop_deletion() || m2.full_rank() < 1) continue;
      if (m1 == m2) continue;
      ++r.cases;
      if (!circuit_noncontainment_check(m1, m2)) {
        ++r.failures;
        r.details.push_back(catalog[i].name + " vs " + catalog[j].name);
      }
    }
  }
  return r;
}

SweepResult sweep_circuit_roundtrip() {
  SweepResult r{"circuit-roundtrip"};
  for (const auto& entry : standard_catalog()) {
    ++r.cases;
    Matroid rebuilt = Matroid::from_circuits(entry.matroid.ground_size(), entry.matroid.circuits());
    if (!(rebuilt == entry.matroid)) {
      ++r.failures;
      r.details.push_back(entry.name);
    }
  }
  return r;
}

SweepResult sweep_uniform_circuit_family() {
  SweepResult r{"uniform-circuit-family"};
  for (int n = 1; n <= 6; ++n) {
    for (SubsetMask alpha = 1; alpha <= full_mask(n); ++alpha) {
      int support = mask_size(alpha);
      for (int k = 1; k <= support; ++k) {
        ++r.cases;
        Matroid m = Matroid::uniform({k, alpha, n});
        std::vector<SubsetMask> expected;
        for (int e = 1; e <= n; ++e)
          if (!mask_contains(alpha, e)) expected.push_back(1u << (e - 1));
        if (k < support) {
          // all (k+1)-subsets of alpha
          SubsetMask full = full_mask(n);
          for (SubsetMask a = 1; a <= full; ++a)
            if ((a & alpha) == a && mask_size(a) == k + 1) expected.push_back(a);
        }
        std::sort(expected.begin(), expected.end(), [](SubsetMask a, SubsetMask b) {
          return std::pair(mask_size(a), a) < std::pair(mask_size(b), b);
        });
        if (m.circuits() != expected) {
          ++r.failures;
          r.details.push_back("U(" + std::to_string(k) + ",...) n=" + std::to_string(n));
        }
      }
    }
  }
  return r;
}

SweepResult sweep_two_face_u11() {
  SweepResult r{"two-face-u11"};
  for (const auto& entry : standard_catalog()) {
    const Matroid& m = entry.matroid;
    if (m.ground_size() > 5 || !m.connected_after_loop_deletion()) continue;
    for (int i = 1; i <= m.ground_size(); ++i) {
      RankVector u = Matroid::uniform({1, 1u << (i - 1), m.ground_size()}).rank();
      if (proportional(m.rank(), u)) continue;
      ++r.cases;
      int dim = minimal_face_dim(add(m.rank(), u));
      if (dim != 2) {
        ++r.failures;
        r.details.push_back(entry.name + " + U(1,1;a=" + std::to_string(i) + "): dim " + std::to_string(dim));
      }
    }
  }
  return r;
}

SweepResult sweep_two_face_u12() {
  SweepResult r{"two-face-u12"};
  for (const auto& entry : standard_catalog()) {
    const Matroid& m = entry.matroid;
    if (!m.connected_after_loop_deletion()) continue;
    for (int i = 1; i <= m.ground_size(); ++i) {
      for (int j = i + 1; j <= m.ground_size(); ++j) {
        SubsetMask alpha = (1u << (i - 1)) | (1u << (j - 1));
        RankVector u = Matroid::uniform({1, alpha, m.ground_size()}).rank();
        if (proportional(m.rank(), u)) continue;
        ++r.cases;
        int dim = minimal_face_dim(add(m.rank(), u));
        if (dim != 2) {
          ++r.failures;
          r.details.push_back(entry.name + " + U(1,2;a=" + std::to_string(i) + "," + std::to_string(j) +
                              "): dim " + std::to_string(dim));
        }
      }
    }
  }
  return r;
}

SweepResult sweep_scale_invariance() {
  SweepResult r{"scale-invariance"};
  const Rational scales[] = {Rational(2), Rational(1, 3), Rational(7, 5)};
  for (const auto& entry : standard_catalog()) {
    if (entry.matroid.ground_size() > 4) continue;  // keep the sweep quick
    const RankVector& h = entry.matroid.rank();
    if (h.is_zero()) continue;
    for (const Rational& c : scales) {
      ++r.cases;
      RankVector ch = scaled(c, h);
      bool ok = tight_set(ch).facets == tight_set(h).facets &&
                minimal_face_dim(ch) == minimal_face_dim(h) &&
                is_polymatroid(ch).ok == is_polymatroid(h).ok;
      if (!ok) {
        ++r.failures;
        r.details.push_back(entry.name + " * " + format_rational(c));
      }
    }
  }
  return r;
}

std::vector<SweepResult> run_all_sweeps() {
  std::vector<SweepResult> out = {
      sweep_circuit_noncontainment(), sweep_circuit_roundtrip(), sweep_connected_iff_extreme(),
      sweep_facet_counts(),           sweep_modular_or_tight(),  sweep_scale_invariance(),
      sweep_two_face_u11(),           sweep_two_face_u12(),      sweep_uniform_circuit_family()};
  std::sort(out.begin(), out.end(), [](const SweepResult& a, const SweepResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace polyface
