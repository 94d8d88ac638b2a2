#include "polyface/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyface {

JointDistribution::JointDistribution(std::vector<int> alphabets, std::map<Outcome, Rational> pmf)
    : alphabets_(std::move(alphabets)), pmf_(std::move(pmf)) {
  if (alphabets_.empty() || alphabets_.size() > kMaxGroundSet)
    throw std::invalid_argument("coordinate count must be in 1..16");
  for (int size : alphabets_)
    if (size < 1) throw std::invalid_argument("alphabet sizes must be positive");
  if (pmf_.empty()) throw std::invalid_argument("probability mass function is empty");
  Rational total = 0;
  for (const auto& [outcome, mass] : pmf_) {
    if (outcome.size() != alphabets_.size()) throw std::invalid_argument("outcome arity mismatch");
    for (std::size_t i = 0; i < outcome.size(); ++i)
      if (outcome[i] < 0 || outcome[i] >= alphabets_[i])
        throw std::invalid_argument("outcome symbol outside alphabet");
    if (mass <= 0) throw std::invalid_argument("masses must be positive");
    total += mass;
  }
  if (total != 1) throw std::invalid_argument("masses must sum to exactly 1");
}

static Outcome project(const Outcome& x, const std::vector<int>& coords) {
  Outcome out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(x[c - 1]);
  return out;
}

// Marginal masses on the coordinates of S, keyed by projected outcome.
static std::map<Outcome, Rational> marginal_masses(const JointDistribution& d, SubsetMask s) {
  auto coords = mask_elements(s);
  std::map<Outcome, Rational> out;
  for (const auto& [outcome, mass] : d.pmf()) out[project(outcome, coords)] += mass;
  return out;
}

EntropyVector entropy_vector(const JointDistribution& d) {
  int n = d.coords();
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (SubsetMask a = 1; a <= full_mask(n); ++a) {
    double h = 0.0;
    for (const auto& [outcome, mass] : marginal_masses(d, a)) {
      double p = static_cast<double>(mass);
      h -= p * std::log(p);
    }
    values[a] = h;
  }
  return EntropyVector(n, std::move(values));
}

JointDistribution marginal(const JointDistribution& d, SubsetMask s) {
  if (s == 0) throw std::invalid_argument("marginal onto the empty set");
  if (s > full_mask(d.coords())) throw std::out_of_range("subset outside ground set");
  auto coords = mask_elements(s);
  std::vector<int> alphabets;
  for (int c : coords) alphabets.push_back(d.alphabets()[c - 1]);
  return JointDistribution(std::move(alphabets), marginal_masses(d, s));
}

JointDistribution product(const JointDistribution& d1, const JointDistribution& d2) {
  if (d1.coords() != d2.coords()) throw std::invalid_argument("mismatched coordinate counts");
  int n = d1.coords();
  std::vector<int> alphabets(n);
  for (int i = 0; i < n; ++i) alphabets[i] = d1.alphabets()[i] * d2.alphabets()[i];
  std::map<Outcome, Rational> pmf;
  for (const auto& [x, px] : d1.pmf()) {
    for (const auto& [y, py] : d2.pmf()) {
      Outcome z(n);
      for (int i = 0; i < n; ++i) z[i] = x[i] * d2.alphabets()[i] + y[i];
      pmf[z] = px * py;
    }
  }
  return JointDistribution(std::move(alphabets), std::move(pmf));
}

JointDistribution add_loop(const JointDistribution& d, int position) {
  int n = d.coords();
  if (position < 1 || position > n + 1) throw std::invalid_argument("loop position out of range");
  std::vector<int> alphabets = d.alphabets();
  alphabets.insert(alphabets.begin() + (position - 1), 1);
  std::map<Outcome, Rational> pmf;
  for (const auto& [x, mass] : d.pmf()) {
    Outcome z = x;
    z.insert(z.begin() + (position - 1), 0);
    pmf[z] = mass;
  }
  return JointDistribution(std::move(alphabets), std::move(pmf));
}

JointDistribution parallel_extend(const JointDistribution& d, int source) {
  int n = d.coords();
  if (source < 1 || source > n) throw std::invalid_argument("source coordinate out of range");
  std::vector<int> alphabets = d.alphabets();
  alphabets.push_back(alphabets[source - 1]);
  std::map<Outcome, Rational> pmf;
  for (const auto& [x, mass] : d.pmf()) {
    Outcome z = x;
    z.push_back(x[source - 1]);
    pmf[z] = mass;
  }
  return JointDistribution(std::move(alphabets), std::move(pmf));
}

SupportGraphReport support_graph_diagnostic(const JointDistribution& d) {
  int n = d.coords();
  std::vector<std::pair<int, int>> vertices;  // (coordinate, symbol), used only
  std::map<std::pair<int, int>, Rational> vertex_mass;
  for (int c = 1; c <= n; ++c)
    for (const auto& [sym, mass] : marginal_masses(d, 1u << (c - 1)))
      vertex_mass[{c, sym[0]}] = mass;
  for (const auto& [v, mass] : vertex_mass) vertices.push_back(v);

  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Rational> edge_mass;
  for (int c1 = 1; c1 <= n; ++c1) {
    for (int c2 = c1 + 1; c2 <= n; ++c2) {
      SubsetMask pair_mask = (1u << (c1 - 1)) | (1u << (c2 - 1));
      for (const auto& [sym, mass] : marginal_masses(d, pair_mask))
        edge_mass[{{c1, sym[0]}, {c2, sym[1]}}] = mass;
    }
  }

  // union-find over vertices along edges
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<std::size_t> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [edge, mass] : edge_mass) parent[find(index[edge.first])] = find(index[edge.second]);

  std::map<std::size_t, SupportGraphReport::Component> by_root;
  for (std::size_t i = 0; i < vertices.size(); ++i) by_root[find(i)].vertices.push_back(vertices[i]);

  SupportGraphReport report;
  report.all_complete = true;
  report.masses_uniform = true;
  for (auto& [root, comp] : by_root) {
    comp.complete_multipartite = true;
    comp.vertex_masses_equal = true;
    comp.edge_masses_equal = true;
    // all cross-coordinate symbol pairs inside the component must be edges
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.vertices.size(); ++j) {
        auto v1 = comp.vertices[i], v2 = comp.vertices[j];
        if (v1.first == v2.first) continue;
        if (!edge_mass.count({v1, v2})) comp.complete_multipartite = false;
      }
    }
    const Rational* vmass = nullptr;
    for (const auto& v : comp.vertices) {
      if (!vmass) vmass = &vertex_mass[v];
      else if (vertex_mass[v] != *vmass) comp.vertex_masses_equal = false;
    }
    const Rational* emass = nullptr;
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.vertices.size(); ++j) {
        auto it = edge_mass.find({comp.vertices[i], comp.vertices[j]});
        if (it == edge_mass.end()) continue;
        if (!emass) emass = &it->second;
        else if (it->second != *emass) comp.edge_masses_equal = false;
      }
    }
    report.all_complete &= comp.complete_multipartite;
    report.masses_uniform &= comp.vertex_masses_equal && comp.edge_masses_equal;
    report.components.push_back(std::move(comp));
  }
  return report;
}

FaceMembership check_face_membership(const EntropyVector& h, const RankVector& r1,
                                     const RankVector& r2) {
  if (h.n != r1.n || h.n != r2.n) throw std::invalid_argument("mismatched ground set sizes");
  // first subset where (r1,r2) is nonzero, then the first forming a
  // nonsingular 2x2 system with it
  std::size_t size = r1.values.size();
  std::size_t first = 0;
  while (first < size && r1.values[first] == 0 && r2.values[first] == 0) ++first;
  if (first == size) throw std::invalid_argument("rank vectors are linearly dependent");
  std::size_t second = first + 1;
  Rational det = 0;
  for (; second < size; ++second) {
    det = r1.values[first] * r2.values[second] - r1.values[second] * r2.values[first];
    if (det != 0) break;
  }
  if (second == size) throw std::invalid_argument("rank vectors are linearly dependent");

  double d = static_cast<double>(det);
  FaceMembership out;
  out.a = (h.values[first] * static_cast<double>(r2.values[second]) -
           h.values[second] * static_cast<double>(r2.values[first])) / d;
  out.b = (h.values[second] * static_cast<double>(r1.values[first]) -
           h.values[first] * static_cast<double>(r1.values[second])) / d;
  for (SubsetMask m = 0; m < size; ++m) {
    double expect = out.a * static_cast<double>(r1.values[m]) +
                    out.b * static_cast<double>(r2.values[m]);
    double residual = std::abs(h.values[m] - expect);
    if (residual > out.max_residual) {
      out.max_residual = residual;
      out.worst_subset = m;
    }
  }
  out.ok = out.max_residual <= kTol;
  return out;
}

}  // namespace polyface
