#include "polyface/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyface {

int Matroid::full_rank() const {
  return static_cast<int>(numerator(rank_.values[full_mask(rank_.n)]));
}

Matroid Matroid::from_rank(RankVector rank) {
  for (SubsetMask a = 0; a < rank.values.size(); ++a) {
    const Rational& v = rank.values[a];
    if (denominator(v) != 1) throw std::invalid_argument("matroid rank must be integer-valued");
    if (v < 0 || v > mask_size(a)) throw std::invalid_argument("matroid rank needs 0 <= rank(A) <= |A|");
  }
  PolymatroidCheck check = is_polymatroid(rank);
  if (!check.ok) throw std::invalid_argument("matroid rank is not a polymatroid: " + check.message);
  Matroid m;
  m.rank_ = std::move(rank);
  m.derive();
  return m;
}

void Matroid::derive() {
  int n = rank_.n;
  SubsetMask full = full_mask(n);
  // circuits: dependent sets containing no smaller circuit, by increasing size
  std::vector<SubsetMask> by_size[kMaxGroundSet + 1];
  for (SubsetMask a = 1; a <= full; ++a) by_size[mask_size(a)].push_back(a);
  for (int size = 1; size <= n; ++size) {
    for (SubsetMask a : by_size[size]) {
      if (rank_.values[a] >= size) continue;  // independent
      bool minimal = true;
      for (SubsetMask c : circuits_) {
        if ((c & a) == c) {
          minimal = false;
          break;
        }
      }
      if (minimal) circuits_.push_back(a);
    }
  }
  for (int e = 1; e <= n; ++e)
    if (rank_.values[1u << (e - 1)] == 0) loops_ |= 1u << (e - 1);
  SubsetMask assigned = loops_;
  for (int e = 1; e <= n; ++e) {
    SubsetMask be = 1u << (e - 1);
    if (assigned & be) continue;
    SubsetMask cls = be;
    for (int f = e + 1; f <= n; ++f) {
      SubsetMask bf = 1u << (f - 1);
      if ((assigned & bf) || (loops_ & bf)) continue;
      if (rank_.values[be | bf] == 1) cls |= bf;
    }
    assigned |= cls;
    parallel_classes_.push_back(cls);
  }
}

Matroid Matroid::from_circuits(int n, std::vector<SubsetMask> circuits) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size must be in 1..16");
  SubsetMask full = full_mask(n);
  std::sort(circuits.begin(), circuits.end(), [](SubsetMask a, SubsetMask b) {
    return std::pair(mask_size(a), a) < std::pair(mask_size(b), b);
  });
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i] == 0 || circuits[i] > full)
      throw std::invalid_argument("circuit outside ground set");
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      SubsetMask meet = circuits[i] & circuits[j];
      if (meet == circuits[i] || meet == circuits[j])
        throw std::invalid_argument("circuit axioms violated: family is not an antichain");
    }
  }
  auto independent = [&circuits](SubsetMask a) {
    for (SubsetMask c : circuits)
      if ((c & a) == c) return false;
    return true;
  };
  // rank(A) = |A| if independent, else max over one-element deletions
  std::vector<Rational> ranks(std::size_t{1} << n, Rational(0));
  for (SubsetMask a = 1; a <= full; ++a) {
    if (independent(a)) {
      ranks[a] = mask_size(a);
      continue;
    }
    BigInt best = 0;
    for (int e : mask_elements(a)) best = std::max(best, numerator(ranks[a & ~(1u << (e - 1))]));
    ranks[a] = Rational(best);
  }
  Matroid m;
  try {
    m = from_rank(RankVector(n, std::move(ranks)));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("circuit axioms violated: ") + e.what());
  }
  if (m.circuits_ != circuits) throw std::invalid_argument("circuit axioms violated: family does not round-trip");
  return m;
}

Matroid Matroid::uniform(const UniformSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxGroundSet) throw std::invalid_argument("ground set size must be in 1..16");
  if (spec.alpha == 0 || spec.alpha > full_mask(spec.n))
    throw std::invalid_argument("alpha must be a nonempty subset of the ground set");
  int support = mask_size(spec.alpha);
  if (spec.k < 1 || spec.k > support) throw std::invalid_argument("uniform rank needs 1 <= k <= |alpha|");
  std::vector<Rational> ranks(std::size_t{1} << spec.n);
  for (SubsetMask a = 0; a < ranks.size(); ++a)
    ranks[a] = std::min(spec.k, mask_size(a & spec.alpha));
  Matroid m;
  m.rank_ = RankVector(spec.n, std::move(ranks));
  m.derive();
  return m;
}

std::vector<std::pair<int, int>> Matroid::parallel_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (SubsetMask cls : parallel_classes_) {
    auto elems = mask_elements(cls);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) out.emplace_back(elems[i], elems[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Matroid::connected_after_loop_deletion() const {
  SubsetMask nonloops = full_mask(rank_.n) & ~loops_;
  if (mask_size(nonloops) <= 1) return true;
  auto elems = mask_elements(nonloops);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      SubsetMask pair = (1u << (elems[i] - 1)) | (1u << (elems[j] - 1));
      bool covered = false;
      for (SubsetMask c : circuits_) {
        if ((c & pair) == pair) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

Matroid Matroid::with_loop(int position) const {
  int n = rank_.n;
  if (position < 1 || position > n + 1) throw std::invalid_argument("loop position out of range");
  // old element e maps to e when e < position, else e+1
  std::vector<Rational> ranks(std::size_t{1} << (n + 1));
  for (SubsetMask a = 0; a < ranks.size(); ++a) {
    SubsetMask low = a & ((1u << (position - 1)) - 1u);
    SubsetMask high = (a >> position) << (position - 1);
    ranks[a] = rank_.values[low | high];
  }
  return from_rank(RankVector(n + 1, std::move(ranks)));
}

Matroid Matroid::with_parallel_copy(int source) const {
  int n = rank_.n;
  if (source < 1 || source > n) throw std::invalid_argument("source element out of range");
  if (loops_ & (1u << (source - 1))) throw std::invalid_argument("cannot duplicate a loop in parallel");
  std::vector<Rational> ranks(std::size_t{1} << (n + 1));
  SubsetMask bnew = 1u << n;
  SubsetMask bsrc = 1u << (source - 1);
  for (SubsetMask a = 0; a < ranks.size(); ++a) {
    SubsetMask base = a & ~bnew;
    if (a & bnew) base |= bsrc;
    ranks[a] = rank_.values[base];
  }
  return from_rank(RankVector(n + 1, std::move(ranks)));
}

Matroid::Simplification Matroid::simplification() const {
  Simplification out;
  out.rank = full_rank();
  out.size = static_cast<int>(parallel_classes_.size());
  SubsetMask reps = 0;
  for (SubsetMask cls : parallel_classes_) reps |= 1u << (mask_elements(cls).front() - 1);
  out.is_uniform = true;
  if (out.size > 0) {
    RankVector restricted = restrict_to(rank_, reps);
    for (SubsetMask a = 0; a < restricted.values.size(); ++a) {
      if (restricted.values[a] != std::min(out.rank, mask_size(a))) {
        out.is_uniform = false;
        break;
      }
    }
  }
  return out;
}

bool circuit_noncontainment_check(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() != m2.ground_size())
    throw std::invalid_argument("matroids must share a ground set");
  if (m1 == m2) throw std::invalid_argument("matroids must be distinct");
  if (!m1.connected_after_loop_deletion() || !m2.connected_after_loop_deletion())
    throw std::invalid_argument("matroids must be connected after loop deletion");
  if (m1.full_rank() < 1 || m2.full_rank() < 1)
    throw std::invalid_argument("matroids must have rank >= 1");
  auto contains = [](const std::vector<SubsetMask>& big, const std::vector<SubsetMask>& small) {
    for (SubsetMask c : small)
      if (std::find(big.begin(), big.end(), c) == big.end()) return false;
    return true;
  };
  return !contains(m1.circuits(), m2.circuits()) && !contains(m2.circuits(), m1.circuits());
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  int n1 = m1.ground_size(), n2 = m2.ground_size();
  if (n1 + n2 > kMaxGroundSet) throw std::invalid_argument("direct sum exceeds ground set cap");
  std::vector<Rational> ranks(std::size_t{1} << (n1 + n2));
  SubsetMask lowmask = full_mask(n1);
  for (SubsetMask a = 0; a < ranks.size(); ++a)
    ranks[a] = m1.rank().values[a & lowmask] + m2.rank().values[a >> n1];
  return Matroid::from_rank(RankVector(n1 + n2, std::move(ranks)));
}

}  // namespace polyface
