#include "polyface/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "polyface/cone.hpp"

namespace polyface {

std::string to_string(FaceType t) {
  switch (t) {
    case FaceType::AllEntropic: return "all-entropic";
    case FaceType::Matus: return "matus";
    case FaceType::ChenYeung: return "chen-yeung";
    case FaceType::NonEntropic: return "non-entropic";
    case FaceType::Uncovered: return "uncovered";
  }
  return "uncovered";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Entropic: return "entropic";
    case Membership::NonEntropic: return "non-entropic";
    case Membership::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(RegionPiece::Kind k) {
  switch (k) {
    case RegionPiece::Kind::Strip: return "strip";
    case RegionPiece::Kind::Ray: return "ray";
    case RegionPiece::Kind::Staircase: return "staircase";
    case RegionPiece::Kind::Gap: return "gap";
  }
  return "gap";
}

FaceType restricted_pair_type(int m, int t) {
  if (m < 2 || t < 0 || t > m) throw std::invalid_argument("need circuit size m >= 2 and 0 <= t <= m");
  if (m == 2) return FaceType::AllEntropic;
  if (t == m) return FaceType::AllEntropic;
  if (m == 3 && t == 2) return FaceType::Matus;
  return FaceType::ChenYeung;
}

FaceReport classify_face(const Matroid& m, SubsetMask alpha, const ChiOracle& chi) {
  int n = m.ground_size();
  if (alpha == 0 || alpha > full_mask(n))
    throw std::invalid_argument("alpha must be a nonempty subset of the ground set");
  if (m.rank().is_zero()) throw std::invalid_argument("matroid spans no extreme ray (zero rank)");
  if (!m.connected_after_loop_deletion())
    throw std::invalid_argument("matroid spans no extreme ray (not connected after loop deletion)");

  RankVector r_m = m.rank();
  RankVector r_u = Matroid::uniform({1, alpha, n}).rank();
  if (proportional(r_m, r_u)) throw std::invalid_argument("the two rays coincide");

  FaceReport report;
  report.sum_face_dim = minimal_face_dim(add(r_m, r_u));
  report.two_face_confirmed = report.sum_face_dim == 2;
  if (!report.two_face_confirmed)
    report.notes.push_back("the rays do not span a 2-dimensional face (minimal face of the sum has dimension " +
                           std::to_string(report.sum_face_dim) + "); the verdict describes the pair");

  report.chi = chi.probe(m);
  SubsetMask u_loops = full_mask(n) & ~alpha;
  report.m_loops_subset_of_u_loops = (m.loops() & alpha) == 0;
  report.u_loops_subset_of_m_loops = (u_loops & ~m.loops()) == 0;

  int matus_circuits = 0, chen_yeung_circuits = 0;
  for (SubsetMask c : m.circuits()) {
    int size = mask_size(c);
    if (size < 2) continue;  // loops act only through the loop conditions
    CircuitAnalysis entry;
    entry.circuit = c;
    entry.m = size;
    entry.t = mask_size(c & alpha);
    entry.restricted_type = restricted_pair_type(entry.m, entry.t);
    if (entry.restricted_type == FaceType::Matus) ++matus_circuits;
    if (entry.restricted_type == FaceType::ChenYeung) ++chen_yeung_circuits;
    report.circuit_analysis.push_back(entry);
  }
  if (!report.circuit_analysis.empty())
    report.notes.push_back("restricted pair types come from per-circuit (|C|, |C n alpha|) data; "
                           "restricted pairs need not span faces of the restricted cone");

  bool chi_all_false = report.chi.members.empty() && report.chi.undetermined.empty();
  if (chi_all_false) {
    report.face_type = FaceType::NonEntropic;
    report.notes.push_back("non-entropic verdict is conditional: chi probe over v in [2,16] found no member");
    return report;
  }
  if (report.chi.members.empty())
    report.notes.push_back("chi probe over v in [2,16] certified no member; entropic pieces unconfirmed");

  if (m.full_rank() == 1) {
    report.face_type = FaceType::AllEntropic;
    return report;
  }
  if (chen_yeung_circuits > 0) {
    report.face_type = FaceType::ChenYeung;
  } else if (matus_circuits > 0) {
    report.face_type =
        report.m_loops_subset_of_u_loops ? FaceType::Matus : FaceType::ChenYeung;
    if (matus_circuits > 1 && report.face_type == FaceType::Matus)
      report.notes.push_back("several circuits restrict to the Matus pair; classification extends the "
                             "single-circuit case over parallel copies");
  } else if (!report.circuit_analysis.empty()) {
    if (report.u_loops_subset_of_m_loops) {
      report.face_type = FaceType::AllEntropic;
    } else {
      report.face_type = FaceType::Uncovered;
      report.notes.push_back("all circuits restrict to all-entropic pairs, yet the rank-1 ray has a "
                             "non-loop of the matroid as a loop; no theorem case applies");
    }
  } else {
    report.face_type = FaceType::Uncovered;
    report.notes.push_back("connected matroid of rank >= 2 without circuits of size >= 2; no theorem case applies");
  }
  return report;
}

namespace {

// v >= 2 with |a - ln v| <= kTol, else 0.
int lattice_level(double a) {
  if (a > 36.0) throw std::domain_error("a too large");
  auto v = static_cast<long long>(std::llround(std::exp(a)));
  if (v >= 2 && std::abs(a - std::log(static_cast<double>(v))) <= kTol) return static_cast<int>(v);
  return 0;
}

// smallest v with ln v >= a, for a > 0 off the lattice
int ceil_level(double a) {
  if (a > 36.0) throw std::domain_error("a too large");
  auto v = static_cast<long long>(std::ceil(std::exp(a) - 1e-12));
  return static_cast<int>(std::max<long long>(v, 2));
}

}  // namespace

Membership region_membership(FaceType type, const std::function<Tri(int)>& chi, double a,
                             double b) {
  if (a < 0 || b < 0) throw std::domain_error("face coordinates must be nonnegative");
  if (a <= kTol) return Membership::Entropic;  // the rank-1 ray (and the origin)
  switch (type) {
    case FaceType::AllEntropic:
      return Membership::Entropic;
    case FaceType::NonEntropic:
      return Membership::NonEntropic;
    case FaceType::Uncovered:
      return Membership::Unknown;
    case FaceType::Matus: {
      if (int v = lattice_level(a)) {
        // lattice columns extend entropic strips down to b = 0
        return chi(v) == Tri::True ? Membership::Entropic : Membership::Unknown;
      }
      int v = ceil_level(a);
      double lv = std::log(static_cast<double>(v));
      if (a + b >= lv - kTol)
        return chi(v) == Tri::True ? Membership::Entropic : Membership::Unknown;
      return Membership::NonEntropic;  // strictly below the staircase
    }
    case FaceType::ChenYeung: {
      int v = lattice_level(a);
      if (v == 0) return Membership::NonEntropic;
      return chi(v) == Tri::True ? Membership::Entropic : Membership::Unknown;
    }
  }
  return Membership::Unknown;
}

std::vector<RegionPiece> region_boundary_data(FaceType type, const std::function<Tri(int)>& chi,
                                              double a_max) {
  if (!(a_max > 0)) throw std::domain_error("a_max must be positive");
  if (a_max > 36.0) throw std::domain_error("a_max too large");
  std::vector<RegionPiece> pieces;
  auto tag = [](int v) { return " v=" + std::to_string(v); };
  switch (type) {
    case FaceType::AllEntropic:
      pieces.push_back({"entropic", RegionPiece::Kind::Strip, 0, 0, a_max, 0});
      break;
    case FaceType::NonEntropic:
      pieces.push_back({"non-entropic", RegionPiece::Kind::Gap, 0, 0, a_max, 0});
      break;
    case FaceType::Uncovered:
      pieces.push_back({"unknown", RegionPiece::Kind::Gap, 0, 0, a_max, 0});
      break;
    case FaceType::Matus: {
      for (int v = 2;; ++v) {
        double lo = std::log(static_cast<double>(v - 1));
        if (lo >= a_max - 1e-15) break;
        double hi = std::log(static_cast<double>(v));
        double x2 = std::min(hi, a_max);
        pieces.push_back({"staircase" + tag(v), RegionPiece::Kind::Staircase, lo, hi - lo, x2, hi - x2});
        if (chi(v) == Tri::True)
          pieces.push_back({"entropic" + tag(v), RegionPiece::Kind::Strip, lo, hi - lo, x2, hi - x2});
        else
          pieces.push_back({"unknown" + tag(v), RegionPiece::Kind::Gap, lo, hi - lo, x2, hi - x2});
      }
      break;
    }
    case FaceType::ChenYeung: {
      for (int v = 2;; ++v) {
        double lv = std::log(static_cast<double>(v));
        if (lv > a_max + kTol) break;
        if (chi(v) == Tri::True)
          pieces.push_back({"entropic" + tag(v), RegionPiece::Kind::Ray, lv, 0, lv, a_max});
        else
          pieces.push_back({"unknown" + tag(v), RegionPiece::Kind::Gap, lv, 0, lv, a_max});
      }
      break;
    }
  }
  return pieces;
}

}  // namespace polyface
