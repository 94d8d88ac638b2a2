#include "polyface/chi.hpp"

#include <stdexcept>

#include "polyface/galois.hpp"

namespace polyface {

Tri ChiOracle::query(const Matroid& m, int v) const {
  if (v < 2) throw std::invalid_argument("characteristic candidates start at v = 2");
  auto simple = m.simplification();
  if (simple.rank <= 1) return Tri::True;  // copies of one symbol
  if (!simple.is_uniform) return Tri::Unknown;
  int k = simple.rank, np = simple.size;
  if (k == 2 && np == 4) return (v == 2 || v == 6) ? Tri::False : Tri::True;
  if (k == np - 1) return Tri::True;  // modular-sum construction for every v
  if (k == np) return Tri::True;      // independent coordinates
  if (has_support_construction(m, v)) {
    // certify: every k columns of the generator are independent
    GaloisField gf(v);
    return mds_check(gf, mds_generator(k, np, v)) ? Tri::True : Tri::Unknown;
  }
  return Tri::Unknown;
}

bool ChiOracle::has_support_construction(const Matroid& m, int v) const {
  if (v < 2) return false;
  auto simple = m.simplification();
  if (!simple.is_uniform) return false;
  int k = simple.rank, np = simple.size;
  if (k <= 1 || k == np || k == np - 1) return true;
  return GaloisField::is_prime_power(v) && np <= v + 1;
}

std::function<Tri(int)> ChiOracle::bind(const Matroid& m) const {
  return [this, m](int v) { return query(m, v); };
}

ChiOracle::Probe ChiOracle::probe(const Matroid& m) const {
  Probe out;
  for (int v = kProbeLo; v <= kProbeHi; ++v) {
    switch (query(m, v)) {
      case Tri::True: out.members.push_back(v); break;
      case Tri::False: out.non_members.push_back(v); break;
      case Tri::Unknown: out.undetermined.push_back(v); break;
    }
  }
  return out;
}

}  // namespace polyface
