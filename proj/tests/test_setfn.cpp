#include <doctest.h>

#include <cmath>
#include <random>

#include "polyface/catalog.hpp"
#include "polyface/cone.hpp"
#include "polyface/constructions.hpp"
#include "polyface/distribution.hpp"
#include "oracle.hpp"

using namespace polyface;

namespace {

RankVector uniform_rank(int k, SubsetMask alpha, int n) {
  return Matroid::uniform({k, alpha, n}).rank();
}

}  // namespace

TEST_CASE("evaluate reads entries by bitmask") {
  RankVector u23 = uniform_rank(2, full_mask(3), 3);
  CHECK(u23.at(0b011) == 2);
  CHECK(u23.at(0) == 0);
  RankVector u12 = uniform_rank(1, 0b011, 3);
  CHECK(u12.at(0b100) == 0);  // element 3 is a loop
  CHECK_THROWS_AS(u23.at(8), std::out_of_range);
}

TEST_CASE("is_polymatroid matches the axioms on the stated examples") {
  SUBCASE("modular cardinality function") {
    std::vector<Rational> vals;
    for (SubsetMask a = 0; a < 8; ++a) vals.push_back(mask_size(a));
    CHECK(is_polymatroid(RankVector(3, vals)).ok);
  }
  SUBCASE("broken submodularity reports the first facet") {
    RankVector h(2, {Rational(0), Rational(1), Rational(1), Rational(3)});
    PolymatroidCheck check = is_polymatroid(h);
    CHECK_FALSE(check.ok);
    REQUIRE(check.violated.has_value());
    CHECK(check.violated->to_string() == "F(1;2|)");
  }
  SUBCASE("uniform rank functions pass") {
    CHECK(is_polymatroid(uniform_rank(2, full_mask(3), 3)).ok);
  }
}

TEST_CASE("is_polymatroid agrees with the axiom oracle on random vectors") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(-1, 4);
  int agreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 3;
    std::vector<Rational> vals(std::size_t{1} << n, Rational(0));
    for (SubsetMask a = 1; a < vals.size(); ++a) vals[a] = Rational(num(rng), 1 + trial % 2);
    RankVector h(n, vals);
    CHECK(is_polymatroid(h).ok == oracle::axioms_hold(h));
    ++agreements;
  }
  CHECK(agreements == 300);
}

TEST_CASE("is_integer_minimal") {
  RankVector u23 = uniform_rank(2, full_mask(3), 3);
  CHECK(is_integer_minimal(u23));
  CHECK_FALSE(is_integer_minimal(scaled(Rational(2), u23)));
  CHECK_FALSE(is_integer_minimal(scaled(Rational(1, 2), u23)));
  CHECK(is_integer_minimal(uniform_rank(1, 0b010, 3)));
  CHECK_FALSE(is_integer_minimal(RankVector::zero(3)));
}

TEST_CASE("modular and tight predicates") {
  CHECK(is_modular(uniform_rank(1, 0b001, 4)));
  CHECK_FALSE(is_tight(uniform_rank(1, 0b001, 4)));
  CHECK(is_tight(uniform_rank(2, full_mask(3), 3)));
  // rank-1 with a loop: not modular, yet every F(i) is tight
  RankVector u12 = uniform_rank(1, 0b011, 3);
  CHECK_FALSE(is_modular(u12));
  CHECK(is_tight(u12));
}

TEST_CASE("combine is the (a,b) embedding") {
  RankVector u23 = uniform_rank(2, full_mask(3), 3);
  RankVector u12 = uniform_rank(1, 0b011, 3);
  EntropyVector same = combine(1.0, u23, 0.0, u12);
  for (SubsetMask a = 0; a < 8; ++a) CHECK(same.at(a) == doctest::Approx(static_cast<double>(u23.at(a))));
  EntropyVector zero = combine(0.0, u23, 0.0, u12);
  for (SubsetMask a = 0; a < 8; ++a) CHECK(zero.at(a) == 0.0);
  EntropyVector mix = combine(std::log(2.0), u23, 0.3, u12);
  CHECK(mix.at(0b001) == doctest::Approx(std::log(2.0) + 0.3));
  CHECK_THROWS_AS(combine(1.0, u23, 1.0, uniform_rank(1, 1, 2)), std::invalid_argument);
}

TEST_CASE("restriction relabels onto 1..|S|") {
  RankVector u24 = uniform_rank(2, full_mask(4), 4);
  CHECK(restrict_to(u24, 0b0111) == uniform_rank(2, full_mask(3), 3));
  RankVector u12 = uniform_rank(1, 0b011, 3);
  CHECK(restrict_to(u12, 0b110) == uniform_rank(1, 0b01, 2));
  CHECK(restrict_to(u12, full_mask(3)) == u12);
}

TEST_CASE("restriction of a polymatroid stays a polymatroid") {
  for (const auto& entry : standard_catalog()) {
    if (entry.matroid.ground_size() != 4) continue;
    for (SubsetMask s = 1; s <= full_mask(4); ++s)
      CHECK(is_polymatroid(restrict_to(entry.matroid.rank(), s)).ok);
  }
}

TEST_CASE("entropy vectors satisfy the Shannon inequalities within tolerance") {
  auto parity = uniform_matroid_dist(2, 3, 2);
  CHECK(is_polymatroid_within(entropy_vector(parity)));
  auto boundary = matus_boundary_dist(Matroid::uniform({2, full_mask(3), 3}), 0b011, 2, 0.31);
  CHECK(is_polymatroid_within(entropy_vector(boundary.distribution)));
}

TEST_CASE("restriction commutes with marginalization") {
  auto d = uniform_matroid_dist(2, 4, 3);
  EntropyVector h = entropy_vector(d);
  for (SubsetMask s : {SubsetMask{0b0011}, SubsetMask{0b1010}, SubsetMask{0b1110}}) {
    EntropyVector left = restrict_to(h, s);
    EntropyVector right = entropy_vector(marginal(d, s));
    for (SubsetMask a = 0; a < left.values.size(); ++a)
      CHECK(left.at(a) == doctest::Approx(right.at(a)).epsilon(1e-9));
  }
}

TEST_CASE("polymatroid membership is scale invariant") {
  RankVector u23 = uniform_rank(2, full_mask(3), 3);
  RankVector bad(2, {Rational(0), Rational(1), Rational(1), Rational(3)});
  for (Rational c : {Rational(2), Rational(1, 3), Rational(7, 2)}) {
    CHECK(is_polymatroid(scaled(c, u23)).ok == is_polymatroid(u23).ok);
    CHECK(is_polymatroid(scaled(c, bad)).ok == is_polymatroid(bad).ok);
  }
}

TEST_CASE("modular and tight together force the zero vector") {
  for (const auto& entry : standard_catalog()) {
    const RankVector& h = entry.matroid.rank();
    if (is_modular(h) && is_tight(h)) CHECK(h.is_zero());
  }
  RankVector zero = RankVector::zero(3);
  CHECK(is_modular(zero));
  CHECK(is_tight(zero));
}

TEST_CASE("relabel permutes coordinates consistently") {
  RankVector u12 = uniform_rank(1, 0b011, 3);
  RankVector relabeled = relabel(u12, {2, 3, 1});  // 1->2, 2->3, 3->1
  CHECK(relabeled == uniform_rank(1, 0b110, 3));
  CHECK_THROWS_AS(relabel(u12, {1, 1, 2}), std::invalid_argument);
}
