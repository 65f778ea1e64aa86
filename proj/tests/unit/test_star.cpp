#include <doctest.h>

#include "rstar/corpus.hpp"
#include "rstar/error.hpp"
#include "rstar/lattice.hpp"
#include "rstar/ring_spec.hpp"
#include "rstar/star.hpp"

using namespace rstar;

namespace {

// Direct evaluation of the identity for one subfamily, without PowerOrbits.
bool identity_holds(const RingPtr& ring, const std::vector<Ideal>& family) {
  Ideal meet = Ideal::unit(ring);
  Ideal rad_meet = Ideal::unit(ring);
  for (const auto& I : family) {
    meet = intersect(meet, I);
    rad_meet = intersect(rad_meet, radical(I));
  }
  return radical(meet) == rad_meet;
}

}  // namespace

TEST_CASE("Z/12 satisfies the star identity exhaustively") {
  const auto lattice = enumerate_ideals(make_residue_ring(12));
  const auto r = star_check_finite(lattice);
  CHECK(r.satisfied);
  CHECK(r.method == StarMethod::Exhaustive);
  CHECK(r.checks == 63);
  CHECK(r.family_size == 6);
  // rad of the meet of all ideals is rad(0) = (6) = (2) cap (3)
  CHECK(r.radical_of_intersection == std::vector<Element>{0, 6});
  std::vector<std::string> names;
  for (auto k : r.witness_subset) names.push_back(describe(lattice[k]));
  CHECK(names == std::vector<std::string>{"(3)", "(2)"});
}

TEST_CASE("exhaustive sweep agrees with direct subfamily evaluation") {
  for (const auto& ring : build_corpus(12)) {
    const auto lattice = enumerate_ideals(ring);
    const auto& ideals = lattice.ideals();
    const std::size_t L = ideals.size();
    if (L > 10) continue;
    for (std::uint32_t mask = 1; mask < (1u << L); ++mask) {
      std::vector<Ideal> fam;
      for (std::size_t i = 0; i < L; ++i)
        if (mask & (1u << i)) fam.push_back(ideals[i]);
      CHECK(identity_holds(ring, fam));
    }
  }
}

TEST_CASE("exhaustive and certified methods agree on the corpus") {
  for (const auto& ring : build_corpus(64)) {
    const auto lattice = enumerate_ideals(ring);
    if (lattice.size() > kDefaultStarCap) continue;
    const auto ex = star_check_finite(lattice);
    const auto ce = star_check_finite(lattice, 0);
    CHECK(ex.method == StarMethod::Exhaustive);
    CHECK(ce.method == StarMethod::Certified);
    CHECK(ex.satisfied == ce.satisfied);
    CHECK(ex.radical_of_intersection == ce.radical_of_intersection);
  }
}

TEST_CASE("cap bounds") {
  const auto z12 = make_residue_ring(12);
  CHECK_THROWS_AS(star_check_finite(z12, kMaxExhaustiveCap + 1), ResourceLimitError);
  CHECK_NOTHROW(star_check_finite(z12, kMaxExhaustiveCap));
}

TEST_CASE("families are deduplicated and the empty family is satisfied") {
  const auto z12 = make_residue_ring(12);
  const auto fam = IdealFamily::make(z12, {principal_ideal(z12, 2), principal_ideal(z12, 10), principal_ideal(z12, 3)}, "f");
  CHECK(fam.members.size() == 2);
  CHECK(fam.duplicates_removed == 1);
  CHECK(star_check_family(fam).satisfied);
  const auto empty = IdealFamily::make(z12, {}, "empty");
  const auto r = star_check_family(empty);
  CHECK(r.satisfied);
  CHECK(r.witness_subset.empty());
  CHECK(r.radical_of_intersection.size() == 12);
}

TEST_CASE("A2 exponents") {
  const auto z8 = make_residue_ring(8);
  const auto zero_family = IdealFamily::make(z8, {Ideal::zero(z8)}, "{(0)}");
  const auto a2 = a2_minimal_exponent(zero_family);
  CHECK(a2.holds);
  CHECK(a2.uniform == 3);
  CHECK(a2.worst_element == 2);

  const auto z12 = enumerate_ideals(make_residue_ring(12));
  CHECK(a2_minimal_exponent(IdealFamily::all_ideals(z12)).uniform == 2);
  CHECK_THROWS_AS(a2_minimal_exponent(IdealFamily::make(z8, {}, "empty")), std::invalid_argument);
}

TEST_CASE("family report on the primary components of (0) in Z/12") {
  const auto z12 = make_residue_ring(12);
  const auto fam = IdealFamily::make(z12, {principal_ideal(z12, 4), principal_ideal(z12, 3)}, "components");
  const auto rep = family_report(fam);
  CHECK(rep.a1);
  CHECK(rep.all_primary);
  CHECK(rep.a2.holds);
  CHECK(rep.intersection == std::vector<Element>{0});
  const auto not_primary = family_report(IdealFamily::make(z12, {principal_ideal(z12, 6)}, "(6)"));
  CHECK_FALSE(not_primary.all_primary);
  CHECK(not_primary.non_primary_members == std::vector<std::size_t>{0});
}

TEST_CASE("A2 is equivalent to the radical identity") {
  for (const auto& ring : build_corpus(32)) {
    const auto lattice = enumerate_ideals(ring);
    for (const auto& fam : {IdealFamily::all_ideals(lattice), IdealFamily::primary_ideals(lattice)}) {
      const auto eq = a2_equiv_radical_identity(fam);
      CHECK(eq.agree);
      CHECK(eq.a2_holds);
      CHECK(eq.radical_identity_holds);
    }
  }
}

TEST_CASE("zero-dimensional three-way agreement") {
  for (const auto& ring : build_corpus(64)) {
    const auto zd = zero_dim_equivalence(enumerate_ideals(ring));
    CHECK(zd.agree);
    CHECK(zd.dimension_zero);
    CHECK(zd.uniform_all <= ring->order());
    CHECK(zd.uniform_primary <= ring->order());
  }
}

TEST_CASE("prime family condition") {
  const auto lattice = enumerate_ideals(make_residue_ring(12));
  const auto pf = prime_family_condition(lattice);
  CHECK(pf.full_family_holds);
  CHECK(pf.gamma_is_minimal_primes);
  CHECK(pf.every_subfamily_holds);
  CHECK(pf.radical_of_intersection == std::vector<Element>{0, 6});
  std::vector<std::string> gamma;
  for (auto k : pf.gamma) gamma.push_back(describe(lattice[k]));
  CHECK(gamma == std::vector<std::string>{"(3)", "(2)"});

  for (const auto& ring : build_corpus(64)) {
    const auto p = prime_family_condition(enumerate_ideals(ring));
    CHECK(p.full_family_holds);
    CHECK(p.gamma_is_minimal_primes);
  }
}

TEST_CASE("power orbits reproduce radicals") {
  for (const auto& ring : build_corpus(24)) {
    const PowerOrbits orbits(*ring);
    const auto lattice = enumerate_ideals(ring);
    for (const auto& I : lattice.ideals()) CHECK(orbits.radical_of(I.members()) == radical(I).members());
  }
}

TEST_CASE("worked values") {
  const auto r = parse_ring_spec("Z/4 x Z/9");
  const auto s = star_check_finite(r);
  CHECK(s.satisfied);
  CHECK(s.method == StarMethod::Exhaustive);
  CHECK(s.checks == 511);

  const auto z12 = make_residue_ring(12);
  const auto l12 = enumerate_ideals(z12);
  const auto all = a2_minimal_exponent(IdealFamily::all_ideals(l12));
  CHECK(all.uniform == 2);
  CHECK(all.worst_element == 2);  // least element needing n = 2
  CHECK(all.per_element[6] == 2);
  const auto comps = family_report(IdealFamily::make(z12, {principal_ideal(z12, 4), principal_ideal(z12, 3)}, "c"));
  CHECK(comps.a2.uniform == 2);
  CHECK_FALSE(family_report(IdealFamily::make(z12, {principal_ideal(z12, 2)}, "(2)")).a1);

  const auto z8 = enumerate_ideals(make_residue_ring(8));
  const auto eq = a2_equiv_radical_identity(IdealFamily::all_ideals(z8));
  CHECK(eq.a2_holds);
  CHECK(eq.radical_identity_holds);

  const auto z4 = enumerate_ideals(make_residue_ring(4));
  const auto pf = prime_family_condition(z4);
  REQUIRE(pf.gamma.size() == 1);
  CHECK(describe(z4[pf.gamma[0]]) == "(2)");

  const auto zd = zero_dim_equivalence(enumerate_ideals(r));
  CHECK(zd.dimension_zero);
  CHECK(zd.a2_all_ideals);
  CHECK(zd.a2_primary_ideals);
}
