#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "rstar/classify.hpp"
#include "rstar/corpus.hpp"
#include "rstar/lattice.hpp"
#include "rstar/ring_spec.hpp"

using namespace rstar;

namespace {

ClassificationReport report(const char* spec) { return classify(enumerate_ideals(parse_ring_spec(spec))); }

bool all_equal(const std::array<bool, 5>& c, bool v) {
  for (bool b : c)
    if (b != v) return false;
  return true;
}

}  // namespace

TEST_CASE("Z/6 is von Neumann regular") {
  const auto r = report("Z/6");
  CHECK(r.is_vnr);
  CHECK(r.is_reduced);
  CHECK_FALSE(r.is_domain);
  CHECK(r.radical_injective);
  const auto v = vnr_equivalence_report(enumerate_ideals(make_residue_ring(6)));
  CHECK(v.agree);
  CHECK(all_equal(v.conditions, true));
}

TEST_CASE("Z/4 fails all five VNR conditions") {
  const auto lattice = enumerate_ideals(make_residue_ring(4));
  const auto v = vnr_equivalence_report(lattice);
  CHECK(v.agree);
  CHECK(all_equal(v.conditions, false));
  REQUIRE(v.non_field_localization.has_value());
  CHECK(describe(lattice[*v.non_field_localization]) == "(2)");
  const auto vnr = is_vnr(lattice.ring());
  CHECK_FALSE(vnr.holds);
  CHECK(vnr.witness == Element{2});
  const auto r = classify(lattice);
  CHECK(r.is_pi_regular);
  CHECK(r.krull_dimension == 0);
  CHECK(r.nilradical.elements() == std::vector<Element>{0, 2});
}

TEST_CASE("fields") {
  for (const char* spec : {"Z/2", "Z/31", "F2[x]/(x^2+x+1)", "F3[x]/(x^2+1)", "F2[x]/(x^3+x+1)"}) {
    const auto r = report(spec);
    CHECK_MESSAGE(r.is_field, spec);
    CHECK(r.is_domain);
    CHECK(r.is_vnr);
    CHECK(r.witnesses.empty());
  }
  CHECK_FALSE(report("F2[x]/(x^2+1)").is_field);
}

TEST_CASE("finite domains are fields and units match the brute-force count") {
  for (const auto& ring : build_corpus(64)) {
    CHECK(is_field(*ring) == (is_domain(*ring) && ring->order() > 1));
    const auto nu = non_unit(*ring);
    CHECK(nu.has_value() == (oracle::unit_count(*ring) + 1 < ring->order()));
  }
}

TEST_CASE("pi-regularity and dimension over the corpus") {
  for (const auto& ring : build_corpus(32)) {
    const auto lattice = enumerate_ideals(ring);
    const auto pi = pi_regularity(*ring);
    CHECK(pi.holds);
    for (std::size_t a = 0; a < pi.minimal_exponent.size(); ++a) {
      const std::size_t n = pi.minimal_exponent[a];
      CHECK(n >= 1);
      CHECK(n <= ring->order());
    }
    CHECK(krull_dimension(lattice) == 0);
    CHECK(dcc_radical_ideals(lattice).holds);
    const auto v = vnr_equivalence_report(lattice);
    CHECK_MESSAGE(v.agree, ring->label());
    if (is_vnr(*ring).holds) CHECK(radical_injective(lattice).holds);
  }
}

TEST_CASE("radical ideal sublattice of Z/12") {
  const auto lattice = enumerate_ideals(make_residue_ring(12));
  const auto d = dcc_radical_ideals(lattice);
  CHECK(d.holds);
  CHECK(d.radical_ideal_count == 4);
  CHECK(longest_descending_chain(lattice) == 3);  // (1) > (2) > (4) > (0)
  const auto inj = radical_injective(lattice);
  CHECK_FALSE(inj.holds);
  REQUIRE(inj.collision.has_value());
}

TEST_CASE("zero ring is degenerate") {
  const auto r = report("Z/1");
  CHECK(r.degenerate);
  CHECK_FALSE(r.is_field);
  CHECK_FALSE(r.is_domain);
  CHECK(r.krull_dimension == 0);
}

TEST_CASE("zero-divisor witnesses are least") {
  const auto zd = zero_divisor_pair(*make_residue_ring(12));
  REQUIRE(zd.has_value());
  CHECK(zd->a == 2);
  CHECK(zd->b == 6);
  CHECK(non_unit(*make_residue_ring(12)) == Element{2});
}

TEST_CASE("pi-regular exponents and radical collisions") {
  const auto pi = pi_regularity(*make_residue_ring(12));
  CHECK(pi.minimal_exponent[2] == 2);
  const auto z4 = enumerate_ideals(make_residue_ring(4));
  const auto inj = radical_injective(z4);
  REQUIRE(inj.collision.has_value());
  CHECK(describe(z4[inj.collision->first]) == "(0)");
  CHECK(describe(z4[inj.collision->second]) == "(2)");
  CHECK(radical_injective(enumerate_ideals(make_residue_ring(6))).holds);
  CHECK(nilradical(make_residue_ring(12)).elements() == std::vector<Element>{0, 6});
  CHECK(nilradical(make_residue_ring(6)).is_zero());
  CHECK(krull_dimension(enumerate_ideals(parse_ring_spec("Z/4 x Z/9"))) == 0);
}
