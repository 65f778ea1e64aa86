#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "rstar/finite_ring.hpp"

using namespace rstar;

namespace {

FiniteRing::Tables tables_of(const FiniteRing& r) {
  FiniteRing::Tables t;
  t.order = r.order();
  for (Element a = 0; a < r.order(); ++a) {
    t.neg.push_back(r.neg(a));
    for (Element b = 0; b < r.order(); ++b) {
      t.add.push_back(r.add(a, b));
      t.mul.push_back(r.mul(a, b));
    }
  }
  t.zero = r.zero();
  t.one = r.one();
  return t;
}

}  // namespace

TEST_CASE("residue rings") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto r = make_residue_ring(n);
    CHECK(r->order() == n);
    CHECK(validate_axioms(*r).ok);
    CHECK(r->characteristic() == n);
    CHECK(oracle::unit_count(*r) == oracle::euler_phi(static_cast<unsigned>(n)));
    for (Element a = 0; a < n; ++a) CHECK(r->is_unit(a) == (std::gcd<unsigned>(a, n) == 1));
  }
  CHECK(make_residue_ring(12)->label() == "Z/12");
  CHECK_THROWS_AS(make_residue_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_residue_ring(257), std::invalid_argument);
}

TEST_CASE("polynomial quotients") {
  const std::array<unsigned, 3> f{1, 1, 1};  // x^2+x+1
  const auto gf4 = make_poly_quotient(2, f);
  CHECK(gf4->order() == 4);
  CHECK(gf4->label() == "F2[x]/(x^2+x+1)");
  CHECK(validate_axioms(*gf4).ok);
  CHECK(gf4->characteristic() == 2);
  for (Element a = 1; a < 4; ++a) CHECK(gf4->is_unit(a));
  // x * x = x + 1: x encodes as 2, x+1 as 3.
  CHECK(gf4->mul(2, 2) == 3);

  const std::array<unsigned, 4> g{0, 0, 0, 1};  // x^3 over F3
  const auto r = make_poly_quotient(3, g);
  CHECK(r->order() == 27);
  CHECK(validate_axioms(*r).ok);
  CHECK(r->pow(3, 3) == 0);  // x^3 = 0
  CHECK(oracle::unit_count(*r) == 18);

  const std::array<unsigned, 2> not_monic{1, 2};
  CHECK_THROWS_AS(make_poly_quotient(3, not_monic), std::invalid_argument);
  CHECK_THROWS_AS(make_poly_quotient(4, f), std::invalid_argument);
}

TEST_CASE("product rings") {
  const auto z2 = make_residue_ring(2);
  const auto z3 = make_residue_ring(3);
  const auto p = product_ring(z2, z3);
  CHECK(p->order() == 6);
  CHECK(p->label() == "Z/2 x Z/3");
  CHECK(validate_axioms(*p).ok);
  CHECK(p->one() == 1 * 3 + 1);
  // (1,2) * (1,2) = (1,1)
  CHECK(p->mul(5, 5) == 4);
  CHECK(oracle::unit_count(*p) == 2);
  CHECK(p->characteristic() == 6);
  CHECK_THROWS_AS(product_ring(make_residue_ring(32), make_residue_ring(9)), std::invalid_argument);
}

TEST_CASE("axiom validation reports the least witness") {
  const auto z4 = make_residue_ring(4);
  auto t = tables_of(*z4);
  t.mul[2 * 4 + 3] = 1;  // 2*3 := 1, breaks commutativity (3*2 = 2)
  const auto bad = FiniteRing::from_tables("corrupt", t);
  const auto rep = validate_axioms(*bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.axiom.empty());
  CHECK_FALSE(rep.witness.empty());
  CHECK(rep.describe().find(rep.axiom) != std::string::npos);

  auto u = tables_of(*z4);
  u.one = 2;
  CHECK_FALSE(validate_axioms(*FiniteRing::from_tables("bad one", u)).ok);

  auto v = tables_of(*z4);
  v.add.pop_back();
  CHECK_THROWS_AS(FiniteRing::from_tables("short", v), std::invalid_argument);
  auto w = tables_of(*z4);
  w.mul[0] = 9;
  CHECK_THROWS_AS(FiniteRing::from_tables("range", w), std::invalid_argument);
}

TEST_CASE("zero ring") {
  const auto z1 = make_residue_ring(1);
  CHECK(z1->is_zero_ring());
  CHECK(validate_axioms(*z1).ok);
  CHECK(z1->one() == z1->zero());
}

TEST_CASE("homomorphisms") {
  const auto z12 = make_residue_ring(12);
  const auto z4 = make_residue_ring(4);
  RingHom h{z12, z4, {}};
  for (Element a = 0; a < 12; ++a) h.map.push_back(a % 4);
  CHECK(validate_hom(h).ok);
  CHECK(h.is_surjective());
  CHECK_FALSE(h.is_injective());
  RingHom bad{z12, z4, std::vector<Element>(12, 0)};
  CHECK_FALSE(validate_hom(bad).ok);
}

TEST_CASE("format_poly and primality helper") {
  const std::array<unsigned, 3> f{1, 0, 2};
  CHECK(format_poly(f) == "2x^2+1");
  const std::array<unsigned, 2> g{0, 1};
  CHECK(format_poly(g) == "x");
  CHECK(is_prime_number(2));
  CHECK(is_prime_number(31));
  CHECK_FALSE(is_prime_number(1));
  CHECK_FALSE(is_prime_number(33));
}
