#include <doctest.h>

#include "rstar/battery.hpp"
#include "rstar/ring_spec.hpp"
#include "rstar/suite.hpp"

using namespace rstar;

namespace {

const StatementResult& statement(const RingBattery& b, const std::string& id) {
  for (const auto& s : b.statements)
    if (s.id == id) return s;
  FAIL("missing statement " << id);
  throw std::logic_error("unreachable");
}

RingPtr corrupt(const RingPtr& ring) {
  FiniteRing::Tables t;
  t.order = ring->order();
  for (Element a = 0; a < ring->order(); ++a) {
    t.neg.push_back(ring->neg(a));
    for (Element b = 0; b < ring->order(); ++b) {
      t.add.push_back(ring->add(a, b));
      t.mul.push_back(ring->mul(a, b));
    }
  }
  t.mul[2 * ring->order() + 3] = static_cast<Element>((t.mul[2 * ring->order() + 3] + 1) % ring->order());
  t.zero = ring->zero();
  t.one = ring->one();
  return FiniteRing::from_tables("corrupted " + ring->label(), t);
}

}  // namespace

TEST_CASE("Z/12 is consistent with every statement") {
  const auto b = theorem_battery(make_residue_ring(12));
  CHECK_FALSE(b.refuted());
  CHECK(b.invariants_held());
  REQUIRE(b.statements.size() == statement_ids().size());
  for (std::size_t i = 0; i < b.statements.size(); ++i) CHECK(b.statements[i].id == statement_ids()[i]);
  CHECK(statement(b, "star-domain-is-field").vacuous);
  CHECK_FALSE(statement(b, "artinian-implies-star").vacuous);
  CHECK(statement(b, "reduced-star-implies-vnr").vacuous);
}

TEST_CASE("Z/6 exercises reduced-star-implies-vnr non-vacuously") {
  const auto b = theorem_battery(make_residue_ring(6));
  CHECK_FALSE(b.refuted());
  CHECK_FALSE(statement(b, "reduced-star-implies-vnr").vacuous);
  CHECK(statement(b, "reduced-star-implies-vnr").verdict == Verdict::Consistent);
  CHECK_FALSE(statement(b, "star-injective-implies-artinian").vacuous);
}

TEST_CASE("fields exercise the domain statement") {
  const auto b = theorem_battery(parse_ring_spec("F2[x]/(x^3+x+1)"));
  CHECK_FALSE(b.refuted());
  CHECK_FALSE(statement(b, "star-domain-is-field").vacuous);
}

TEST_CASE("zero ring is consistent and flagged degenerate") {
  const auto b = theorem_battery(make_residue_ring(1));
  CHECK(b.degenerate);
  CHECK_FALSE(b.refuted());
  CHECK(b.invariants_held());
}

TEST_CASE("a corrupted multiplication table fails the axiom invariant") {
  const auto bad = corrupt(make_residue_ring(6));
  const auto b = theorem_battery(bad);
  CHECK_FALSE(b.axioms.ok);
  CHECK_FALSE(b.invariants_held());
  CHECK(b.statements.empty());
  REQUIRE_FALSE(b.invariants.front().witnesses.empty());
  CHECK_FALSE(b.invariants.front().witnesses.front().elements.empty());

  SuiteOptions opt;
  opt.rings = {make_residue_ring(4), bad};
  opt.include_pid = false;
  const auto r = run_suite(opt);
  CHECK(r.exit_code() == 1);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->find("axioms") != std::string::npos);
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("symbolic batteries") {
  for (const auto& d : {pid::Domain::integers(), pid::Domain::polynomials(2)}) {
    const auto b = pid_battery(d);
    CHECK_FALSE(b.refuted());
    CHECK(b.invariants_held());
    CHECK(b.zero_dim.consistent);
    CHECK_FALSE(b.all_primes.satisfied);
  }
}

TEST_CASE("suite on a single field") {
  SuiteOptions opt;
  opt.rings = {parse_ring_spec("Z/5")};
  const auto r = run_suite(opt);
  CHECK(r.exit_code() == 0);
  const auto j = to_json(r);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["rings"].size() == 1);
  CHECK(j["rings"][0]["degenerate"] == false);
  for (const auto& s : j["rings"][0]["statements"]) {
    CHECK(s["verdict"] == "consistent");
    if (s["id"] == "star-domain-is-field") CHECK(s["vacuous"] == false);
  }
  CHECK(j["statements"].size() == statement_ids().size());
}

TEST_CASE("suite output does not depend on the worker count") {
  SuiteOptions one;
  one.max_order = 12;
  SuiteOptions many = one;
  many.jobs = 6;
  CHECK(to_json(run_suite(one)).dump() == to_json(run_suite(many)).dump());
}
