#include <doctest.h>

#include <array>
#include <set>

#include "oracles.hpp"
#include "rstar/corpus.hpp"
#include "rstar/error.hpp"

using namespace rstar;

TEST_CASE("base ring counts") {
  // Z/n for 2..32, F2 with 2+4+8 monic polynomials, F3 with 3+9+27.
  CHECK(base_rings(64).size() == 31 + 14 + 39);
  CHECK(base_rings(256).size() == 31 + 14 + 39);
  // order <= 4: Z/2, Z/3, Z/4, F2 degree 1 (2), F2 degree 2 (4), F3 degree 1 (3)
  CHECK(base_rings(4).size() == 3 + 2 + 4 + 3);
}

TEST_CASE("corpus for max order 4 follows the rule") {
  const auto corpus = build_corpus(4);
  std::multiset<std::string> labels;
  for (const auto& r : corpus) labels.insert(r->label());
  CHECK(labels.count("Z/2") == 1);
  CHECK(labels.count("Z/4") == 1);
  CHECK(labels.count("Z/2 x Z/2") == 1);
  CHECK(labels.count("F2[x]/(x^2)") == 1);
  CHECK(labels.count("(Z/4)/(2)") == 1);
  for (const auto& r : corpus) CHECK(r->order() <= 4);
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    const bool ordered = corpus[i - 1]->order() < corpus[i]->order() ||
                         (corpus[i - 1]->order() == corpus[i]->order() && corpus[i - 1]->label() <= corpus[i]->label());
    CHECK(ordered);
  }
}

TEST_CASE("corpus is deterministic and bounded") {
  const auto a = build_corpus(64);
  const auto b = build_corpus(64);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]->label() == b[i]->label());
    CHECK(a[i]->same_tables(*b[i]));
  }
  CHECK_THROWS_AS(build_corpus(257), std::invalid_argument);
}

TEST_CASE("fingerprints") {
  CHECK(fingerprint(make_residue_ring(12)) == Fingerprint{12, 12, 4, 6, 2, 2});
  const std::array<unsigned, 3> f{1, 1, 1};
  CHECK(fingerprint(make_poly_quotient(2, f)) == Fingerprint{4, 2, 3, 2, 1, 1});
  const auto z6 = fingerprint(make_residue_ring(6));
  CHECK(z6 == Fingerprint{6, 6, 2, 4, 2, 1});
  CHECK(fingerprint(product_ring(make_residue_ring(2), make_residue_ring(3))) == z6);
}

TEST_CASE("fingerprints multiply over products") {
  const auto bases = base_rings(8);
  for (const auto& r : bases)
    for (const auto& s : bases) {
      const auto fr = fingerprint(r), fs = fingerprint(s), fp = fingerprint(product_ring(r, s));
      CHECK(fp.order == fr.order * fs.order);
      CHECK(fp.units == fr.units * fs.units);
      CHECK(fp.ideals == fr.ideals * fs.ideals);
      CHECK(fp.primes == fr.primes + fs.primes);
      CHECK(fp.nilradical_size == fr.nilradical_size * fs.nilradical_size);
      CHECK(fp.units == oracle::unit_count(*product_ring(r, s)));
    }
}
