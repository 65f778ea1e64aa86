#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rstar/element_set.hpp"

using rstar::Element;
using rstar::ElementSet;

TEST_CASE("membership across word boundaries") {
  ElementSet s;
  for (Element e : {0, 63, 64, 127, 128, 255}) s.insert(e);
  CHECK(s.size() == 6);
  CHECK(s.contains(63));
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  s.erase(64);
  CHECK_FALSE(s.contains(64));
  CHECK(s.elements() == std::vector<Element>{0, 63, 127, 128, 255});
}

TEST_CASE("set algebra agrees with std::set") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet a, b;
    std::set<Element> sa, sb;
    for (int i = 0; i < 40; ++i) {
      const auto x = static_cast<Element>(rng() % 256);
      const auto y = static_cast<Element>(rng() % 256);
      a.insert(x);
      sa.insert(x);
      b.insert(y);
      sb.insert(y);
    }
    std::vector<Element> meet, join;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(meet));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(join));
    CHECK((a & b).elements() == meet);
    CHECK((a | b).elements() == join);
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(a | b));
    CHECK(a.is_subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
  }
}

TEST_CASE("lattice order is cardinality then numeric value") {
  const auto a = ElementSet::of({0, 5});
  const auto b = ElementSet::of({0, 1, 2});
  const auto c = ElementSet::of({0, 200});
  CHECK(rstar::lattice_less(a, b));
  CHECK(rstar::lattice_less(a, c));
  CHECK_FALSE(rstar::lattice_less(c, a));
  CHECK_FALSE(rstar::lattice_less(a, a));
  CHECK(ElementSet::first_n(256).size() == 256);
  CHECK(ElementSet::first_n(0).empty());
}
