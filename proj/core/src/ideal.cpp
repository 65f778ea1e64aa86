#include "rstar/ideal.hpp"

#include <sstream>
#include <stdexcept>

namespace rstar {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring_ptr() != b.ring_ptr()) throw std::invalid_argument("ideals belong to different rings");
}

}  // namespace

Ideal::Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(members) {
  if (!ring_) throw std::invalid_argument("ideal requires a ring");
  if (!is_ideal_set(*ring_, members_)) throw std::invalid_argument("membership set is not an ideal of " + ring_->label());
}

Ideal Ideal::trusted(RingPtr ring, ElementSet members) { return Ideal(Trusted{}, std::move(ring), members); }

Ideal Ideal::zero(const RingPtr& ring) { return trusted(ring, ElementSet::of({ring->zero()})); }

Ideal Ideal::unit(const RingPtr& ring) { return trusted(ring, ring->elements()); }

bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
  if (!s.is_subset_of(r.elements())) return false;
  if (!s.contains(r.zero())) return false;
  bool ok = true;
  s.for_each([&](Element a) {
    if (!ok) return;
    if (!s.contains(r.neg(a))) {
      ok = false;
      return;
    }
    s.for_each([&](Element b) {
      if (ok && !s.contains(r.add(a, b))) ok = false;
    });
    for (std::size_t x = 0; ok && x < r.order(); ++x)
      if (!s.contains(r.mul(static_cast<Element>(x), a))) ok = false;
  });
  return ok;
}

Ideal generate_ideal(const RingPtr& ring, std::span<const Element> gens) {
  const FiniteRing& r = *ring;
  ElementSet members = ElementSet::of({r.zero()});
  std::vector<Element> work;
  auto push = [&](Element e) {
    if (!members.contains(e)) {
      members.insert(e);
      work.push_back(e);
    }
  };
  for (auto g : gens) {
    if (g >= r.order()) throw std::invalid_argument("generator " + std::to_string(g) + " is not an element of " + r.label());
    push(g);
  }
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    push(r.neg(x));
    for (std::size_t y = 0; y < r.order(); ++y) push(r.mul(static_cast<Element>(y), x));
    const ElementSet snapshot = members;
    snapshot.for_each([&](Element y) { push(r.add(x, y)); });
  }
  return Ideal::trusted(ring, members);
}

Ideal generate_ideal(const RingPtr& ring, std::initializer_list<Element> gens) {
  return generate_ideal(ring, std::span<const Element>(gens.begin(), gens.size()));
}

Ideal principal_ideal(const RingPtr& ring, Element g) {
  ElementSet members;
  for (std::size_t r = 0; r < ring->order(); ++r) members.insert(ring->mul(static_cast<Element>(r), g));
  return Ideal::trusted(ring, members);
}

std::optional<std::size_t> membership_exponent(const Ideal& ideal, Element x) {
  const FiniteRing& r = ideal.ring();
  ElementSet seen;
  Element power = x;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (ideal.contains(power)) return k;
    if (seen.contains(power)) break;  // the power sequence has entered its cycle
    seen.insert(power);
    power = r.mul(power, x);
  }
  return std::nullopt;
}

Ideal radical(const Ideal& ideal) {
  ElementSet members;
  for (std::size_t x = 0; x < ideal.ring().order(); ++x)
    if (membership_exponent(ideal, static_cast<Element>(x))) members.insert(static_cast<Element>(x));
  return Ideal::trusted(ideal.ring_ptr(), members);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal::trusted(a.ring_ptr(), a.members() & b.members());
}

Ideal intersect(const RingPtr& ring, std::span<const Ideal> ideals) {
  ElementSet acc = ring->elements();
  for (const auto& i : ideals) {
    if (i.ring_ptr() != ring) throw std::invalid_argument("ideals belong to different rings");
    acc &= i.members();
  }
  return Ideal::trusted(ring, acc);
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = a.ring();
  // a + b is the union of the cosets a + y for y in b.
  ElementSet out = a.members();
  b.members().for_each([&](Element y) {
    if (out.contains(y)) return;
    a.members().for_each([&](Element x) { out.insert(r.add(x, y)); });
  });
  return Ideal::trusted(a.ring_ptr(), out);
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& r = a.ring();
  ElementSet products;
  a.members().for_each([&](Element x) { b.members().for_each([&](Element y) { products.insert(r.mul(x, y)); }); });
  const auto gens = products.elements();
  return generate_ideal(a.ring_ptr(), gens);
}

std::optional<PairWitness> non_prime_pair(const Ideal& ideal) {
  const FiniteRing& r = ideal.ring();
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Element b = 0; b < n; ++b)
      if (!ideal.contains(b) && ideal.contains(r.mul(a, b))) return PairWitness{a, b};
  }
  return std::nullopt;
}

std::optional<PairWitness> non_primary_pair(const Ideal& ideal) {
  const FiniteRing& r = ideal.ring();
  const Ideal rad = radical(ideal);
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Element b = 0; b < n; ++b)
      if (!rad.contains(b) && ideal.contains(r.mul(a, b))) return PairWitness{a, b};
  }
  return std::nullopt;
}

bool is_prime(const Ideal& ideal) { return ideal.is_proper() && !non_prime_pair(ideal); }

bool is_primary(const Ideal& ideal) { return ideal.is_proper() && !non_primary_pair(ideal); }

bool is_maximal(const Ideal& ideal) {
  if (!ideal.is_proper()) return false;
  const auto& ring = ideal.ring_ptr();
  for (std::size_t a = 0; a < ring->order(); ++a) {
    if (ideal.contains(static_cast<Element>(a))) continue;
    if (!sum(ideal, principal_ideal(ring, static_cast<Element>(a))).is_unit()) return false;
  }
  return true;
}

bool is_radical_ideal(const Ideal& ideal) { return radical(ideal) == ideal; }

bool is_idempotent(const Ideal& ideal) { return product(ideal, ideal) == ideal; }

std::vector<Element> greedy_generators(const Ideal& ideal) {
  std::vector<Element> gens;
  Ideal covered = Ideal::zero(ideal.ring_ptr());
  ideal.members().for_each([&](Element e) {
    if (covered.contains(e)) return;
    gens.push_back(e);
    covered = sum(covered, principal_ideal(ideal.ring_ptr(), e));
  });
  return gens;
}

std::string describe(const Ideal& ideal) {
  const auto gens = greedy_generators(ideal);
  std::ostringstream out;
  out << '(';
  if (gens.empty()) out << ideal.ring().zero();
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
  out << ')';
  return out.str();
}

}  // namespace rstar
