#include "rstar/derived_rings.hpp"

#include <stdexcept>
#include <vector>

namespace rstar {

namespace {

QuotientResult quotient_with_label(const Ideal& ideal, std::string label) {
  const RingPtr& source = ideal.ring_ptr();
  const FiniteRing& r = *source;
  if (!is_ideal_set(r, ideal.members())) throw std::invalid_argument("quotient requires an ideal");
  const std::size_t n = r.order();

  std::vector<Element> rep(n);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    Element least = static_cast<Element>(x);
    ideal.members().for_each([&](Element i) {
      const Element y = r.add(static_cast<Element>(x), i);
      if (y < least) least = y;
    });
    rep[x] = least;
    if (least == x) reps.push_back(least);
  }
  std::vector<Element> index_of(n, 0);
  for (std::size_t k = 0; k < reps.size(); ++k) index_of[reps[k]] = static_cast<Element>(k);

  const std::size_t m = reps.size();
  FiniteRing::Tables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  t.neg.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    t.neg[a] = index_of[rep[r.neg(reps[a])]];
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = index_of[rep[r.add(reps[a], reps[b])]];
      t.mul[a * m + b] = index_of[rep[r.mul(reps[a], reps[b])]];
    }
  }
  t.zero = index_of[rep[r.zero()]];
  t.one = index_of[rep[r.one()]];

  auto target = FiniteRing::from_tables(std::move(label), std::move(t));
  RingHom proj{source, target, std::vector<Element>(n)};
  for (std::size_t x = 0; x < n; ++x) proj.map[x] = index_of[rep[x]];
  return QuotientResult{target, std::move(proj)};
}

}  // namespace

QuotientResult quotient_ring(const Ideal& ideal) {
  return quotient_with_label(ideal, "(" + ideal.ring().label() + ")/" + describe(ideal));
}

Ideal saturation_kernel(const Ideal& prime) {
  const FiniteRing& r = prime.ring();
  const auto n = static_cast<Element>(r.order());
  ElementSet kernel;
  for (Element x = 0; x < n; ++x) {
    for (Element s = 0; s < n; ++s) {
      if (prime.contains(s)) continue;
      if (r.mul(s, x) == r.zero()) {
        kernel.insert(x);
        break;
      }
    }
  }
  return Ideal(prime.ring_ptr(), kernel);
}

QuotientResult localize_at_prime(const Ideal& prime) {
  if (!is_prime(prime)) throw std::invalid_argument("localization requires a prime ideal, got " + describe(prime));
  return quotient_with_label(saturation_kernel(prime), "(" + prime.ring().label() + ")_" + describe(prime));
}

ElementSet image_set(const RingHom& h, const Ideal& ideal) {
  ElementSet out;
  ideal.members().for_each([&](Element e) { out.insert(h(e)); });
  return out;
}

Ideal extend_ideal(const RingHom& h, const Ideal& ideal) {
  if (ideal.ring_ptr() != h.source) throw std::invalid_argument("ideal does not belong to the homomorphism's source");
  const auto gens = image_set(h, ideal).elements();
  return generate_ideal(h.target, gens);
}

}  // namespace rstar
