#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rstar/element_set.hpp"
#include "rstar/finite_ring.hpp"

namespace rstar {

/// An ideal of a specific FiniteRing, stored as its membership set.
class Ideal {
 public:
  /// Throws std::invalid_argument if `members` is not an ideal of `ring`.
  Ideal(RingPtr ring, ElementSet members);

  /// Skips the closure check; the caller guarantees `members` is an ideal.
  static Ideal trusted(RingPtr ring, ElementSet members);
  static Ideal zero(const RingPtr& ring);
  static Ideal unit(const RingPtr& ring);

  const RingPtr& ring_ptr() const { return ring_; }
  const FiniteRing& ring() const { return *ring_; }
  const ElementSet& members() const { return members_; }

  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }
  bool is_unit() const { return members_.size() == ring_->order(); }
  bool is_proper() const { return !is_unit(); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }
  std::vector<Element> elements() const { return members_.elements(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  Ideal(Trusted, RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(members) {}

  RingPtr ring_;
  ElementSet members_;
};

struct PairWitness {
  Element a = 0;
  Element b = 0;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// True when `members` contains zero and is closed under +, negation and
/// multiplication by ring elements.
bool is_ideal_set(const FiniteRing& ring, const ElementSet& members);

/// Least ideal containing `gens`, by fixed-point closure.
Ideal generate_ideal(const RingPtr& ring, std::span<const Element> gens);
Ideal generate_ideal(const RingPtr& ring, std::initializer_list<Element> gens);

/// (g) = { r*g : r in R }.
Ideal principal_ideal(const RingPtr& ring, Element g);

/// { x : x^k in I for some 1 <= k <= |R| }.
Ideal radical(const Ideal& ideal);

/// Least k >= 1 with x^k in I, or nullopt if no power of x lies in I.
std::optional<std::size_t> membership_exponent(const Ideal& ideal, Element x);

Ideal intersect(const Ideal& a, const Ideal& b);
/// Nullary meet: an empty list yields the unit ideal of `ring`.
Ideal intersect(const RingPtr& ring, std::span<const Ideal> ideals);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);

/// Least (a, b) with ab in I, a not in I, b not in I; nullopt when no such
/// pair exists. Callers decide primality together with properness.
std::optional<PairWitness> non_prime_pair(const Ideal& ideal);
/// Least (a, b) with ab in I, a not in I, b not in rad(I).
std::optional<PairWitness> non_primary_pair(const Ideal& ideal);

bool is_prime(const Ideal& ideal);
bool is_primary(const Ideal& ideal);
/// Proper, and I + (a) = R for every a outside I.
bool is_maximal(const Ideal& ideal);
bool is_radical_ideal(const Ideal& ideal);
bool is_idempotent(const Ideal& ideal);

/// Greedy generating set: scan elements in index order, keep those not yet
/// covered. Deterministic; not necessarily of minimum size.
std::vector<Element> greedy_generators(const Ideal& ideal);

/// "(4)", "(2,3)", "(0)".
std::string describe(const Ideal& ideal);

}  // namespace rstar
