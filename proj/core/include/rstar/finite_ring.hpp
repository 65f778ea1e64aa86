#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rstar/element_set.hpp"

namespace rstar {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative ring with identity on the dense element indices
/// 0..order-1. Instances are immutable and shared through RingPtr; ideals and
/// homomorphisms refer to their ring by pointer identity.
///
/// Construction does not check the ring axioms (so that malformed tables can be
/// represented and reported); run validate_axioms() for that.
class FiniteRing {
 public:
  struct Tables {
    std::size_t order = 0;
    std::vector<Element> add;  // order * order, row-major
    std::vector<Element> mul;  // order * order, row-major
    std::vector<Element> neg;  // order
    Element zero = 0;
    Element one = 0;
  };

  /// Throws std::invalid_argument on shape errors: order outside 1..256,
  /// wrong table sizes, or entries out of range.
  static RingPtr from_tables(std::string label, Tables tables);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  bool is_zero_ring() const { return order_ == 1; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element pow(Element a, std::size_t k) const;

  ElementSet elements() const { return ElementSet::first_n(order_); }

  /// Additive order of one.
  std::size_t characteristic() const;
  bool is_unit(Element a) const;
  std::optional<Element> inverse(Element a) const;

  bool same_tables(const FiniteRing& other) const;

 private:
  FiniteRing() = default;

  std::string label_;
  std::size_t order_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  Element one_ = 0;
};

/// Z/n. Rejects n = 0 and n > 256.
RingPtr make_residue_ring(std::size_t n);

/// F_p[x]/(f) with f given low-to-high and monic. Elements are encoded as
/// c0 + c1*p + ... + c_{d-1}*p^{d-1}.
RingPtr make_poly_quotient(unsigned p, std::span<const unsigned> coeffs);

/// Componentwise ring; (a, b) is encoded as a * |right| + b.
RingPtr product_ring(const RingPtr& left, const RingPtr& right);

/// Caret rendering of a coefficient list (low-to-high), e.g. "x^2+x+1".
std::string format_poly(std::span<const unsigned> coeffs);

bool is_prime_number(std::size_t n);

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  bool is_surjective() const;
  bool is_injective() const;
};

/// First violated ring axiom, with the lexicographically least witness.
struct AxiomReport {
  bool ok = true;
  std::string axiom;               // empty when ok
  std::vector<Element> witness;    // 0..3 elements depending on the axiom

  std::string describe() const;
};

AxiomReport validate_axioms(const FiniteRing& ring);

/// Checks that h preserves add, mul, zero and one.
AxiomReport validate_hom(const RingHom& h);

}  // namespace rstar
