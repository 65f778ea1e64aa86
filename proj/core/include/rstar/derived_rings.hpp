#pragma once

#include <utility>

#include "rstar/finite_ring.hpp"
#include "rstar/ideal.hpp"

namespace rstar {

struct QuotientResult {
  RingPtr ring;
  RingHom projection;
};

/// R/I. Cosets are represented by their least element index and numbered in
/// increasing order of that representative.
QuotientResult quotient_ring(const Ideal& ideal);

/// { r : s*r = 0 for some s outside P }.
Ideal saturation_kernel(const Ideal& prime);

/// R_P realized as R / saturation_kernel(P); every element outside P becomes a
/// unit there. Throws std::invalid_argument if P is not prime.
QuotientResult localize_at_prime(const Ideal& prime);

/// Ideal of h.target generated by h(I).
Ideal extend_ideal(const RingHom& h, const Ideal& ideal);

/// h(I) as a set; an ideal of the target when h is surjective.
ElementSet image_set(const RingHom& h, const Ideal& ideal);

}  // namespace rstar
