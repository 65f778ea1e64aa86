#pragma once

#include <cstddef>
#include <vector>

#include "rstar/finite_ring.hpp"
#include "rstar/lattice.hpp"

namespace rstar {

/// Isomorphism invariants; equal fingerprints are necessary, not sufficient,
/// for isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t characteristic = 0;
  std::size_t units = 0;
  std::size_t ideals = 0;
  std::size_t primes = 0;
  std::size_t nilradical_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const IdealLattice& lattice);
Fingerprint fingerprint(const RingPtr& ring);

/// Base rings: Z/n for 2 <= n <= min(max_order, 32), and F_p[x]/(f) for
/// p in {2,3}, every monic f of degree 1..3 with p^deg f <= max_order.
std::vector<RingPtr> base_rings(std::size_t max_order);

/// Bases, every product B_i x B_j (i <= j) of order <= max_order, and every
/// quotient of a base ring with at most 12 ideals by an ideal other than
/// (0) and R. Sorted by (order, label); no isomorphism deduplication.
/// Throws std::invalid_argument for max_order > 256.
std::vector<RingPtr> build_corpus(std::size_t max_order);

}  // namespace rstar
