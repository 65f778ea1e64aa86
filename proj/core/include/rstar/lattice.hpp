#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rstar/ideal.hpp"

namespace rstar {

inline constexpr std::size_t kDefaultLatticeCap = 4096;

/// All ideals of a ring, deduplicated, in canonical order (cardinality, then
/// membership value). Index 0 is always (0) and the last index is R.
class IdealLattice {
 public:
  IdealLattice(RingPtr ring, std::vector<Ideal> ideals);

  const RingPtr& ring_ptr() const { return ring_; }
  const FiniteRing& ring() const { return *ring_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  /// Throws InternalConsistencyError if `ideal` is missing from the lattice.
  std::size_t index_of(const Ideal& ideal) const;
  std::size_t index_of(const ElementSet& members) const;

  std::size_t zero_index() const { return 0; }
  std::size_t unit_index() const { return ideals_.size() - 1; }

  /// Lattice indices of the prime ideals, in canonical order.
  std::vector<std::size_t> prime_indices() const;

 private:
  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Seeds with every principal ideal and closes under pairwise sums.
/// Throws ResourceLimitError once more than `cap` ideals are found.
IdealLattice enumerate_ideals(const RingPtr& ring, std::size_t cap = kDefaultLatticeCap);

/// radical_index[i] = lattice index of rad(lattice[i]).
std::vector<std::size_t> radical_indices(const IdealLattice& lattice);

struct PrimaryDecomposition {
  Ideal target;
  std::vector<Ideal> components;
};

/// Intersects every primary ideal containing `target`, then drops redundant
/// components in canonical lattice order. The result is irredundant but not
/// guaranteed to have the fewest components.
///
/// Throws std::invalid_argument for the unit ideal and InternalConsistencyError
/// if the primary ideals over `target` do not intersect back to it.
PrimaryDecomposition primary_decomposition(const Ideal& target, const IdealLattice& lattice);

/// Intersection equals target, all components primary, and no component can
/// be dropped.
bool verify_decomposition(const PrimaryDecomposition& decomposition);

}  // namespace rstar
