#include "rstar/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "rstar/error.hpp"

namespace rstar {

IdealLattice::IdealLattice(RingPtr ring, std::vector<Ideal> ideals) : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end(),
            [](const Ideal& a, const Ideal& b) { return lattice_less(a.members(), b.members()); });
  ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (ideals_[i].ring_ptr() != ring_) throw std::invalid_argument("lattice member belongs to another ring");
    index_.emplace(ideals_[i].members(), i);
  }
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& members) const {
  if (auto it = index_.find(members); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t IdealLattice::index_of(const ElementSet& members) const {
  if (auto i = find(members)) return *i;
  throw InternalConsistencyError("ideal missing from the lattice of " + ring_->label());
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const { return index_of(ideal.members()); }

std::vector<std::size_t> IdealLattice::prime_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    if (is_prime(ideals_[i])) out.push_back(i);
  return out;
}

IdealLattice enumerate_ideals(const RingPtr& ring, std::size_t cap) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Ideal> found;
  std::vector<std::size_t> work;
  auto add = [&](const Ideal& ideal) {
    if (seen.contains(ideal.members())) return;
    if (found.size() >= cap)
      throw ResourceLimitError("ideal lattice of " + ring->label() + " exceeds cap of " + std::to_string(cap));
    seen.emplace(ideal.members(), found.size());
    work.push_back(found.size());
    found.push_back(ideal);
  };

  for (std::size_t g = 0; g < ring->order(); ++g) add(principal_ideal(ring, static_cast<Element>(g)));
  // Every ideal of a finite ring is a finite sum of principal ideals.
  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    for (std::size_t j = 0; j < found.size(); ++j) {
      if (j == i) continue;
      add(sum(found[i], found[j]));
    }
  }
  return IdealLattice(ring, std::move(found));
}

std::vector<std::size_t> radical_indices(const IdealLattice& lattice) {
  std::vector<std::size_t> out;
  out.reserve(lattice.size());
  for (const auto& ideal : lattice.ideals()) out.push_back(lattice.index_of(radical(ideal)));
  return out;
}

PrimaryDecomposition primary_decomposition(const Ideal& target, const IdealLattice& lattice) {
  if (!target.is_proper()) throw std::invalid_argument("primary decomposition requires a proper ideal");
  if (target.ring_ptr() != lattice.ring_ptr()) throw std::invalid_argument("ideal and lattice belong to different rings");

  std::vector<Ideal> components;
  for (const auto& candidate : lattice.ideals())
    if (target.is_subset_of(candidate) && is_primary(candidate)) components.push_back(candidate);

  const RingPtr& ring = lattice.ring_ptr();
  if (!(intersect(ring, components) == target))
    throw InternalConsistencyError("primary ideals containing " + describe(target) + " in " + ring->label() +
                                   " do not intersect to it");

  // One pass suffices: dropping components only enlarges the intersection of
  // the rest, so a component needed earlier stays needed.
  for (std::size_t i = 0; i < components.size();) {
    std::vector<Ideal> rest = components;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (intersect(ring, rest) == target)
      components = std::move(rest);
    else
      ++i;
  }
  return PrimaryDecomposition{target, std::move(components)};
}

bool verify_decomposition(const PrimaryDecomposition& d) {
  const RingPtr& ring = d.target.ring_ptr();
  if (!(intersect(ring, d.components) == d.target)) return false;
  for (const auto& c : d.components)
    if (!is_primary(c)) return false;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    std::vector<Ideal> rest = d.components;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (intersect(ring, rest) == d.target) return false;
  }
  return true;
}

}  // namespace rstar
