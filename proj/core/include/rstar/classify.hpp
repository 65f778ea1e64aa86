#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rstar/finite_ring.hpp"
#include "rstar/ideal.hpp"
#include "rstar/lattice.hpp"

namespace rstar {

/// Evidence for a predicate that came out false. Elements and ideals are in
/// canonical order; ideals are given as sorted member lists.
struct Witness {
  std::string predicate;
  std::vector<Element> elements;
  std::vector<std::vector<Element>> ideals;
  std::string note;
};

struct ElementVerdict {
  bool holds = true;
  std::optional<Element> witness;
};

struct PiRegularity {
  bool holds = true;
  std::optional<Element> witness;
  /// Least n with a^n = (a^n)^2 a' for some a'; 0 where none exists.
  std::vector<std::size_t> minimal_exponent;
};

struct RadicalInjectivity {
  bool holds = true;
  /// Lattice indices of the least pair of distinct ideals with equal radicals.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

struct DccReport {
  bool holds = true;
  std::size_t radical_ideal_count = 0;
  /// Strict inclusions in the longest descending chain of radical ideals.
  std::size_t longest_chain = 0;
};

/// The five conditions (i) VNR, (ii) zero-dimensional and reduced,
/// (iii) R_P a field for each prime P, (iv) every ideal radical,
/// (v) every ideal idempotent, each evaluated on its own.
struct VnrEquivalence {
  std::array<bool, 5> conditions{};
  bool agree = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_disagreement;
  std::optional<std::size_t> non_field_localization;  // lattice index of P for (iii)
  std::optional<std::size_t> non_radical_ideal;       // lattice index for (iv)
  std::optional<std::size_t> non_idempotent_ideal;    // lattice index for (v)
};

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  bool degenerate = false;  // zero ring
  bool is_field = false;
  bool is_domain = false;
  bool is_reduced = false;
  bool is_vnr = false;
  bool is_pi_regular = false;
  bool radical_injective = false;
  bool dcc_radical_ideals = false;
  std::size_t krull_dimension = 0;
  Ideal nilradical;
  std::vector<Witness> witnesses;
};

Ideal nilradical(const RingPtr& ring);

/// Least (a, b), both nonzero, with ab = 0.
std::optional<PairWitness> zero_divisor_pair(const FiniteRing& ring);
bool is_domain(const FiniteRing& ring);
/// Least nonzero non-unit, if any.
std::optional<Element> non_unit(const FiniteRing& ring);
bool is_field(const FiniteRing& ring);
bool is_reduced(const RingPtr& ring);

/// For all x there is y with x^2 y = x; the witness is the least failing x.
ElementVerdict is_vnr(const FiniteRing& ring);
/// Exponents are searched up to |R|.
PiRegularity pi_regularity(const FiniteRing& ring);

/// Longest strict chain of primes, counted in inclusions. The zero ring, which
/// has no primes, reports 0.
std::size_t krull_dimension(const IdealLattice& lattice);
RadicalInjectivity radical_injective(const IdealLattice& lattice);
DccReport dcc_radical_ideals(const IdealLattice& lattice);
/// Longest strictly descending chain over the full lattice (Artinian check).
std::size_t longest_descending_chain(const IdealLattice& lattice);

VnrEquivalence vnr_equivalence_report(const IdealLattice& lattice);

ClassificationReport classify(const IdealLattice& lattice);

}  // namespace rstar
