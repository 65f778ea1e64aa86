#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rstar/ideal.hpp"
#include "rstar/lattice.hpp"

namespace rstar {

inline constexpr std::size_t kDefaultStarCap = 16;
/// Largest family for which subset sweeps are allowed at all.
inline constexpr std::size_t kMaxExhaustiveCap = 30;

/// A finite family of distinct ideals of one ring. An arbitrary index set over
/// a finite lattice repeats ideals; the family keeps one copy of each and
/// counts what was dropped.
struct IdealFamily {
  RingPtr ring;
  std::vector<Ideal> members;
  std::string label;
  std::size_t duplicates_removed = 0;

  /// Deduplicates (first occurrence wins) and rejects members of other rings.
  static IdealFamily make(RingPtr ring, std::vector<Ideal> members, std::string label);
  static IdealFamily all_ideals(const IdealLattice& lattice);
  static IdealFamily primary_ideals(const IdealLattice& lattice);
  static IdealFamily prime_ideals(const IdealLattice& lattice);
};

/// x^1, x^2, ... for every element; x lies in rad(J) iff its orbit meets J.
class PowerOrbits {
 public:
  explicit PowerOrbits(const FiniteRing& ring);
  ElementSet radical_of(const ElementSet& ideal_members) const;
  const ElementSet& orbit(Element x) const { return orbits_[x]; }

 private:
  std::vector<ElementSet> orbits_;
};

enum class StarMethod { Exhaustive, Certified, Symbolic };
std::string to_string(StarMethod method);

struct StarCounterexample {
  std::vector<std::size_t> members;  // indices into the checked family
  std::vector<Element> radical_of_intersection;
  std::vector<Element> intersection_of_radicals;
};

struct StarCheckResult {
  bool satisfied = false;
  StarMethod method = StarMethod::Exhaustive;
  /// S': indices into the checked family with
  /// rad(meet of family) = meet of rad over S'.
  std::vector<std::size_t> witness_subset;
  std::vector<Element> radical_of_intersection;
  std::optional<StarCounterexample> counterexample;
  std::string certificate;
  std::size_t family_size = 0;
  /// Subfamilies swept (exhaustive) or pairs verified (certified).
  std::size_t checks = 0;
};

/// Decides the star property for R over its whole lattice. With at most `cap`
/// ideals, every nonempty subfamily F is checked for
/// rad(meet F) = meet of rad(I) over I in F. Above the cap the pairwise
/// identity is verified for all pairs and the result is certified by
/// induction over finite meets.
StarCheckResult star_check_finite(const IdealLattice& lattice, std::size_t cap = kDefaultStarCap);
StarCheckResult star_check_finite(const RingPtr& ring, std::size_t cap = kDefaultStarCap);

/// Star identity for one family; the empty family is satisfied with S' empty.
StarCheckResult star_check_family(const IdealFamily& family);

struct A2Exponents {
  bool holds = true;
  /// Least n with a^n in Q for every member Q with a in rad(Q); 0 if none
  /// exists up to |R|.
  std::vector<std::size_t> per_element;
  std::size_t uniform = 1;
  Element worst_element = 0;
  std::optional<std::size_t> worst_member;
};

/// Throws std::invalid_argument on an empty family.
A2Exponents a2_minimal_exponent(const IdealFamily& family);

struct FamilyReport {
  bool a1 = false;  // meet of the family is (0)
  bool all_primary = false;
  std::vector<std::size_t> non_primary_members;
  std::vector<Element> intersection;
  A2Exponents a2;
};

FamilyReport family_report(const IdealFamily& family);

struct A2Equivalence {
  bool a2_holds = false;
  bool radical_identity_holds = false;
  bool agree = false;
  StarMethod method = StarMethod::Exhaustive;
  std::size_t checks = 0;
  std::optional<std::vector<std::size_t>> failing_subfamily;  // family indices; lattice indices when certified
};

/// A2 against the radical identity over every nonempty subfamily; the sweep
/// is exhaustive up to `cap` members and pairwise-certified above it.
A2Equivalence a2_equiv_radical_identity(const IdealFamily& family, std::size_t cap = kDefaultStarCap);

struct ZeroDimEquivalence {
  std::size_t krull_dimension = 0;
  bool dimension_zero = false;
  bool a2_all_ideals = false;
  bool a2_primary_ideals = false;
  std::size_t uniform_all = 1;
  std::size_t uniform_primary = 1;
  bool agree = false;
};

ZeroDimEquivalence zero_dim_equivalence(const IdealLattice& lattice);

struct PrimeFamilyCondition {
  std::vector<std::size_t> primes;          // lattice indices
  std::vector<std::size_t> minimal_primes;  // lattice indices
  std::vector<Element> radical_of_intersection;
  /// Smallest subfamily (then least in index order) whose meet equals the
  /// radical of the meet of all primes; indices into `primes`.
  std::vector<std::size_t> gamma;  // lattice indices
  bool full_family_holds = false;
  bool gamma_is_minimal_primes = false;
  bool every_subfamily_holds = false;
  StarMethod subfamily_method = StarMethod::Exhaustive;
  std::size_t subfamilies_checked = 0;
};

PrimeFamilyCondition prime_family_condition(const IdealLattice& lattice, std::size_t cap = kDefaultStarCap);

}  // namespace rstar
