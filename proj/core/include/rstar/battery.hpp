#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rstar/classify.hpp"
#include "rstar/corpus.hpp"
#include "rstar/finite_ring.hpp"
#include "rstar/pid.hpp"
#include "rstar/star.hpp"

namespace rstar {

enum class Verdict { Consistent, Refuted };
std::string to_string(Verdict v);

/// Outcome of one statement on one ring. Implications whose antecedent is
/// false are consistent and flagged vacuous.
struct StatementResult {
  std::string id;
  Verdict verdict = Verdict::Consistent;
  bool vacuous = false;
  std::string detail;
  std::vector<Witness> witnesses;  // nonempty when refuted
};

/// An internal check that must hold regardless of the statements.
struct InvariantResult {
  std::string id;
  bool held = true;
  std::string detail;
  std::vector<Witness> witnesses;
};

/// Statement ids in evaluation order.
const std::vector<std::string>& statement_ids();

struct BatteryOptions {
  std::size_t star_cap = kDefaultStarCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Decompositions are checked for every proper ideal up to this many ideals.
  std::size_t decomposition_lattice_limit = 64;
};

struct RingBattery {
  std::string label;
  std::size_t order = 0;
  bool degenerate = false;
  AxiomReport axioms;
  std::optional<Fingerprint> fingerprint;
  std::string star_method;
  std::vector<StatementResult> statements;
  std::vector<InvariantResult> invariants;

  bool refuted() const;
  bool invariants_held() const;
};

/// Runs every statement and invariant on one finite ring. A ring failing its
/// axioms gets only the axiom invariant.
RingBattery theorem_battery(const RingPtr& ring, const BatteryOptions& options = {});

/// Partners for the product closure check, in order; only those keeping the
/// product within 256 elements are used.
std::vector<RingPtr> product_partners();

struct PidBattery {
  pid::Domain domain;
  pid::ZeroDimWitnesses zero_dim;
  pid::PidStarResult all_primes;
  pid::PidStarResult prime_powers;
  pid::PidA2Result a2_prime_powers;
  std::vector<StatementResult> statements;
  std::vector<InvariantResult> invariants;

  bool refuted() const;
  bool invariants_held() const;
};

/// Negative cases: the statements evaluated on Z or F_p[x] from symbolic
/// certificates.
PidBattery pid_battery(const pid::Domain& domain);

}  // namespace rstar
