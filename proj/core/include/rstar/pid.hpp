#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rstar/star.hpp"

namespace rstar::pid {

/// Polynomial over F_p, low-to-high coefficients, no trailing zeros.
struct Poly {
  std::vector<unsigned> coeffs;
  friend bool operator==(const Poly&, const Poly&) = default;
};

using Generator = std::variant<std::uint64_t, Poly>;

/// Z, or F_p[x] for p in {2, 3, 5, 7}. All generator arithmetic goes through
/// the domain so that canonical forms (non-negative, monic) are enforced.
class Domain {
 public:
  Domain() = default;  // Z
  static Domain integers();
  static Domain polynomials(unsigned p);
  /// "Z" or "F<p>[x]".
  static Domain parse(std::string_view text);

  bool is_integers() const { return p_ == 0; }
  unsigned characteristic() const { return p_; }
  std::string name() const;

  Generator parse_generator(std::string_view text) const;
  std::string format(const Generator& g) const;

  Generator zero() const;
  Generator one() const;
  bool is_zero(const Generator& g) const;
  bool is_one(const Generator& g) const;

  Generator canonical(const Generator& g) const;
  Generator mul(const Generator& a, const Generator& b) const;
  Generator pow(const Generator& a, std::size_t n) const;
  /// a | b; 0 divides only 0.
  bool divides(const Generator& a, const Generator& b) const;
  Generator gcd(const Generator& a, const Generator& b) const;
  Generator lcm(const Generator& a, const Generator& b) const;

  /// Prime (irreducible) factors with multiplicity, in canonical order.
  /// Throws ResourceLimitError beyond the trial-division bounds.
  std::vector<std::pair<Generator, unsigned>> factor(const Generator& g) const;
  Generator squarefree_kernel(const Generator& g) const;
  bool is_prime(const Generator& g) const;
  /// Multiplicity of `prime` in nonzero g.
  unsigned valuation(const Generator& prime, const Generator& g) const;
  /// First `count` primes (monic irreducibles) in canonical order.
  std::vector<Generator> first_primes(std::size_t count) const;

  /// Canonical order: integers numerically, polynomials by degree then
  /// coefficients from the constant term up.
  bool less(const Generator& a, const Generator& b) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  explicit Domain(unsigned p) : p_(p) {}
  unsigned p_ = 0;  // 0 = integers
};

struct PIDIdeal {
  Domain domain;
  Generator generator;

  static PIDIdeal of(const Domain& d, const Generator& g) { return {d, d.canonical(g)}; }
  std::string to_string() const { return "(" + domain.format(generator) + ")"; }
  friend bool operator==(const PIDIdeal&, const PIDIdeal&) = default;
};

/// I contains J iff gen(I) divides gen(J).
bool contains(const PIDIdeal& outer, const PIDIdeal& inner);
PIDIdeal pid_radical(const PIDIdeal& ideal);
/// lcm; the empty list gives the unit ideal.
PIDIdeal pid_intersect(const std::vector<PIDIdeal>& ideals);
/// gcd; the empty list gives the zero ideal.
PIDIdeal pid_sum(const std::vector<PIDIdeal>& ideals);

enum class FamilyKind { FiniteList, AllPrimes, PrimePowers };

struct FamilySpec {
  Domain domain;
  FamilyKind kind = FamilyKind::FiniteList;
  std::vector<Generator> generators;  // FiniteList: deduplicated, nonempty
  Generator base;                     // PrimePowers

  /// "finite:2,3,5" | "all-primes" | "prime-powers:2".
  static FamilySpec parse(const Domain& domain, std::string_view text);
  static FamilySpec finite(const Domain& domain, std::vector<Generator> gens);
  static FamilySpec all_primes(const Domain& domain);
  static FamilySpec prime_powers(const Domain& domain, const Generator& p);

  std::string describe() const;
};

struct FamilyIntersection {
  PIDIdeal value;
  std::string justification;
};

FamilyIntersection family_intersection(const FamilySpec& spec);

struct PidStarResult {
  bool satisfied = false;
  StarMethod method = StarMethod::Symbolic;
  PIDIdeal radical_of_intersection;
  /// Satisfied: S'. Failed: a finite subfamily whose meet of radicals is
  /// already different from rad(meet of the family).
  std::vector<PIDIdeal> witness_subfamily;
  PIDIdeal witness_value;
  std::string certificate;
};

PidStarResult pid_star_check(const FamilySpec& spec);

struct PidA2Result {
  bool holds = false;
  std::size_t uniform_exponent = 0;  // valid when holds
  /// Refusals: pairs (n, k) with a in rad(Q_k) and a^n not in Q_k.
  std::vector<std::pair<std::size_t, std::size_t>> refutations;
  std::string certificate;
};

PidA2Result pid_a2_check(const FamilySpec& spec, const Generator& a);

struct ChainWitness {
  std::vector<PIDIdeal> chain;
  bool strictly_descending = false;
  bool all_radical = false;
};

/// The five conditions for a Noetherian domain, with the witnesses that make
/// each one false for Z and F_p[x].
struct ZeroDimWitnesses {
  Domain domain = Domain::integers();
  bool star = true;
  PidStarResult star_witness;
  bool zero_dimensional = true;
  std::vector<PIDIdeal> prime_chain;  // (0) < (p)
  bool artinian = true;
  ChainWitness descending_chain;  // (p) > (p^2) > ...
  bool pi_regular = true;
  Generator pi_witness;
  std::vector<std::size_t> pi_checked_exponents;
  std::string pi_certificate;
  bool prime_family_condition = true;
  PidStarResult prime_family_witness;
  bool dcc_radical = true;
  ChainWitness radical_chain;  // (p1) > (p1 p2) > ...
  bool consistent = false;  // all five verdicts equal
};

ZeroDimWitnesses pid_zero_dim_witnesses(const Domain& domain);

}  // namespace rstar::pid
