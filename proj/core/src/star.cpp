#include "rstar/star.hpp"

#include <functional>
#include <stdexcept>

#include "rstar/classify.hpp"
#include "rstar/error.hpp"

namespace rstar {

namespace {

ElementSet meet_of(const FiniteRing& ring, const std::vector<ElementSet>& sets, const std::vector<std::size_t>& pick) {
  ElementSet acc = ring.elements();
  for (auto i : pick) acc &= sets[i];
  return acc;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

/// Depth-first sweep over every nonempty subfamily in lexicographic order of
/// member indices. `check(meet, radical_meet)` returns false to stop.
class SubfamilySweep {
 public:
  using Check = std::function<bool(const ElementSet& meet, const ElementSet& radical_meet)>;

  SubfamilySweep(const FiniteRing& ring, const std::vector<ElementSet>& members, const std::vector<ElementSet>& radicals,
                 Check check)
      : ring_(ring), members_(members), radicals_(radicals), check_(std::move(check)) {}

  /// Returns the first failing subfamily, if any.
  std::optional<std::vector<std::size_t>> run() {
    descend(0, ring_.elements(), ring_.elements());
    return failure_;
  }
  std::size_t visited() const { return visited_; }

 private:
  void descend(std::size_t start, const ElementSet& meet, const ElementSet& radical_meet) {
    for (std::size_t i = start; i < members_.size() && !failure_; ++i) {
      chosen_.push_back(i);
      const ElementSet m = meet & members_[i];
      const ElementSet rm = radical_meet & radicals_[i];
      ++visited_;
      if (!check_(m, rm))
        failure_ = chosen_;
      else
        descend(i + 1, m, rm);
      chosen_.pop_back();
    }
  }

  const FiniteRing& ring_;
  const std::vector<ElementSet>& members_;
  const std::vector<ElementSet>& radicals_;
  Check check_;
  std::vector<std::size_t> chosen_;
  std::size_t visited_ = 0;
  std::optional<std::vector<std::size_t>> failure_;
};

/// rad(I cap J) = rad(I) cap rad(J) for every pair of lattice ideals; returns
/// the first failing pair.
std::optional<std::pair<std::size_t, std::size_t>> pairwise_identity(const IdealLattice& lattice, std::size_t& checks) {
  std::vector<Ideal> rads;
  rads.reserve(lattice.size());
  for (const auto& i : lattice.ideals()) rads.push_back(radical(i));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i; j < lattice.size(); ++j) {
      ++checks;
      if (!(radical(intersect(lattice[i], lattice[j])) == intersect(rads[i], rads[j]))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

void require_cap(std::size_t cap) {
  if (cap > kMaxExhaustiveCap)
    throw ResourceLimitError("exhaustive cap " + std::to_string(cap) + " exceeds " + std::to_string(kMaxExhaustiveCap));
}

/// Greedy S': drop members in index order while the meet of the remaining
/// radicals still equals `target`.
std::vector<std::size_t> prune_witness(const FiniteRing& ring, const std::vector<ElementSet>& radicals,
                                       const ElementSet& target) {
  std::vector<std::size_t> keep = iota(radicals.size());
  for (std::size_t pos = 0; pos < keep.size();) {
    std::vector<std::size_t> rest = keep;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    if (meet_of(ring, radicals, rest) == target)
      keep = std::move(rest);
    else
      ++pos;
  }
  return keep;
}

std::vector<ElementSet> member_sets(const IdealFamily& f) {
  std::vector<ElementSet> out;
  for (const auto& m : f.members) out.push_back(m.members());
  return out;
}

std::vector<ElementSet> radical_sets(const IdealFamily& f) {
  std::vector<ElementSet> out;
  for (const auto& m : f.members) out.push_back(radical(m).members());
  return out;
}

}  // namespace

IdealFamily IdealFamily::make(RingPtr ring, std::vector<Ideal> members, std::string label) {
  IdealFamily f{std::move(ring), {}, std::move(label), 0};
  for (auto& m : members) {
    if (m.ring_ptr() != f.ring) throw std::invalid_argument("family member belongs to another ring");
    bool dup = false;
    for (const auto& kept : f.members) dup = dup || kept == m;
    if (dup)
      ++f.duplicates_removed;
    else
      f.members.push_back(std::move(m));
  }
  return f;
}

IdealFamily IdealFamily::all_ideals(const IdealLattice& lattice) {
  return make(lattice.ring_ptr(), lattice.ideals(), "all ideals");
}

IdealFamily IdealFamily::primary_ideals(const IdealLattice& lattice) {
  std::vector<Ideal> members;
  for (const auto& i : lattice.ideals())
    if (is_primary(i)) members.push_back(i);
  return make(lattice.ring_ptr(), std::move(members), "primary ideals");
}

IdealFamily IdealFamily::prime_ideals(const IdealLattice& lattice) {
  std::vector<Ideal> members;
  for (auto i : lattice.prime_indices()) members.push_back(lattice[i]);
  return make(lattice.ring_ptr(), std::move(members), "prime ideals");
}

PowerOrbits::PowerOrbits(const FiniteRing& ring) : orbits_(ring.order()) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    Element p = static_cast<Element>(x);
    while (!orbits_[x].contains(p)) {
      orbits_[x].insert(p);
      p = ring.mul(p, static_cast<Element>(x));
    }
  }
}

ElementSet PowerOrbits::radical_of(const ElementSet& members) const {
  ElementSet out;
  for (std::size_t x = 0; x < orbits_.size(); ++x)
    if (!(orbits_[x] & members).empty()) out.insert(static_cast<Element>(x));
  return out;
}

std::string to_string(StarMethod m) {
  switch (m) {
    case StarMethod::Exhaustive: return "exhaustive";
    case StarMethod::Certified: return "certified";
    case StarMethod::Symbolic: return "symbolic";
  }
  return "unknown";
}

StarCheckResult star_check_finite(const IdealLattice& lattice, std::size_t cap) {
  require_cap(cap);
  const FiniteRing& ring = lattice.ring();
  const auto family = IdealFamily::all_ideals(lattice);
  const auto members = member_sets(family);
  const auto radicals = radical_sets(family);

  StarCheckResult out;
  out.family_size = members.size();
  if (members.size() <= cap) {
    out.method = StarMethod::Exhaustive;
    const PowerOrbits orbits(ring);
    SubfamilySweep sweep(ring, members, radicals, [&](const ElementSet& meet, const ElementSet& radical_meet) {
      return orbits.radical_of(meet) == radical_meet;
    });
    const auto failure = sweep.run();
    out.checks = sweep.visited();
    if (failure) {
      const ElementSet meet = meet_of(ring, members, *failure);
      out.counterexample = StarCounterexample{*failure, orbits.radical_of(meet).elements(),
                                              meet_of(ring, radicals, *failure).elements()};
    }
    out.certificate = "all " + std::to_string(out.checks) + " nonempty subfamilies of the " +
                      std::to_string(members.size()) + "-ideal lattice satisfy rad(meet F) = meet of rad(I), I in F";
  } else {
    out.method = StarMethod::Certified;
    std::size_t checks = 0;
    const auto bad = pairwise_identity(lattice, checks);
    out.checks = checks;
    if (bad) {
      const std::vector<std::size_t> pick{bad->first, bad->second};
      out.counterexample = StarCounterexample{
          pick, radical(intersect(lattice[bad->first], lattice[bad->second])).elements(),
          meet_of(ring, radicals, pick).elements()};
    }
    out.certificate = "finite lattice + pairwise radical identity (" + std::to_string(checks) +
                      " pairs); every family reduces to its distinct members and finite meets";
  }
  out.satisfied = !out.counterexample.has_value();
  const ElementSet target = radical(Ideal::trusted(lattice.ring_ptr(), meet_of(ring, members, iota(members.size())))).members();
  out.radical_of_intersection = target.elements();
  if (out.satisfied) out.witness_subset = prune_witness(ring, radicals, target);
  return out;
}

StarCheckResult star_check_finite(const RingPtr& ring, std::size_t cap) {
  return star_check_finite(enumerate_ideals(ring), cap);
}

StarCheckResult star_check_family(const IdealFamily& family) {
  const FiniteRing& ring = *family.ring;
  const auto members = member_sets(family);
  const auto radicals = radical_sets(family);
  const auto all = iota(members.size());
  const ElementSet target = radical(Ideal::trusted(family.ring, meet_of(ring, members, all))).members();

  StarCheckResult out;
  out.method = StarMethod::Exhaustive;
  out.family_size = members.size();
  out.checks = 1;
  out.radical_of_intersection = target.elements();
  out.satisfied = meet_of(ring, radicals, all) == target;
  if (out.satisfied) {
    out.witness_subset = prune_witness(ring, radicals, target);
    out.certificate = "finite family: rad(meet) equals the meet of member radicals";
    if (family.duplicates_removed > 0)
      out.certificate += " (" + std::to_string(family.duplicates_removed) + " repeated members collapsed)";
  } else {
    out.counterexample = StarCounterexample{all, target.elements(), meet_of(ring, radicals, all).elements()};
  }
  return out;
}

A2Exponents a2_minimal_exponent(const IdealFamily& family) {
  if (family.members.empty()) throw std::invalid_argument("A2 exponent requires a nonempty family");
  const FiniteRing& ring = *family.ring;
  std::vector<Ideal> rads;
  for (const auto& m : family.members) rads.push_back(radical(m));

  A2Exponents out;
  out.per_element.assign(ring.order(), 1);
  out.uniform = 1;
  for (std::size_t a = 0; a < ring.order(); ++a) {
    const auto x = static_cast<Element>(a);
    std::size_t need = 1;
    std::optional<std::size_t> hardest;
    for (std::size_t q = 0; q < family.members.size(); ++q) {
      if (!rads[q].contains(x)) continue;
      const auto k = membership_exponent(family.members[q], x);
      if (!k) {
        need = 0;
        break;
      }
      if (*k > need) {
        need = *k;
        hardest = q;
      }
    }
    out.per_element[a] = need;
    if (need == 0) {
      if (out.holds) out.worst_element = x;
      out.holds = false;
      continue;
    }
    if (need > out.uniform) {
      out.uniform = need;
      out.worst_element = x;
      out.worst_member = hardest;
    }
  }
  return out;
}

FamilyReport family_report(const IdealFamily& family) {
  FamilyReport out;
  const auto members = member_sets(family);
  const ElementSet meet = meet_of(*family.ring, members, iota(members.size()));
  out.intersection = meet.elements();
  out.a1 = meet.size() == 1;
  out.all_primary = true;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (!is_primary(family.members[i])) {
      out.all_primary = false;
      out.non_primary_members.push_back(i);
    }
  }
  if (!family.members.empty()) out.a2 = a2_minimal_exponent(family);
  return out;
}

A2Equivalence a2_equiv_radical_identity(const IdealFamily& family, std::size_t cap) {
  require_cap(cap);
  A2Equivalence out;
  out.a2_holds = family.members.empty() || a2_minimal_exponent(family).holds;

  const FiniteRing& ring = *family.ring;
  const auto members = member_sets(family);
  const auto radicals = radical_sets(family);
  if (members.size() <= cap) {
    out.method = StarMethod::Exhaustive;
    const PowerOrbits orbits(ring);
    SubfamilySweep sweep(ring, members, radicals, [&](const ElementSet& meet, const ElementSet& radical_meet) {
      return orbits.radical_of(meet) == radical_meet;
    });
    out.failing_subfamily = sweep.run();
    out.checks = sweep.visited();
  } else {
    // Meets of subfamilies are ideals of R, so the identity on all lattice
    // pairs covers every finite subfamily by induction.
    out.method = StarMethod::Certified;
    std::size_t checks = 0;
    if (auto bad = pairwise_identity(enumerate_ideals(family.ring), checks))
      out.failing_subfamily = std::vector<std::size_t>{bad->first, bad->second};  // lattice indices
    out.checks = checks;
  }
  out.radical_identity_holds = !out.failing_subfamily.has_value();
  out.agree = out.a2_holds == out.radical_identity_holds;
  return out;
}

ZeroDimEquivalence zero_dim_equivalence(const IdealLattice& lattice) {
  ZeroDimEquivalence out;
  out.krull_dimension = krull_dimension(lattice);
  out.dimension_zero = out.krull_dimension == 0;

  const auto all = a2_minimal_exponent(IdealFamily::all_ideals(lattice));
  out.a2_all_ideals = all.holds;
  out.uniform_all = all.uniform;

  const auto primary = IdealFamily::primary_ideals(lattice);
  if (primary.members.empty()) {
    out.a2_primary_ideals = true;  // vacuous: the zero ring has no proper ideals
  } else {
    const auto p = a2_minimal_exponent(primary);
    out.a2_primary_ideals = p.holds;
    out.uniform_primary = p.uniform;
  }
  out.agree = out.dimension_zero == out.a2_all_ideals && out.dimension_zero == out.a2_primary_ideals;
  return out;
}

PrimeFamilyCondition prime_family_condition(const IdealLattice& lattice, std::size_t cap) {
  require_cap(cap);
  const FiniteRing& ring = lattice.ring();
  PrimeFamilyCondition out;
  out.primes = lattice.prime_indices();
  std::vector<ElementSet> primes;
  for (auto i : out.primes) primes.push_back(lattice[i].members());

  for (std::size_t a = 0; a < primes.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < primes.size(); ++b)
      if (a != b && primes[b].is_subset_of(primes[a]) && !(primes[b] == primes[a])) minimal = false;
    if (minimal) out.minimal_primes.push_back(out.primes[a]);
  }

  const PowerOrbits orbits(ring);
  const ElementSet target = orbits.radical_of(meet_of(ring, primes, iota(primes.size())));
  out.radical_of_intersection = target.elements();

  // Smallest Gamma first, lexicographic within a size.
  std::optional<std::vector<std::size_t>> gamma;
  if (primes.size() <= cap) {
    for (std::size_t k = 0; k <= primes.size() && !gamma; ++k) {
      std::vector<std::size_t> pick(k);
      std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
        if (gamma) return;
        if (depth == k) {
          if (meet_of(ring, primes, pick) == target) gamma = pick;
          return;
        }
        for (std::size_t i = from; i < primes.size(); ++i) {
          pick[depth] = i;
          choose(depth + 1, i + 1);
        }
      };
      choose(0, 0);
    }
  } else {
    auto pruned = prune_witness(ring, primes, target);
    if (meet_of(ring, primes, pruned) == target) gamma = std::move(pruned);
  }
  out.full_family_holds = gamma.has_value();
  if (gamma)
    for (auto g : *gamma) out.gamma.push_back(out.primes[g]);
  out.gamma_is_minimal_primes = out.full_family_holds && out.gamma == out.minimal_primes;

  if (primes.size() <= cap) {
    out.subfamily_method = StarMethod::Exhaustive;
    // Primes are radical, so the sweep's running meet of radicals is the
    // meet of the subfamily itself.
    SubfamilySweep sweep(ring, primes, primes, [&](const ElementSet& meet, const ElementSet& radical_meet) {
      return orbits.radical_of(meet) == radical_meet;
    });
    out.every_subfamily_holds = !sweep.run().has_value();
    out.subfamilies_checked = sweep.visited();
  } else {
    out.subfamily_method = StarMethod::Certified;
    std::size_t checks = 0;
    out.every_subfamily_holds = !pairwise_identity(lattice, checks).has_value();
    out.subfamilies_checked = checks;
  }
  return out;
}

}  // namespace rstar
