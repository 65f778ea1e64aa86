#include "rstar/classify.hpp"

#include <algorithm>

#include "rstar/derived_rings.hpp"

namespace rstar {

namespace {

/// Longest path, in edges, through the strict-inclusion order restricted to
/// `nodes` (given in canonical lattice order, so inclusions point forward).
std::size_t longest_inclusion_chain(const IdealLattice& lattice, const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> depth(nodes.size(), 0);
  std::size_t best = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& lower = lattice[nodes[i]];
      const auto& upper = lattice[nodes[j]];
      if (lower.size() < upper.size() && lower.is_subset_of(upper)) depth[j] = std::max(depth[j], depth[i] + 1);
    }
    best = std::max(best, depth[j]);
  }
  return best;
}

}  // namespace

Ideal nilradical(const RingPtr& ring) { return radical(Ideal::zero(ring)); }

std::optional<PairWitness> zero_divisor_pair(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a) {
    if (a == r.zero()) continue;
    for (Element b = 0; b < n; ++b)
      if (b != r.zero() && r.mul(a, b) == r.zero()) return PairWitness{a, b};
  }
  return std::nullopt;
}

bool is_domain(const FiniteRing& r) { return r.order() > 1 && !zero_divisor_pair(r); }

std::optional<Element> non_unit(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a)
    if (a != r.zero() && !r.is_unit(a)) return a;
  return std::nullopt;
}

bool is_field(const FiniteRing& r) { return r.order() > 1 && !non_unit(r); }

bool is_reduced(const RingPtr& ring) { return nilradical(ring).is_zero(); }

ElementVerdict is_vnr(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x) {
    const Element x2 = r.mul(x, x);
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) found = r.mul(x2, y) == x;
    if (!found) return {false, x};
  }
  return {};
}

PiRegularity pi_regularity(const FiniteRing& r) {
  PiRegularity out;
  const auto n = static_cast<Element>(r.order());
  out.minimal_exponent.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    Element power = a;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      const Element square = r.mul(power, power);
      bool found = false;
      for (Element b = 0; b < n && !found; ++b) found = r.mul(square, b) == power;
      if (found) {
        out.minimal_exponent[a] = k;
        break;
      }
      power = r.mul(power, a);
    }
    if (out.minimal_exponent[a] == 0 && out.holds) {
      out.holds = false;
      out.witness = a;
    }
  }
  return out;
}

std::size_t krull_dimension(const IdealLattice& lattice) {
  return longest_inclusion_chain(lattice, lattice.prime_indices());
}

RadicalInjectivity radical_injective(const IdealLattice& lattice) {
  const auto rad = radical_indices(lattice);
  for (std::size_t i = 0; i < rad.size(); ++i)
    for (std::size_t j = i + 1; j < rad.size(); ++j)
      if (rad[i] == rad[j]) return {false, std::pair{i, j}};
  return {};
}

DccReport dcc_radical_ideals(const IdealLattice& lattice) {
  const auto rad = radical_indices(lattice);
  std::vector<std::size_t> radical_ideals;
  for (std::size_t i = 0; i < rad.size(); ++i)
    if (rad[i] == i) radical_ideals.push_back(i);
  DccReport out;
  out.radical_ideal_count = radical_ideals.size();
  out.longest_chain = longest_inclusion_chain(lattice, radical_ideals);
  // Over a finite set of ideals a strictly descending chain has at most as
  // many links as there are ideals, so it must stop.
  out.holds = out.radical_ideal_count > 0 && out.longest_chain < out.radical_ideal_count;
  return out;
}

std::size_t longest_descending_chain(const IdealLattice& lattice) {
  std::vector<std::size_t> all(lattice.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return longest_inclusion_chain(lattice, all);
}

VnrEquivalence vnr_equivalence_report(const IdealLattice& lattice) {
  const RingPtr& ring = lattice.ring_ptr();
  VnrEquivalence out;
  out.conditions[0] = is_vnr(*ring).holds;
  out.conditions[1] = krull_dimension(lattice) == 0 && is_reduced(ring);

  bool local_fields = true;
  for (auto p : lattice.prime_indices()) {
    if (!is_field(*localize_at_prime(lattice[p]).ring)) {
      local_fields = false;
      out.non_field_localization = p;
      break;
    }
  }
  out.conditions[2] = local_fields;

  bool all_radical = true;
  bool all_idempotent = true;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (all_radical && !is_radical_ideal(lattice[i])) {
      all_radical = false;
      out.non_radical_ideal = i;
    }
    if (all_idempotent && !is_idempotent(lattice[i])) {
      all_idempotent = false;
      out.non_idempotent_ideal = i;
    }
  }
  out.conditions[3] = all_radical;
  out.conditions[4] = all_idempotent;

  for (std::size_t i = 1; i < out.conditions.size(); ++i) {
    if (out.conditions[i] != out.conditions[0]) {
      out.agree = false;
      out.first_disagreement = std::pair<std::size_t, std::size_t>{0, i};
      break;
    }
  }
  return out;
}

ClassificationReport classify(const IdealLattice& lattice) {
  const RingPtr& ring = lattice.ring_ptr();
  const FiniteRing& r = *ring;
  ClassificationReport rep{.label = r.label(), .order = r.order(), .nilradical = nilradical(ring), .witnesses = {}};
  rep.degenerate = r.is_zero_ring();

  const auto zd = zero_divisor_pair(r);
  rep.is_domain = r.order() > 1 && !zd;
  const auto nu = non_unit(r);
  rep.is_field = r.order() > 1 && !nu;
  rep.is_reduced = rep.nilradical.is_zero();
  const auto vnr = is_vnr(r);
  rep.is_vnr = vnr.holds;
  const auto pi = pi_regularity(r);
  rep.is_pi_regular = pi.holds;
  const auto inj = radical_injective(lattice);
  rep.radical_injective = inj.holds;
  const auto dcc = dcc_radical_ideals(lattice);
  rep.dcc_radical_ideals = dcc.holds;
  rep.krull_dimension = krull_dimension(lattice);

  if (!rep.is_field) {
    if (nu)
      rep.witnesses.push_back({"is_field", {*nu}, {}, "nonzero element without inverse"});
    else
      rep.witnesses.push_back({"is_field", {}, {}, "zero ring: one = zero"});
  }
  if (!rep.is_domain) {
    if (zd)
      rep.witnesses.push_back({"is_domain", {zd->a, zd->b}, {}, "nonzero product equal to zero"});
    else
      rep.witnesses.push_back({"is_domain", {}, {}, "zero ring: one = zero"});
  }
  if (!rep.is_reduced) {
    const auto nil = rep.nilradical.elements();
    const Element x = *std::find_if(nil.begin(), nil.end(), [&](Element e) { return e != r.zero(); });
    rep.witnesses.push_back({"is_reduced", {x}, {}, "nonzero nilpotent"});
  }
  if (!rep.is_vnr) rep.witnesses.push_back({"is_vnr", {*vnr.witness}, {}, "no y with x^2 y = x"});
  if (!rep.is_pi_regular)
    rep.witnesses.push_back({"is_pi_regular", {*pi.witness}, {}, "no n <= |R| with a^n in (a^n)^2 R"});
  if (!rep.radical_injective) {
    const auto [i, j] = *inj.collision;
    rep.witnesses.push_back({"radical_injective", {}, {lattice[i].elements(), lattice[j].elements()},
                             "distinct ideals with equal radicals"});
  }
  if (!rep.dcc_radical_ideals)
    rep.witnesses.push_back({"dcc_radical_ideals", {}, {}, "radical-ideal chain longer than the sublattice"});
  return rep;
}

}  // namespace rstar
