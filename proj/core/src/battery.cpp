#include "rstar/battery.hpp"

#include <random>
#include <sstream>

#include "rstar/derived_rings.hpp"
#include "rstar/error.hpp"

namespace rstar {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

Witness note(std::string predicate, std::string text, std::vector<Element> elements = {},
             std::vector<std::vector<Element>> ideals = {}) {
  return Witness{std::move(predicate), std::move(elements), std::move(ideals), std::move(text)};
}

StatementResult implication(std::string id, bool antecedent, bool consequent, std::string detail,
                            std::vector<Witness> witnesses = {}) {
  StatementResult r{std::move(id), Verdict::Consistent, !antecedent, std::move(detail), {}};
  if (antecedent && !consequent) {
    r.verdict = Verdict::Refuted;
    r.witnesses = std::move(witnesses);
    if (r.witnesses.empty()) r.witnesses.push_back(note(r.id, "antecedent true, consequent false"));
  }
  return r;
}

StatementResult agreement(std::string id, bool agree, std::string detail, std::vector<Witness> witnesses = {}) {
  return implication(std::move(id), true, agree, std::move(detail), std::move(witnesses));
}

InvariantResult invariant(std::string id, bool held, std::string detail, std::vector<Witness> witnesses = {}) {
  InvariantResult r{std::move(id), held, std::move(detail), {}};
  if (!held) {
    r.witnesses = std::move(witnesses);
    if (r.witnesses.empty()) r.witnesses.push_back(note(r.id, "invariant violated"));
  }
  return r;
}

std::size_t count_maximal(const IdealLattice& lattice) {
  std::size_t n = 0;
  for (const auto& i : lattice.ideals()) n += is_maximal(i) ? 1 : 0;
  return n;
}

struct QuotientCheck {
  bool homs_ok = true;
  bool pushforward_ok = true;
  bool star_ok = true;
  std::size_t quotients = 0;
  std::vector<Witness> witnesses;
};

QuotientCheck check_quotients(const IdealLattice& lattice) {
  QuotientCheck out;
  const auto rads = radical_indices(lattice);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Ideal& kernel = lattice[i];
    const auto q = quotient_ring(kernel);
    ++out.quotients;
    const auto hom = validate_hom(q.projection);
    if (!hom.ok || !q.projection.is_surjective()) {
      out.homs_ok = false;
      out.witnesses.push_back(note("projection", hom.describe(), {}, {kernel.elements()}));
    }
    // rad commutes with a surjection on ideals containing its kernel.
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!kernel.is_subset_of(lattice[j])) continue;
      const ElementSet pushed = image_set(q.projection, lattice[rads[j]]);
      const ElementSet expected = radical(extend_ideal(q.projection, lattice[j])).members();
      if (!(pushed == expected)) {
        out.pushforward_ok = false;
        out.witnesses.push_back(note("pushforward", "f(rad J) != rad f(J)", {}, {kernel.elements(), lattice[j].elements()}));
      }
    }
    const auto star = star_check_finite(enumerate_ideals(q.ring), 0);
    if (!star.satisfied) {
      out.star_ok = false;
      out.witnesses.push_back(note("quotient-star", q.ring->label() + " fails the certified check", {}, {kernel.elements()}));
    }
  }
  return out;
}

std::string describe_exponents(const A2Exponents& a2) {
  std::ostringstream out;
  out << "uniform n=" << a2.uniform << " (worst a=" << a2.worst_element << ")";
  return out.str();
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Consistent ? "consistent" : "refuted"; }

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids{"dcc-radical-implies-star", "artinian-implies-star", "star-domain-is-field", "star-passes-to-images", "star-passes-to-quotients", "star-closed-under-products", "primary-a1-a2-implies-zero-dim", "a2-iff-radical-identity", "zero-dim-iff-a2",
                                            "star-implies-a2", "star-implies-zero-dim", "vnr-five-way", "reduced-star-implies-vnr", "star-injective-implies-artinian", "laskerian-star-iff-prime-family", "star-passes-to-localizations", "zero-dim-five-way"};
  return ids;
}

bool RingBattery::refuted() const {
  for (const auto& s : statements)
    if (s.verdict == Verdict::Refuted) return true;
  return false;
}

bool RingBattery::invariants_held() const {
  for (const auto& i : invariants)
    if (!i.held) return false;
  return true;
}

bool PidBattery::refuted() const {
  for (const auto& s : statements)
    if (s.verdict == Verdict::Refuted) return true;
  return false;
}

bool PidBattery::invariants_held() const {
  for (const auto& i : invariants)
    if (!i.held) return false;
  return true;
}

std::vector<RingPtr> product_partners() {
  static const std::vector<RingPtr> partners{make_residue_ring(2), make_residue_ring(3), make_residue_ring(4)};
  return partners;
}

RingBattery theorem_battery(const RingPtr& ring, const BatteryOptions& opt) {
  RingBattery b;
  b.label = ring->label();
  b.order = ring->order();
  b.degenerate = ring->is_zero_ring();
  b.axioms = validate_axioms(*ring);
  b.invariants.push_back(invariant("axioms", b.axioms.ok, b.axioms.describe(),
                                   {note("axioms", b.axioms.describe(), b.axioms.witness)}));
  if (!b.axioms.ok) return b;

  const auto lattice = enumerate_ideals(ring, opt.lattice_cap);
  const std::size_t L = lattice.size();
  b.fingerprint = fingerprint(lattice);
  const auto star = star_check_finite(lattice, opt.star_cap);
  b.star_method = to_string(star.method);
  const auto cls = classify(lattice);
  const bool artinian = longest_descending_chain(lattice) < L;
  const auto primes = lattice.prime_indices();

  // ---- invariants ----------------------------------------------------------
  {
    std::vector<Ideal> rads;
    for (const auto& i : lattice.ideals()) rads.push_back(radical(i));
    bool ok = true;
    std::vector<Witness> w;
    for (std::size_t i = 0; i < L && ok; ++i) {
      if (!(radical(rads[i]) == rads[i]) || !lattice[i].is_subset_of(rads[i])) {
        ok = false;
        w.push_back(note("radical", "not idempotent or not extensive", {}, {lattice[i].elements()}));
      }
      for (std::size_t j = 0; j < L && ok; ++j) {
        if (!(radical(intersect(lattice[i], lattice[j])) == intersect(rads[i], rads[j]))) {
          ok = false;
          w.push_back(note("radical", "rad(I cap J) != rad I cap rad J", {}, {lattice[i].elements(), lattice[j].elements()}));
        }
        if (lattice[i].is_subset_of(lattice[j]) && !rads[i].is_subset_of(rads[j])) {
          ok = false;
          w.push_back(note("radical", "not monotone", {}, {lattice[i].elements(), lattice[j].elements()}));
        }
      }
    }
    b.invariants.push_back(invariant("radical-calculus", ok, std::to_string(L * L) + " ideal pairs", std::move(w)));
  }
  if (star.method == StarMethod::Exhaustive) {
    const auto certified = star_check_finite(lattice, 0);
    b.invariants.push_back(invariant("star-methods-agree", certified.satisfied == star.satisfied,
                                     "exhaustive=" + yes_no(star.satisfied) + " certified=" + yes_no(certified.satisfied)));
  }
  if (star.satisfied) {
    // Enlarging S' keeps the meet of radicals at rad(meet of the lattice).
    bool ok = true;
    ElementSet base = ring->elements();
    for (auto k : star.witness_subset) base &= radical(lattice[k]).members();
    ElementSet target;
    for (auto e : star.radical_of_intersection) target.insert(e);
    ok = base == target;
    for (std::size_t k = 0; k < L && ok; ++k) ok = (base & radical(lattice[k]).members()) == target;
    b.invariants.push_back(invariant("star-witness-monotone", ok, "|S'|=" + std::to_string(star.witness_subset.size())));
  }
  {
    const bool chain = (!cls.is_field || cls.is_domain) && (!cls.is_domain || cls.is_reduced) && (!cls.is_vnr || cls.is_reduced);
    const std::size_t falses = !cls.is_field + !cls.is_domain + !cls.is_reduced + !cls.is_vnr + !cls.is_pi_regular +
                               !cls.radical_injective + !cls.dcc_radical_ideals;
    const bool finite_domain = cls.is_field == (cls.is_domain && ring->order() > 1);
    b.invariants.push_back(invariant("classification", chain && falses == cls.witnesses.size() && finite_domain,
                                     std::to_string(falses) + " false predicates, " + std::to_string(cls.witnesses.size()) +
                                         " witnesses"));
  }
  {
    bool ok = true;
    std::vector<Witness> w;
    for (const auto& ideal : lattice.ideals()) {
      const bool maximal = is_maximal(ideal);
      const bool prime = is_prime(ideal);
      const bool primary = is_primary(ideal);
      const bool rad_prime = !primary || is_prime(radical(ideal));
      if ((maximal && !prime) || (prime && !primary) || !rad_prime) {
        ok = false;
        w.push_back(note("prime-hierarchy", "maximal => prime => primary, rad(primary) prime", {}, {ideal.elements()}));
      }
    }
    b.invariants.push_back(invariant("prime-hierarchy", ok, std::to_string(L) + " ideals", std::move(w)));
  }

  // Laskerian: every proper ideal is a verified finite intersection of primaries.
  bool laskerian = true;
  std::size_t decomposed = 0;
  {
    std::vector<Witness> w;
    for (const auto& ideal : lattice.ideals()) {
      if (!ideal.is_proper()) continue;
      if (L > opt.decomposition_lattice_limit && !ideal.is_zero()) continue;
      try {
        const auto d = primary_decomposition(ideal, lattice);
        ++decomposed;
        if (!verify_decomposition(d)) {
          laskerian = false;
          w.push_back(note("primary-decomposition", "decomposition failed verification", {}, {ideal.elements()}));
        }
      } catch (const InternalConsistencyError& e) {
        laskerian = false;
        w.push_back(note("primary-decomposition", e.what(), {}, {ideal.elements()}));
      }
    }
    b.invariants.push_back(invariant("primary-decomposition", laskerian,
                                     std::to_string(decomposed) + " proper ideals decomposed", std::move(w)));
  }

  // Localizations at every prime.
  bool local_ok = true;
  bool local_star = true;
  std::vector<Witness> local_w;
  for (auto p : primes) {
    const auto loc = localize_at_prime(lattice[p]);
    const auto loc_lattice = enumerate_ideals(loc.ring, opt.lattice_cap);
    if (count_maximal(loc_lattice) != 1) {
      local_ok = false;
      local_w.push_back(note("localization", loc.ring->label() + " is not local", {}, {lattice[p].elements()}));
    }
    if (!star_check_finite(loc_lattice, 0).satisfied) {
      local_star = false;
      local_w.push_back(note("localization-star", loc.ring->label() + " fails the certified check", {}, {lattice[p].elements()}));
    }
  }
  b.invariants.push_back(invariant("localization-local", local_ok, std::to_string(primes.size()) + " primes", local_w));

  // ---- statements ----------------------------------------------------------
  auto& st = b.statements;
  const std::string star_detail = "star " + yes_no(star.satisfied) + " (" + b.star_method + ")";

  {
    const auto dcc = dcc_radical_ideals(lattice);
    st.push_back(implication("dcc-radical-implies-star", cls.dcc_radical_ideals, star.satisfied,
                             "dcc on " + std::to_string(dcc.radical_ideal_count) + " radical ideals; " + star_detail));
  }
  st.push_back(implication("artinian-implies-star", artinian, star.satisfied, "finite lattice of " + std::to_string(L) + " ideals; " + star_detail));
  {
    std::vector<Witness> w;
    for (const auto& x : cls.witnesses)
      if (x.predicate == "is_field") w.push_back(x);
    st.push_back(implication("star-domain-is-field", cls.is_domain && star.satisfied, cls.is_field,
                             "domain " + yes_no(cls.is_domain) + ", field " + yes_no(cls.is_field), w));
  }
  {
    const auto qc = check_quotients(lattice);
    const std::string d = std::to_string(qc.quotients) + " quotients";
    st.push_back(implication("star-passes-to-images", star.satisfied, qc.homs_ok && qc.pushforward_ok && qc.star_ok,
                             d + "; projections surjective, radicals push forward", qc.witnesses));
    st.push_back(implication("star-passes-to-quotients", star.satisfied, qc.star_ok, d + " re-pass the certified check", qc.witnesses));
  }
  {
    bool antecedent = star.satisfied;
    bool consequent = true;
    std::size_t used = 0;
    std::vector<Witness> w;
    for (const auto& partner : product_partners()) {
      if (ring->order() * partner->order() > kMaxOrder) continue;
      ++used;
      antecedent = antecedent && star_check_finite(partner, 0).satisfied;
      const auto prod = product_ring(ring, partner);
      if (!star_check_finite(enumerate_ideals(prod, opt.lattice_cap), 0).satisfied) {
        consequent = false;
        w.push_back(note("product-star", prod->label() + " fails the certified check"));
      }
    }
    auto r = implication("star-closed-under-products", antecedent && used > 0, consequent, std::to_string(used) + " sampled products", w);
    st.push_back(std::move(r));
  }
  const auto rep0 = [&] {
    std::vector<Ideal> components;
    if (!ring->is_zero_ring()) components = primary_decomposition(Ideal::zero(ring), lattice).components;
    return family_report(IdealFamily::make(ring, std::move(components), "primary components of (0)"));
  }();
  st.push_back(implication("primary-a1-a2-implies-zero-dim", rep0.a1 && rep0.all_primary && rep0.a2.holds, cls.krull_dimension == 0,
                           "A1 " + yes_no(rep0.a1) + ", primary " + yes_no(rep0.all_primary) + ", A2 " +
                               describe_exponents(rep0.a2) + "; R is zero-dimensional"));
  const auto all_family = IdealFamily::all_ideals(lattice);
  const auto eq_all = a2_equiv_radical_identity(all_family, opt.star_cap);
  const auto eq_primary = a2_equiv_radical_identity(IdealFamily::primary_ideals(lattice), opt.star_cap);
  st.push_back(agreement("a2-iff-radical-identity", eq_all.agree && eq_primary.agree,
                         "all ideals: A2 " + yes_no(eq_all.a2_holds) + " / identity " + yes_no(eq_all.radical_identity_holds) +
                             " (" + to_string(eq_all.method) + "); primary ideals: A2 " + yes_no(eq_primary.a2_holds) +
                             " / identity " + yes_no(eq_primary.radical_identity_holds)));
  const auto zd = zero_dim_equivalence(lattice);
  b.invariants.push_back(invariant("a2-exponent-bound", zd.uniform_all <= ring->order() && zd.uniform_primary <= ring->order(),
                                   "uniform exponents " + std::to_string(zd.uniform_all) + "/" +
                                       std::to_string(zd.uniform_primary) + " <= |R|"));
  st.push_back(agreement("zero-dim-iff-a2", zd.agree,
                         "dim0 " + yes_no(zd.dimension_zero) + ", A2(all) " + yes_no(zd.a2_all_ideals) + ", A2(primary) " +
                             yes_no(zd.a2_primary_ideals)));
  st.push_back(implication("star-implies-a2", star.satisfied, eq_all.a2_holds && eq_all.radical_identity_holds,
                           "A2 on all ideals, uniform n=" + std::to_string(zd.uniform_all)));
  st.push_back(implication("star-implies-zero-dim", star.satisfied, cls.krull_dimension == 0,
                           "krull dimension " + std::to_string(cls.krull_dimension)));
  {
    const auto vnr = vnr_equivalence_report(lattice);
    std::string d = "conditions:";
    for (bool c : vnr.conditions) d += c ? " T" : " F";
    std::vector<Witness> w;
    if (vnr.first_disagreement)
      w.push_back(note("vnr-five-way", "conditions disagree",
                       {static_cast<Element>(vnr.first_disagreement->first + 1),
                        static_cast<Element>(vnr.first_disagreement->second + 1)}));
    st.push_back(agreement("vnr-five-way", vnr.agree, d, w));
  }
  st.push_back(implication("reduced-star-implies-vnr", cls.is_reduced && star.satisfied, cls.is_vnr,
                           "reduced " + yes_no(cls.is_reduced) + ", vnr " + yes_no(cls.is_vnr)));
  st.push_back(implication("star-injective-implies-artinian", star.satisfied && (cls.is_vnr || cls.radical_injective), artinian,
                           "vnr " + yes_no(cls.is_vnr) + ", radical-injective " + yes_no(cls.radical_injective)));
  const auto pfc = prime_family_condition(lattice, opt.star_cap);
  b.invariants.push_back(invariant("prime-family-minimal", pfc.full_family_holds && pfc.gamma_is_minimal_primes,
                                   "Gamma of size " + std::to_string(pfc.gamma.size()) + " vs " +
                                       std::to_string(pfc.minimal_primes.size()) + " minimal primes"));
  st.push_back(implication("laskerian-star-iff-prime-family", laskerian, star.satisfied == pfc.full_family_holds && (!star.satisfied || pfc.every_subfamily_holds),
                           "prime family: full " + yes_no(pfc.full_family_holds) + ", every subfamily " +
                               yes_no(pfc.every_subfamily_holds) + " (" + std::to_string(pfc.subfamilies_checked) + ")"));
  st.push_back(implication("star-passes-to-localizations", laskerian && star.satisfied, local_star,
                           std::to_string(primes.size()) + " localizations re-pass the certified check", local_w));
  {
    const std::array<bool, 5> five{star.satisfied, cls.krull_dimension == 0, artinian, cls.is_pi_regular,
                                   pfc.full_family_holds};
    bool agree = true;
    std::string d = "conditions:";
    for (bool c : five) {
      agree = agree && c == five[0];
      d += c ? " T" : " F";
    }
    st.push_back(agreement("zero-dim-five-way", agree, d));
  }
  return b;
}

PidBattery pid_battery(const pid::Domain& d) {
  using namespace pid;
  PidBattery b;
  b.domain = d;
  b.zero_dim = pid_zero_dim_witnesses(d);
  const auto primes = d.first_primes(3);
  const Generator& p = primes.front();
  b.all_primes = pid_star_check(FamilySpec::all_primes(d));
  b.prime_powers = pid_star_check(FamilySpec::prime_powers(d, p));
  b.a2_prime_powers = pid_a2_check(FamilySpec::prime_powers(d, p), p);
  const auto& t8 = b.zero_dim;

  // Z and F_p[x] are Noetherian domains, hence reduced and Laskerian.
  const bool domain = true;
  const bool reduced = true;
  const bool laskerian = true;
  const bool a2_all = b.a2_prime_powers.holds;  // prime powers are a subfamily of all (primary) ideals
  const bool identity_prime_powers = b.prime_powers.satisfied;

  auto& st = b.statements;
  st.push_back(implication("dcc-radical-implies-star", t8.dcc_radical, t8.star, "radical chain of length " + std::to_string(t8.radical_chain.chain.size())));
  st.push_back(implication("artinian-implies-star", t8.artinian, t8.star, "descending chain (p) > (p^2) > ..."));
  st.push_back(implication("star-domain-is-field", domain && t8.star, false, "domain, not a field; star fails"));
  st.push_back(agreement("a2-iff-radical-identity", a2_all == identity_prime_powers,
                         "prime-power family: A2 " + yes_no(a2_all) + " / identity " + yes_no(identity_prime_powers)));
  st.push_back(agreement("zero-dim-iff-a2", t8.zero_dimensional == a2_all,
                         "dim0 " + yes_no(t8.zero_dimensional) + ", A2(all) " + yes_no(a2_all) + ", A2(primary) " + yes_no(a2_all)));
  st.push_back(implication("star-implies-a2", t8.star, a2_all, "star fails"));
  st.push_back(implication("star-implies-zero-dim", t8.star, t8.zero_dimensional, "prime chain (0) < (p)"));
  st.push_back(implication("reduced-star-implies-vnr", reduced && t8.star, false, "reduced, star fails"));
  st.push_back(implication("star-injective-implies-artinian", t8.star, t8.artinian, "star fails"));
  st.push_back(implication("laskerian-star-iff-prime-family", laskerian, t8.star == t8.prime_family_condition,
                           "star " + yes_no(t8.star) + ", prime family " + yes_no(t8.prime_family_condition)));
  st.push_back(agreement("zero-dim-five-way", t8.consistent,
                         std::string("conditions:") + (t8.star ? " T" : " F") + (t8.zero_dimensional ? " T" : " F") +
                             (t8.artinian ? " T" : " F") + (t8.pi_regular ? " T" : " F") +
                             (t8.prime_family_condition ? " T" : " F")));

  // Symbolic invariants, spot-checked on a fixed pseudo-random sample.
  std::mt19937_64 rng(20130616);
  bool radical_ok = true;
  bool star_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    Generator a;
    Generator c;
    if (d.is_integers()) {
      a = std::uniform_int_distribution<std::uint64_t>(1, 100000)(rng);
      c = std::uniform_int_distribution<std::uint64_t>(1, 100000)(rng);
    } else {
      auto draw = [&] {
        Poly f;
        const std::size_t deg = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        for (std::size_t i = 0; i < deg; ++i) f.coeffs.push_back(static_cast<unsigned>(rng() % d.characteristic()));
        f.coeffs.push_back(1);
        return Generator{f};
      };
      a = draw();
      c = draw();
    }
    const PIDIdeal I = PIDIdeal::of(d, a);
    const PIDIdeal J = PIDIdeal::of(d, c);
    radical_ok = radical_ok && pid_radical(pid_intersect({I, J})) == pid_intersect({pid_radical(I), pid_radical(J)}) &&
                 pid_radical(pid_radical(I)) == pid_radical(I);
    star_ok = star_ok && pid_star_check(FamilySpec::finite(d, {a, c})).satisfied;
  }
  b.invariants.push_back(invariant("pid-radical-calculus", radical_ok, "100 sampled generator pairs"));
  b.invariants.push_back(invariant("pid-finite-families-satisfy-star", star_ok, "100 sampled two-member families"));
  b.invariants.push_back(invariant("pid-infinite-families-fail-star",
                                   !b.all_primes.satisfied && !b.prime_powers.satisfied &&
                                       !(b.all_primes.witness_value == b.all_primes.radical_of_intersection) &&
                                       !(b.prime_powers.witness_value == b.prime_powers.radical_of_intersection),
                                   "witness values differ from rad of the meet"));
  return b;
}

}  // namespace rstar
