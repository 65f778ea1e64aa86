#include "rstar/pid.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rstar/error.hpp"
#include "rstar/finite_ring.hpp"
#include "rstar/ring_spec.hpp"

namespace rstar::pid {

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;
constexpr std::size_t kMaxPolyDegree = 16;

// ---- integers -------------------------------------------------------------

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw ResourceLimitError("integer generator exceeds 63 bits");
  return a * b;
}

std::uint64_t int_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

std::vector<std::pair<std::uint64_t, unsigned>> int_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= kTrialBound && d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) {
    if (n > kTrialBound * kTrialBound) throw ResourceLimitError("cofactor beyond the trial-division bound of 10^6");
    out.emplace_back(n, 1);
  }
  return out;
}

// ---- F_p[x] ---------------------------------------------------------------

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  throw std::invalid_argument("no inverse mod p");
}

void trim(std::vector<unsigned>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::size_t degree(const Poly& f) { return f.coeffs.empty() ? 0 : f.coeffs.size() - 1; }

Poly monic(Poly f, unsigned p) {
  trim(f.coeffs);
  if (f.coeffs.empty()) return f;
  const unsigned inv = inv_mod(f.coeffs.back(), p);
  for (auto& c : f.coeffs) c = (c * inv) % p;
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  if (a.coeffs.size() + b.coeffs.size() > 4 * kMaxPolyDegree + 2)
    throw ResourceLimitError("polynomial generator degree beyond bound");
  std::vector<unsigned> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = (c[i + j] + a.coeffs[i] * b.coeffs[j]) % p;
  trim(c);
  return {c};
}

/// Quotient and remainder by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, unsigned p) {
  trim(a.coeffs);
  const unsigned lead_inv = inv_mod(b.coeffs.back(), p);
  const std::size_t db = degree(b);
  if (a.coeffs.size() < b.coeffs.size()) return {Poly{}, a};
  std::vector<unsigned> q(a.coeffs.size() - db, 0);
  for (std::size_t k = a.coeffs.size(); k-- > db;) {
    const unsigned c = (a.coeffs[k] * lead_inv) % p;
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a.coeffs[k - db + i] = (a.coeffs[k - db + i] + (p - c) * b.coeffs[i]) % p;
  }
  trim(a.coeffs);
  trim(q);
  return {Poly{q}, a};
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a.coeffs);
  trim(b.coeffs);
  while (!b.coeffs.empty()) {
    auto r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// i-th monic polynomial of degree d: base-p digits of i, constant term first.
Poly monic_of_degree(std::size_t d, std::size_t index, unsigned p) {
  Poly f;
  f.coeffs.assign(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    f.coeffs[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  f.coeffs[d] = 1;
  return f;
}

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<std::pair<Poly, unsigned>> poly_factor(Poly f, unsigned p) {
  f = monic(std::move(f), p);
  if (degree(f) > kMaxPolyDegree) throw ResourceLimitError("polynomial factorization limited to degree 16");
  std::vector<std::pair<Poly, unsigned>> out;
  for (std::size_t d = 1; 2 * d <= degree(f); ++d) {
    const std::size_t count = power(p, d);
    for (std::size_t i = 0; i < count && 2 * d <= degree(f); ++i) {
      const Poly q = monic_of_degree(d, i, p);
      unsigned e = 0;
      while (true) {
        auto [quot, rem] = poly_divmod(f, q, p);
        if (!rem.coeffs.empty()) break;
        f = std::move(quot);
        ++e;
      }
      if (e > 0) out.emplace_back(q, e);
    }
  }
  if (degree(f) >= 1) out.emplace_back(f, 1);
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  // Index order of monic_of_degree: compare from the highest non-leading digit.
  for (std::size_t i = a.coeffs.size(); i-- > 0;)
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  return false;
}

}  // namespace

// ---- Domain ---------------------------------------------------------------

Domain Domain::integers() { return Domain(0); }

Domain Domain::polynomials(unsigned p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("polynomial domains are supported for p in {2,3,5,7}, got " + std::to_string(p));
  return Domain(p);
}

Domain Domain::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "Z") return integers();
  if (t.size() > 4 && t.front() == 'F' && t.substr(t.size() - 3) == "[x]") {
    const auto digits = t.substr(1, t.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        digits.size() <= 2)
      return polynomials(static_cast<unsigned>(std::stoul(digits)));
  }
  throw std::invalid_argument("unknown domain '" + std::string(text) + "' (expected Z or F<p>[x])");
}

std::string Domain::name() const { return is_integers() ? "Z" : "F" + std::to_string(p_) + "[x]"; }

Generator Domain::parse_generator(std::string_view text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty generator");
  if (is_integers()) {
    bool negative = false;
    std::size_t i = 0;
    if (t[0] == '-') {
      negative = true;
      i = 1;
    }
    if (i == t.size()) throw std::invalid_argument("bad integer generator '" + t + "'");
    std::uint64_t v = 0;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw std::invalid_argument("bad integer generator '" + t + "'");
      v = checked_mul(v, 10) + static_cast<std::uint64_t>(t[i] - '0');
    }
    (void)negative;  // generators are taken up to sign
    return v;
  }
  return canonical(Poly{parse_poly(t, p_)});
}

std::string Domain::format(const Generator& g) const {
  if (is_integers()) return std::to_string(std::get<std::uint64_t>(g));
  return format_poly(std::get<Poly>(g).coeffs);
}

Generator Domain::zero() const {
  if (is_integers()) return std::uint64_t{0};
  return Poly{};
}

Generator Domain::one() const {
  if (is_integers()) return std::uint64_t{1};
  return Poly{{1}};
}

bool Domain::is_zero(const Generator& g) const { return canonical(g) == zero(); }
bool Domain::is_one(const Generator& g) const { return canonical(g) == one(); }

Generator Domain::canonical(const Generator& g) const {
  if (is_integers()) return std::get<std::uint64_t>(g);
  return monic(std::get<Poly>(g), p_);
}

Generator Domain::mul(const Generator& a, const Generator& b) const {
  if (is_integers()) return checked_mul(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b));
  return monic(poly_mul(std::get<Poly>(a), std::get<Poly>(b), p_), p_);
}

Generator Domain::pow(const Generator& a, std::size_t n) const {
  Generator r = one();
  for (std::size_t i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

bool Domain::divides(const Generator& a, const Generator& b) const {
  if (is_zero(a)) return is_zero(b);
  if (is_integers()) return std::get<std::uint64_t>(b) % std::get<std::uint64_t>(a) == 0;
  return poly_divmod(std::get<Poly>(b), std::get<Poly>(a), p_).second.coeffs.empty();
}

Generator Domain::gcd(const Generator& a, const Generator& b) const {
  if (is_integers()) return int_gcd(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b));
  return poly_gcd(std::get<Poly>(a), std::get<Poly>(b), p_);
}

Generator Domain::lcm(const Generator& a, const Generator& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  const Generator g = gcd(a, b);
  if (is_integers()) return checked_mul(std::get<std::uint64_t>(a) / std::get<std::uint64_t>(g), std::get<std::uint64_t>(b));
  const Poly q = poly_divmod(std::get<Poly>(a), std::get<Poly>(g), p_).first;
  return monic(poly_mul(q, std::get<Poly>(b), p_), p_);
}

std::vector<std::pair<Generator, unsigned>> Domain::factor(const Generator& g) const {
  if (is_zero(g)) throw std::invalid_argument("cannot factor zero");
  std::vector<std::pair<Generator, unsigned>> out;
  if (is_integers()) {
    for (auto [q, e] : int_factor(std::get<std::uint64_t>(g))) out.emplace_back(q, e);
  } else {
    for (auto& [q, e] : poly_factor(std::get<Poly>(g), p_)) out.emplace_back(q, e);
  }
  return out;
}

Generator Domain::squarefree_kernel(const Generator& g) const {
  if (is_zero(g)) return zero();
  Generator r = one();
  for (const auto& [q, e] : factor(g)) r = mul(r, q);
  return r;
}

bool Domain::is_prime(const Generator& g) const {
  if (is_zero(g) || is_one(g)) return false;
  const auto f = factor(g);
  return f.size() == 1 && f.front().second == 1;
}

unsigned Domain::valuation(const Generator& prime, const Generator& g) const {
  if (is_zero(g)) throw std::invalid_argument("valuation of zero is unbounded");
  unsigned v = 0;
  Generator q = prime;
  while (divides(q, g)) {
    ++v;
    q = mul(q, prime);
  }
  return v;
}

std::vector<Generator> Domain::first_primes(std::size_t count) const {
  std::vector<Generator> out;
  if (is_integers()) {
    for (std::uint64_t n = 2; out.size() < count; ++n)
      if (is_prime_number(static_cast<std::size_t>(n))) out.emplace_back(n);
    return out;
  }
  for (std::size_t d = 1; out.size() < count; ++d) {
    const std::size_t total = power(p_, d);
    for (std::size_t i = 0; i < total && out.size() < count; ++i) {
      Poly f = monic_of_degree(d, i, p_);
      if (is_prime(f)) out.emplace_back(std::move(f));
    }
  }
  return out;
}

bool Domain::less(const Generator& a, const Generator& b) const {
  if (is_integers()) return std::get<std::uint64_t>(a) < std::get<std::uint64_t>(b);
  return poly_less(std::get<Poly>(a), std::get<Poly>(b));
}

// ---- ideals ---------------------------------------------------------------

namespace {

const Domain& common_domain(const std::vector<PIDIdeal>& ideals, const Domain& fallback) {
  for (const auto& i : ideals)
    if (!(i.domain == ideals.front().domain)) throw std::invalid_argument("ideals over different domains");
  return ideals.empty() ? fallback : ideals.front().domain;
}

}  // namespace

bool contains(const PIDIdeal& outer, const PIDIdeal& inner) {
  if (!(outer.domain == inner.domain)) throw std::invalid_argument("ideals over different domains");
  return outer.domain.divides(outer.generator, inner.generator);
}

PIDIdeal pid_radical(const PIDIdeal& ideal) {
  return {ideal.domain, ideal.domain.squarefree_kernel(ideal.generator)};
}

PIDIdeal pid_intersect(const std::vector<PIDIdeal>& ideals) {
  static const Domain z;
  const Domain& d = common_domain(ideals, z);
  Generator acc = d.one();
  for (const auto& i : ideals) acc = d.lcm(acc, i.generator);
  return {d, acc};
}

PIDIdeal pid_sum(const std::vector<PIDIdeal>& ideals) {
  static const Domain z;
  const Domain& d = common_domain(ideals, z);
  Generator acc = d.zero();
  for (const auto& i : ideals) acc = d.gcd(acc, i.generator);
  return {d, acc};
}

// ---- families -------------------------------------------------------------

FamilySpec FamilySpec::finite(const Domain& domain, std::vector<Generator> gens) {
  FamilySpec s{domain, FamilyKind::FiniteList, {}, domain.zero()};
  for (auto& g : gens) {
    g = domain.canonical(g);
    if (std::find(s.generators.begin(), s.generators.end(), g) == s.generators.end()) s.generators.push_back(g);
  }
  if (s.generators.empty()) throw std::invalid_argument("finite family must be nonempty");
  return s;
}

FamilySpec FamilySpec::all_primes(const Domain& domain) { return {domain, FamilyKind::AllPrimes, {}, domain.zero()}; }

FamilySpec FamilySpec::prime_powers(const Domain& domain, const Generator& p) {
  const Generator base = domain.canonical(p);
  if (!domain.is_prime(base))
    throw std::invalid_argument("prime-powers family requires a prime generator, got " + domain.format(base));
  return {domain, FamilyKind::PrimePowers, {}, base};
}

FamilySpec FamilySpec::parse(const Domain& domain, std::string_view raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text == "all-primes") return all_primes(domain);
  if (text.rfind("prime-powers:", 0) == 0) return prime_powers(domain, domain.parse_generator(text.substr(13)));
  if (text.rfind("finite:", 0) == 0) {
    std::vector<Generator> gens;
    std::string_view rest = std::string_view(text).substr(7);
    while (true) {
      const auto comma = rest.find(',');
      gens.push_back(domain.parse_generator(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return finite(domain, std::move(gens));
  }
  throw std::invalid_argument("unknown family '" + std::string(raw) +
                              "' (expected finite:g1,g2,... | all-primes | prime-powers:p)");
}

std::string FamilySpec::describe() const {
  switch (kind) {
    case FamilyKind::AllPrimes: return "all-primes over " + domain.name();
    case FamilyKind::PrimePowers: return "prime-powers:" + domain.format(base) + " over " + domain.name();
    case FamilyKind::FiniteList: {
      std::string out = "finite:";
      for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + domain.format(generators[i]);
      return out + " over " + domain.name();
    }
  }
  return "";
}

FamilyIntersection family_intersection(const FamilySpec& spec) {
  const Domain& d = spec.domain;
  switch (spec.kind) {
    case FamilyKind::FiniteList: {
      std::vector<PIDIdeal> ideals;
      for (const auto& g : spec.generators) ideals.push_back({d, g});
      return {pid_intersect(ideals), "lcm of the listed generators"};
    }
    case FamilyKind::AllPrimes:
      return {{d, d.zero()}, "a nonzero element has finitely many prime divisors, so only 0 lies in every prime ideal"};
    case FamilyKind::PrimePowers:
      return {{d, d.zero()},
              "for nonzero g, p^k does not divide g once k exceeds the multiplicity of p in g"};
  }
  throw std::logic_error("unreachable");
}

PidStarResult pid_star_check(const FamilySpec& spec) {
  const Domain& d = spec.domain;
  PidStarResult out;
  out.method = StarMethod::Symbolic;
  out.radical_of_intersection = pid_radical(family_intersection(spec).value);

  switch (spec.kind) {
    case FamilyKind::FiniteList: {
      std::vector<PIDIdeal> radicals;
      for (const auto& g : spec.generators) {
        out.witness_subfamily.push_back({d, g});
        radicals.push_back(pid_radical({d, g}));
      }
      out.witness_value = pid_intersect(radicals);
      out.satisfied = out.witness_value == out.radical_of_intersection;
      out.certificate = "rad(lcm) = lcm of squarefree kernels over the whole list";
      break;
    }
    case FamilyKind::AllPrimes: {
      for (const auto& q : d.first_primes(2)) out.witness_subfamily.push_back({d, q});
      out.witness_value = pid_intersect(out.witness_subfamily);
      out.satisfied = false;
      out.certificate = "rad(meet of all primes) = (0), but a finite subfamily {(q1),...,(qk)} has meet of radicals "
                        "(q1...qk), which is nonzero";
      break;
    }
    case FamilyKind::PrimePowers: {
      out.witness_subfamily = {PIDIdeal{d, spec.base}, PIDIdeal{d, d.pow(spec.base, 2)}};
      std::vector<PIDIdeal> radicals;
      for (const auto& i : out.witness_subfamily) radicals.push_back(pid_radical(i));
      out.witness_value = pid_intersect(radicals);
      out.satisfied = false;
      out.certificate = "rad(meet of all (p^k)) = (0), but every finite subfamily has meet of radicals (p), which is nonzero";
      break;
    }
  }
  if (!out.satisfied && out.witness_value == out.radical_of_intersection)
    throw InternalConsistencyError("symbolic star witness does not separate the two sides");
  return out;
}

PidA2Result pid_a2_check(const FamilySpec& spec, const Generator& raw_a) {
  const Domain& d = spec.domain;
  const Generator a = d.canonical(raw_a);
  PidA2Result out;
  if (d.is_zero(a)) {
    out.holds = true;
    out.uniform_exponent = 1;
    out.certificate = "0 lies in every ideal";
    return out;
  }
  switch (spec.kind) {
    case FamilyKind::FiniteList: {
      std::size_t n = 1;
      for (const auto& g : spec.generators) {
        if (d.is_zero(g)) continue;  // a != 0 is not in rad(0)
        if (!d.divides(d.squarefree_kernel(g), a)) continue;  // a not in rad((g))
        for (const auto& [q, e] : d.factor(g)) {
          const unsigned v = d.valuation(q, a);
          n = std::max<std::size_t>(n, (e + v - 1) / v);
        }
      }
      out.holds = true;
      out.uniform_exponent = n;
      out.certificate = "least n with n * v_q(a) >= v_q(g) for every member (g) with a in rad((g))";
      return out;
    }
    case FamilyKind::AllPrimes:
      out.holds = true;
      out.uniform_exponent = 1;
      out.certificate = "a in rad((q)) = (q) means q divides a, so a^1 already lies in (q)";
      return out;
    case FamilyKind::PrimePowers: {
      const unsigned v = d.valuation(spec.base, a);
      if (v == 0) {
        out.holds = true;
        out.uniform_exponent = 1;
        out.certificate = "a lies in no rad((p^k)) = (p)";
        return out;
      }
      out.holds = false;
      for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t k = n * v + 1;
        const Generator qk = d.pow(spec.base, k);
        if (d.divides(qk, d.pow(a, n)) || !d.divides(spec.base, a))
          throw InternalConsistencyError("valuation certificate failed");
        out.refutations.emplace_back(n, k);
      }
      out.certificate = "a in rad((p^k)) = (p) for all k, but for any n the member k = n*v_p(a)+1 = " +
                        std::string(v == 1 ? "n+1" : "n*" + std::to_string(v) + "+1") + " excludes a^n";
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

ZeroDimWitnesses pid_zero_dim_witnesses(const Domain& d) {
  ZeroDimWitnesses r;
  r.domain = d;
  const auto primes = d.first_primes(4);
  const Generator& p = primes.front();

  // Star fails on the family of all primes.
  r.star_witness = pid_star_check(FamilySpec::all_primes(d));
  r.star = r.star_witness.satisfied;

  // Dimension: (0) < (p) is a chain of primes: (0) is prime in a domain.
  r.prime_chain = {PIDIdeal{d, d.zero()}, PIDIdeal{d, p}};
  const bool chain_ok = d.is_prime(p) && contains(r.prime_chain[1], r.prime_chain[0]) &&
                        !contains(r.prime_chain[0], r.prime_chain[1]);
  r.zero_dimensional = !chain_ok;

  // Artinian: (p) > (p^2) > (p^3) > (p^4) never stabilizes.
  auto check_chain = [&](std::vector<PIDIdeal> chain) {
    ChainWitness w{std::move(chain), true, true};
    for (std::size_t i = 0; i + 1 < w.chain.size(); ++i)
      w.strictly_descending = w.strictly_descending && contains(w.chain[i], w.chain[i + 1]) &&
                              !contains(w.chain[i + 1], w.chain[i]);
    for (const auto& i : w.chain) w.all_radical = w.all_radical && pid_radical(i) == i;
    return w;
  };
  std::vector<PIDIdeal> powers;
  for (std::size_t k = 1; k <= 4; ++k) powers.push_back({d, d.pow(p, k)});
  r.descending_chain = check_chain(std::move(powers));
  r.artinian = !r.descending_chain.strictly_descending;

  // pi-regularity, a = p: a^n = (a^n)^2 a' forces v(a^n) = n >= 2n for a' != 0, and
  // a' = 0 gives 0 != a^n.
  r.pi_witness = p;
  bool refuted = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    const Generator an = d.pow(p, n);
    refuted = refuted && !d.divides(d.mul(an, an), an) && !d.is_zero(an);
    r.pi_checked_exponents.push_back(n);
  }
  r.pi_regular = !refuted;
  r.pi_certificate = "v_p(a^n) = n < 2n <= v_p((a^n)^2 a') for a' != 0, and a' = 0 gives 0 != a^n";

  // Prime family: the same all-primes family has no finite Gamma.
  r.prime_family_witness = r.star_witness;
  r.prime_family_condition = r.prime_family_witness.satisfied;

  // d.c.c. on radical ideals fails: (p1) > (p1 p2) > (p1 p2 p3) > ...
  std::vector<PIDIdeal> radical_chain;
  Generator acc = d.one();
  for (const auto& q : primes) {
    acc = d.mul(acc, q);
    radical_chain.push_back({d, acc});
  }
  r.radical_chain = check_chain(std::move(radical_chain));
  r.dcc_radical = !(r.radical_chain.strictly_descending && r.radical_chain.all_radical);

  r.consistent = r.star == r.zero_dimensional && r.star == r.artinian && r.star == r.pi_regular &&
                 r.star == r.prime_family_condition;
  return r;
}

}  // namespace rstar::pid
