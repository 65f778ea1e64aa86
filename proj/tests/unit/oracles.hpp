#pragma once

// Brute-force reference computations used to cross-check the library. Nothing
// here calls into rstar beyond the ring tables themselves.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "rstar/finite_ring.hpp"

namespace oracle {

using Set = std::vector<unsigned>;  // sorted

inline unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 0; k < n; ++k) count += std::gcd(k, n) == 1;
  return n == 1 ? 1 : count;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline unsigned squarefree_part(unsigned n) {
  unsigned r = 1;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p) continue;
    r *= p;
    while (n % p == 0) n /= p;
  }
  return r;
}

inline bool is_prime_power(unsigned n) {
  if (n < 2) return false;
  unsigned p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// The ideal dZ/nZ for d | n.
inline Set zn_ideal(unsigned n, unsigned d) {
  Set out;
  for (unsigned k = 0; k < n; k += d) out.push_back(k);
  return out;
}

inline bool closed(const rstar::FiniteRing& r, const Set& s) {
  std::set<unsigned> in(s.begin(), s.end());
  if (!in.count(r.zero())) return false;
  for (unsigned a : s) {
    for (unsigned b : s)
      if (!in.count(r.add(a, b))) return false;
    for (unsigned x = 0; x < r.order(); ++x)
      if (!in.count(r.mul(x, a))) return false;
  }
  return true;
}

// Every ideal, by scanning all subsets containing zero. Order <= 16 only.
inline std::set<Set> all_ideals(const rstar::FiniteRing& r) {
  std::set<Set> out;
  const unsigned n = static_cast<unsigned>(r.order());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << r.zero()))) continue;
    Set s;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (closed(r, s)) out.insert(s);
  }
  return out;
}

inline Set radical(const rstar::FiniteRing& r, const Set& ideal) {
  std::set<unsigned> in(ideal.begin(), ideal.end());
  Set out;
  for (unsigned x = 0; x < r.order(); ++x) {
    unsigned p = x;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (in.count(p)) {
        out.push_back(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return out;
}

inline std::size_t unit_count(const rstar::FiniteRing& r) {
  std::size_t n = 0;
  for (unsigned a = 0; a < r.order(); ++a)
    for (unsigned b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.one()) {
        ++n;
        break;
      }
  return n;
}

}  // namespace oracle
