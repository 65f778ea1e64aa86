#include "rstar/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "rstar/classify.hpp"
#include "rstar/derived_rings.hpp"

namespace rstar {

namespace {

constexpr std::size_t kMaxResidueModulus = 32;
constexpr std::size_t kMaxQuotientLattice = 12;

}  // namespace

Fingerprint fingerprint(const IdealLattice& lattice) {
  const FiniteRing& r = lattice.ring();
  Fingerprint f;
  f.order = r.order();
  f.characteristic = r.characteristic();
  for (std::size_t a = 0; a < r.order(); ++a) f.units += r.is_unit(static_cast<Element>(a)) ? 1 : 0;
  f.ideals = lattice.size();
  f.primes = lattice.prime_indices().size();
  f.nilradical_size = nilradical(lattice.ring_ptr()).size();
  return f;
}

Fingerprint fingerprint(const RingPtr& ring) { return fingerprint(enumerate_ideals(ring)); }

std::vector<RingPtr> base_rings(std::size_t max_order) {
  std::vector<RingPtr> out;
  for (std::size_t n = 2; n <= std::min(max_order, kMaxResidueModulus); ++n) out.push_back(make_residue_ring(n));
  for (unsigned p : {2U, 3U}) {
    std::size_t size = 1;
    for (std::size_t d = 1; d <= 3; ++d) {
      size *= p;
      if (size > max_order) break;
      for (std::size_t index = 0; index < size; ++index) {
        std::vector<unsigned> f(d + 1, 0);
        std::size_t rest = index;
        for (std::size_t i = 0; i < d; ++i) {
          f[i] = static_cast<unsigned>(rest % p);
          rest /= p;
        }
        f[d] = 1;
        out.push_back(make_poly_quotient(p, f));
      }
    }
  }
  return out;
}

std::vector<RingPtr> build_corpus(std::size_t max_order) {
  if (max_order > kMaxOrder) throw std::invalid_argument("corpus max order is capped at 256");
  const auto bases = base_rings(max_order);
  std::vector<RingPtr> out = bases;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i; j < bases.size(); ++j)
      if (bases[i]->order() * bases[j]->order() <= max_order) out.push_back(product_ring(bases[i], bases[j]));
  for (const auto& base : bases) {
    const auto lattice = enumerate_ideals(base);
    if (lattice.size() > kMaxQuotientLattice) continue;
    for (const auto& ideal : lattice.ideals())
      if (!ideal.is_zero() && ideal.is_proper()) out.push_back(quotient_ring(ideal).ring);
  }
  std::stable_sort(out.begin(), out.end(), [](const RingPtr& a, const RingPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return a->label() < b->label();
  });
  return out;
}

}  // namespace rstar
