#include "rstar/finite_ring.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rstar {

RingPtr FiniteRing::from_tables(std::string label, Tables t) {
  const std::size_t n = t.order;
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("ring order must be in 1..256, got " + std::to_string(n));
  if (t.add.size() != n * n || t.mul.size() != n * n || t.neg.size() != n)
    throw std::invalid_argument("operation table sizes do not match order " + std::to_string(n));
  auto in_range = [n](const std::vector<Element>& v) {
    for (auto e : v)
      if (e >= n) return false;
    return true;
  };
  if (!in_range(t.add) || !in_range(t.mul) || !in_range(t.neg) || t.zero >= n || t.one >= n)
    throw std::invalid_argument("operation table entry out of range");

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->label_ = std::move(label);
  ring->order_ = n;
  ring->add_ = std::move(t.add);
  ring->mul_ = std::move(t.mul);
  ring->neg_ = std::move(t.neg);
  ring->zero_ = t.zero;
  ring->one_ = t.one;
  return ring;
}

Element FiniteRing::pow(Element a, std::size_t k) const {
  Element result = one_;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::size_t FiniteRing::characteristic() const {
  Element acc = one_;
  std::size_t k = 1;
  while (acc != zero_ && k <= order_) {
    acc = add(acc, one_);
    ++k;
  }
  return k;
}

std::optional<Element> FiniteRing::inverse(Element a) const {
  for (std::size_t b = 0; b < order_; ++b)
    if (mul(a, static_cast<Element>(b)) == one_) return static_cast<Element>(b);
  return std::nullopt;
}

bool FiniteRing::is_unit(Element a) const { return inverse(a).has_value(); }

bool FiniteRing::same_tables(const FiniteRing& o) const {
  return order_ == o.order_ && zero_ == o.zero_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_ &&
         neg_ == o.neg_;
}

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingPtr make_residue_ring(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Z/n requires n >= 1");
  if (n > kMaxOrder) throw std::invalid_argument("Z/n requires n <= 256, got " + std::to_string(n));
  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.neg[a] = static_cast<Element>((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Element>((a + b) % n);
      t.mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Element>(1 % n);
  return FiniteRing::from_tables("Z/" + std::to_string(n), std::move(t));
}

std::string format_poly(std::span<const unsigned> coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const unsigned c = coeffs[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

RingPtr make_poly_quotient(unsigned p, std::span<const unsigned> f) {
  if (!is_prime_number(p)) throw std::invalid_argument("F_p[x]/(f) requires prime p, got " + std::to_string(p));
  if (f.size() < 2) throw std::invalid_argument("F_p[x]/(f) requires deg f >= 1");
  for (auto c : f)
    if (c >= p) throw std::invalid_argument("coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p));
  if (f.back() != 1) throw std::invalid_argument("F_p[x]/(f) requires monic f");
  const std::size_t d = f.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= p;
    if (n > kMaxOrder) throw std::invalid_argument("F_p[x]/(f) has more than 256 elements");
  }

  auto digits = [&](std::size_t e) {
    std::vector<unsigned> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<unsigned>(e % p);
      e /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    std::size_t e = 0;
    for (std::size_t i = d; i-- > 0;) e = e * p + c[i];
    return static_cast<Element>(e);
  };

  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = digits(a);
    std::vector<unsigned> na(d);
    for (std::size_t i = 0; i < d; ++i) na[i] = (p - ca[i]) % p;
    t.neg[a] = encode(na);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = digits(b);
      std::vector<unsigned> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % p;
      t.add[a * n + b] = encode(s);

      std::vector<unsigned> prod(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
      for (std::size_t k = 2 * d; k-- > d;) {
        const unsigned top = prod[k];
        if (top == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - f[i]) * top) % p;
      }
      prod.resize(d);
      t.mul[a * n + b] = encode(prod);
    }
  }
  t.zero = 0;
  t.one = static_cast<Element>(1 % n);
  return FiniteRing::from_tables("F" + std::to_string(p) + "[x]/(" + format_poly(f) + ")", std::move(t));
}

RingPtr product_ring(const RingPtr& left, const RingPtr& right) {
  const std::size_t m = right->order();
  const std::size_t n = left->order() * m;
  if (n > kMaxOrder) throw std::invalid_argument("product ring exceeds 256 elements");
  auto split = [m](std::size_t e) { return std::pair{static_cast<Element>(e / m), static_cast<Element>(e % m)}; };
  auto join = [m](Element a, Element b) { return static_cast<Element>(a * m + b); };

  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto [a1, b1] = split(x);
    t.neg[x] = join(left->neg(a1), right->neg(b1));
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a2, b2] = split(y);
      t.add[x * n + y] = join(left->add(a1, a2), right->add(b1, b2));
      t.mul[x * n + y] = join(left->mul(a1, a2), right->mul(b1, b2));
    }
  }
  t.zero = join(left->zero(), right->zero());
  t.one = join(left->one(), right->one());
  return FiniteRing::from_tables(left->label() + " x " + right->label(), std::move(t));
}

bool RingHom::is_surjective() const {
  ElementSet image;
  for (auto e : map) image.insert(e);
  return image.size() == target->order();
}

bool RingHom::is_injective() const {
  ElementSet image;
  for (auto e : map) image.insert(e);
  return image.size() == source->order();
}

std::string AxiomReport::describe() const {
  if (ok) return "ok";
  std::ostringstream out;
  out << axiom << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
  out << ')';
  return out.str();
}

namespace {

AxiomReport fail(std::string axiom, std::vector<Element> witness) {
  return AxiomReport{false, std::move(axiom), std::move(witness)};
}

}  // namespace

AxiomReport validate_axioms(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  const Element z = r.zero();
  const Element o = r.one();

  for (Element a = 0; a < n; ++a) {
    if (r.add(a, z) != a || r.add(z, a) != a) return fail("additive identity", {a});
    if (r.add(a, r.neg(a)) != z) return fail("additive inverse", {a});
    if (r.mul(a, o) != a || r.mul(o, a) != a) return fail("multiplicative identity", {a});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", {a, b});
      if (r.mul(a, b) != r.mul(b, a)) return fail("multiplicative commutativity", {a, b});
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab_sum = r.add(a, b);
      const Element ab_prod = r.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return fail("additive associativity", {a, b, c});
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c))) return fail("multiplicative associativity", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c))) return fail("distributivity", {a, b, c});
      }
    }
  if (n > 1 && o == z) return fail("one != zero", {o});
  return {};
}

AxiomReport validate_hom(const RingHom& h) {
  const FiniteRing& s = *h.source;
  const FiniteRing& t = *h.target;
  if (h.map.size() != s.order()) return fail("map is total", {});
  for (auto e : h.map)
    if (e >= t.order()) return fail("map lands in target", {e});
  if (h(s.zero()) != t.zero()) return fail("preserves zero", {s.zero()});
  if (h(s.one()) != t.one()) return fail("preserves one", {s.one()});
  const auto n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (h(s.add(a, b)) != t.add(h(a), h(b))) return fail("preserves add", {a, b});
      if (h(s.mul(a, b)) != t.mul(h(a), h(b))) return fail("preserves mul", {a, b});
    }
  return {};
}

}  // namespace rstar
