// Finite commutative rings used as domains: Z_n, GF(p^r) and finite products.
//
// Elements are addressed by a canonical index in [0, order). Z_n uses the
// residue itself, GF(p^r) uses sum c_i p^i over the coefficient vector of the
// polynomial representative, and a product uses mixed radix with the first
// factor least significant. Index 0 is always the additive identity.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zdkit/exact.hpp"

namespace zdkit {

/// Exhaustive verification caps the ring order; ZDKIT_MAX_ORDER overrides it in the CLI.
inline constexpr std::uint64_t kDefaultMaxOrder = 1'000'000;

struct Element {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Ring descriptor. The GF modulus is never stored here; it is re-derived.
struct RingSpec {
  // No member initializers: they would make the variant below non-default-constructible.
  struct Zn {
    std::uint64_t n;
  };
  struct GF {
    std::uint64_t p;
    std::uint32_t r;
  };
  struct Product {
    std::vector<RingSpec> factors;
  };

  std::variant<Zn, GF, Product> kind;

  static RingSpec zn(std::uint64_t n) { return RingSpec{Zn{n}}; }
  static RingSpec gf(std::uint64_t p, std::uint32_t r) { return RingSpec{GF{p, r}}; }
  static RingSpec product(std::vector<RingSpec> factors) {
    return RingSpec{Product{std::move(factors)}};
  }
};

inline bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind.index() != b.kind.index()) return false;
  if (auto* z = std::get_if<RingSpec::Zn>(&a.kind)) return z->n == std::get<RingSpec::Zn>(b.kind).n;
  if (auto* g = std::get_if<RingSpec::GF>(&a.kind)) {
    const auto& h = std::get<RingSpec::GF>(b.kind);
    return g->p == h.p && g->r == h.r;
  }
  const auto& fa = std::get<RingSpec::Product>(a.kind).factors;
  const auto& fb = std::get<RingSpec::Product>(b.kind).factors;
  return fa == fb;
}

inline std::string describe(const RingSpec& spec) {
  if (auto* z = std::get_if<RingSpec::Zn>(&spec.kind)) return "Z_" + std::to_string(z->n);
  if (auto* g = std::get_if<RingSpec::GF>(&spec.kind)) {
    return g->r == 1 ? "GF(" + std::to_string(g->p) + ")"
                     : "GF(" + std::to_string(g->p) + "^" + std::to_string(g->r) + ")";
  }
  std::string out;
  for (const auto& f : std::get<RingSpec::Product>(spec.kind).factors) {
    if (!out.empty()) out += " x ";
    out += describe(f);
  }
  return out;
}

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Trial-division factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b over Z_p.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t r = f.size() - 1;
  for (std::size_t d = 1; d <= r / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

/// Monic irreducible of degree r, smallest in lexicographic order of
/// (c_0, c_1, ..., c_{r-1}).
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  Poly f(r + 1, 0);
  f[r] = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    std::size_t i = r;  // odometer: c_{r-1} varies fastest
    while (i > 0) {
      --i;
      if (++f[i] < p) break;
      f[i] = 0;
      if (i == 0) throw InternalInconsistency("no irreducible polynomial found");
    }
  }
}

}  // namespace detail

class Ring {
 public:
  enum class Kind { zn, gf, product };

  static Ring make(const RingSpec& spec, std::uint64_t max_order = kDefaultMaxOrder) {
    Ring ring;
    ring.spec_ = spec;
    if (auto* z = std::get_if<RingSpec::Zn>(&spec.kind)) {
      if (z->n < 1) throw DomainError("Z_n requires n >= 1");
      check_cap(z->n, max_order);
      ring.kind_ = Kind::zn;
      ring.order_ = static_cast<std::uint32_t>(z->n);
      ring.base_ = ring.order_;
      ring.characteristic_ = z->n;
      ring.radices_ = {ring.order_};
      ring.one_ = Element{z->n == 1 ? 0u : 1u};
    } else if (auto* g = std::get_if<RingSpec::GF>(&spec.kind)) {
      if (g->p > max_order) check_cap(g->p, max_order);
      if (!detail::is_prime(g->p)) throw DomainError("GF characteristic " + std::to_string(g->p) + " is not prime");
      if (g->r < 1) throw DomainError("GF degree must be >= 1");
      std::uint64_t order = 1;
      for (std::uint32_t i = 0; i < g->r; ++i) {
        order *= g->p;
        check_cap(order, max_order);
      }
      ring.kind_ = Kind::gf;
      ring.order_ = static_cast<std::uint32_t>(order);
      ring.base_ = static_cast<std::uint32_t>(g->p);
      ring.degree_ = g->r;
      ring.characteristic_ = g->p;
      ring.radices_.assign(g->r, ring.base_);
      ring.modulus_ = detail::smallest_irreducible(ring.base_, g->r);
      ring.one_ = Element{1};
    } else {
      const auto& factors = std::get<RingSpec::Product>(spec.kind).factors;
      if (factors.empty()) throw DomainError("product ring needs at least one factor");
      ring.kind_ = Kind::product;
      std::uint64_t order = 1;
      std::uint64_t stride = 1;
      std::uint64_t one = 0;
      ring.characteristic_ = 1;
      for (const auto& f : factors) {
        Ring sub = make(f, max_order);
        order *= sub.order();
        check_cap(order, max_order);
        one += stride * sub.one().index;
        stride *= sub.order();
        ring.characteristic_ = std::lcm(ring.characteristic_, sub.characteristic());
        ring.radices_.insert(ring.radices_.end(), sub.radices_.begin(), sub.radices_.end());
        ring.factors_.push_back(std::move(sub));
      }
      ring.order_ = static_cast<std::uint32_t>(order);
      ring.one_ = Element{static_cast<std::uint32_t>(one)};
    }
    return ring;
  }

  Kind kind() const { return kind_; }
  const RingSpec& spec() const { return spec_; }
  std::string name() const { return describe(spec_); }
  std::uint32_t order() const { return order_; }
  std::uint64_t characteristic() const { return characteristic_; }
  /// GF only: monic modulus, low degree first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Product only: the top-level factor rings.
  const std::vector<Ring>& factors() const { return factors_; }

  bool is_field() const {
    switch (kind_) {
      case Kind::zn: return detail::is_prime(order_);
      case Kind::gf: return true;
      case Kind::product: return factors_.size() == 1 && factors_.front().is_field();
    }
    return false;
  }

  Element zero() const { return Element{0}; }
  Element one() const { return one_; }

  Element element(std::uint64_t index) const {
    if (index >= order_) {
      throw DomainError("element index " + std::to_string(index) + " out of range for " + name());
    }
    return Element{static_cast<std::uint32_t>(index)};
  }

  Element add(Element x, Element y) const {
    check(x);
    check(y);
    if (kind_ == Kind::zn) {
      return Element{static_cast<std::uint32_t>((std::uint64_t{x.index} + y.index) % order_)};
    }
    std::uint64_t a = x.index, b = y.index, out = 0, weight = 1;
    for (std::uint32_t r : radices_) {
      std::uint64_t s = a % r + b % r;
      if (s >= r) s -= r;
      out += s * weight;
      weight *= r;
      a /= r;
      b /= r;
    }
    return Element{static_cast<std::uint32_t>(out)};
  }

  Element neg(Element x) const {
    check(x);
    std::uint64_t a = x.index, out = 0, weight = 1;
    for (std::uint32_t r : radices_) {
      std::uint64_t d = a % r;
      out += (d == 0 ? 0 : r - d) * weight;
      weight *= r;
      a /= r;
    }
    return Element{static_cast<std::uint32_t>(out)};
  }

  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    check(x);
    check(y);
    switch (kind_) {
      case Kind::zn:
        return Element{static_cast<std::uint32_t>(std::uint64_t{x.index} * y.index % order_)};
      case Kind::gf:
        return gf_mul(x, y);
      case Kind::product: {
        auto xs = split(x), ys = split(y);
        for (std::size_t i = 0; i < factors_.size(); ++i) xs[i] = factors_[i].mul(xs[i], ys[i]);
        return join(xs);
      }
    }
    return Element{};
  }

  bool is_unit(Element x) const {
    check(x);
    switch (kind_) {
      case Kind::zn: return std::gcd(x.index, order_) == 1;
      case Kind::gf: return x.index != 0;
      case Kind::product: {
        auto xs = split(x);
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (!factors_[i].is_unit(xs[i])) return false;
        }
        return true;
      }
    }
    return false;
  }

  Element pow(Element x, std::uint64_t e) const {
    Element result = one_;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  /// k * x in the additive group.
  Element scale(Element x, std::uint64_t k) const {
    Element result = zero();
    while (k > 0) {
      if (k & 1) result = add(result, x);
      x = add(x, x);
      k >>= 1;
    }
    return result;
  }

  /// Residue / coefficient vector / concatenated factor coordinates.
  std::vector<std::uint32_t> coordinates(Element x) const {
    check(x);
    if (kind_ == Kind::zn) return {x.index};
    if (kind_ == Kind::gf) return digits(x.index);
    std::vector<std::uint32_t> out;
    auto xs = split(x);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      auto c = factors_[i].coordinates(xs[i]);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

  Element from_coordinates(std::span<const std::uint32_t> coords) const {
    if (kind_ == Kind::zn) {
      if (coords.size() != 1 || coords[0] >= order_) throw DomainError("bad Z_n coordinates");
      return Element{coords[0]};
    }
    if (kind_ == Kind::gf) {
      if (coords.size() != degree_) throw DomainError("bad GF coordinate length");
      std::uint64_t index = 0;
      for (std::size_t i = degree_; i-- > 0;) {
        if (coords[i] >= base_) throw DomainError("GF coefficient out of range");
        index = index * base_ + coords[i];
      }
      return Element{static_cast<std::uint32_t>(index)};
    }
    std::vector<Element> parts;
    std::size_t offset = 0;
    for (const auto& f : factors_) {
      std::size_t width = f.coordinate_width();
      if (offset + width > coords.size()) throw DomainError("bad product coordinate length");
      parts.push_back(f.from_coordinates(coords.subspan(offset, width)));
      offset += width;
    }
    if (offset != coords.size()) throw DomainError("bad product coordinate length");
    return join(parts);
  }

  std::size_t coordinate_width() const {
    if (kind_ == Kind::zn) return 1;
    if (kind_ == Kind::gf) return degree_;
    std::size_t w = 0;
    for (const auto& f : factors_) w += f.coordinate_width();
    return w;
  }

  /// Order of x in (R, +).
  std::uint64_t additive_order(Element x) const {
    check(x);
    std::uint64_t a = x.index, result = 1;
    for (std::uint32_t r : radices_) {
      std::uint64_t d = a % r;
      a /= r;
      result = std::lcm(result, r / std::gcd<std::uint64_t>(d, r));
    }
    return result;
  }

  /// Row of the addition table: out[x] = index of x + a, for x in index order.
  /// Walks the digits as an odometer instead of calling add() per element.
  std::vector<std::uint32_t> translates(Element a) const {
    check(a);
    std::vector<std::uint32_t> out(order_);
    if (kind_ == Kind::zn) {
      for (std::uint32_t x = 0; x < order_; ++x) out[x] = x < order_ - a.index ? x + a.index : x + a.index - order_;
      return out;
    }
    const std::size_t len = radices_.size();
    std::vector<std::uint32_t> shift(len), digit(len, 0);
    std::vector<std::uint64_t> weight(len);
    std::uint64_t rest = a.index, w = 1, cur = 0;
    for (std::size_t i = 0; i < len; ++i) {
      shift[i] = static_cast<std::uint32_t>(rest % radices_[i]);
      rest /= radices_[i];
      weight[i] = w;
      cur += shift[i] * w;
      w *= radices_[i];
    }
    for (std::uint32_t x = 0; x < order_; ++x) {
      out[x] = static_cast<std::uint32_t>(cur);
      for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t r = radices_[i];
        // digit i of the sum goes from (d + s) mod r to (d + 1 + s) mod r
        const bool wraps = digit[i] + shift[i] + 1 == r;
        if (++digit[i] < r) {
          cur = wraps ? cur - (r - 1) * weight[i] : cur + weight[i];
          break;
        }
        digit[i] = 0;
        // digit of the sum returns from (r - 1 + s) mod r to s
        cur = shift[i] == 0 ? cur - (r - 1) * weight[i] : cur + weight[i];
      }
    }
    return out;
  }

  /// Smallest-index generator of (R, +), if the additive group is cyclic.
  std::optional<Element> additive_generator() const {
    for (std::uint32_t i = 0; i < order_; ++i) {
      if (additive_order(Element{i}) == order_) return Element{i};
    }
    return std::nullopt;
  }

  /// Factor components of x (product rings only).
  std::vector<Element> split(Element x) const {
    std::vector<Element> out;
    std::uint32_t a = x.index;
    for (const auto& f : factors_) {
      out.push_back(Element{a % f.order()});
      a /= f.order();
    }
    return out;
  }

  Element join(std::span<const Element> parts) const {
    std::uint64_t index = 0, stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      index += stride * parts[i].index;
      stride *= factors_[i].order();
    }
    return Element{static_cast<std::uint32_t>(index)};
  }

 private:
  static void check_cap(std::uint64_t order, std::uint64_t max_order) {
    if (order > max_order || order > std::numeric_limits<std::uint32_t>::max()) {
      throw DomainError("ring order exceeds the exhaustive-verification cap of " + std::to_string(max_order));
    }
  }

  void check(Element x) const {
    if (x.index >= order_) {
      throw DomainError("element index " + std::to_string(x.index) + " out of range for " + name());
    }
  }

  std::vector<std::uint32_t> digits(std::uint32_t index) const {
    std::vector<std::uint32_t> c(degree_);
    for (auto& d : c) {
      d = index % base_;
      index /= base_;
    }
    return c;
  }

  Element gf_mul(Element x, Element y) const {
    auto a = digits(x.index), b = digits(y.index);
    detail::Poly prod(2 * degree_ - 1, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < degree_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % base_);
      }
    }
    auto rem = degree_ == 1 ? prod : detail::poly_mod(prod, modulus_, base_);
    std::uint64_t index = 0;
    for (std::size_t i = rem.size(); i-- > 0;) index = index * base_ + rem[i];
    return Element{static_cast<std::uint32_t>(index)};
  }

  Kind kind_ = Kind::zn;
  RingSpec spec_;
  std::uint32_t order_ = 1;
  std::uint64_t characteristic_ = 1;
  std::uint32_t base_ = 1;    // n for Z_n, p for GF
  std::uint32_t degree_ = 1;  // r for GF
  std::vector<std::uint32_t> modulus_;
  std::vector<Ring> factors_;
  std::vector<std::uint32_t> radices_;  // additive digit moduli, least significant first
  Element one_;
};

/// A cyclic multiplicative subgroup, elements listed as successive powers of the generator.
struct Subgroup {
  std::vector<Element> elements;
  std::vector<Element> generators;

  std::size_t size() const { return elements.size(); }
  bool contains(Element x) const { return std::find(elements.begin(), elements.end(), x) != elements.end(); }
};

/// Multiplicative order of x, or 0 if x is not a unit.
inline std::uint64_t multiplicative_order(const Ring& ring, Element x) {
  if (!ring.is_unit(x)) return 0;
  std::uint64_t k = 1;
  for (Element y = x; y != ring.one(); y = ring.mul(y, x)) ++k;
  return k;
}

inline bool has_exact_order(const Ring& ring, Element x, std::uint64_t e,
                            std::span<const std::uint64_t> e_primes) {
  if (ring.pow(x, e) != ring.one()) return false;
  for (std::uint64_t q : e_primes) {
    if (ring.pow(x, e / q) == ring.one()) return false;
  }
  return true;
}

inline Subgroup subgroup_generated_by(const Ring& ring, Element g) {
  if (!ring.is_unit(g)) throw DomainError("subgroup generator must be a unit");
  Subgroup out;
  out.generators = {g};
  Element y = ring.one();
  do {
    out.elements.push_back(y);
    y = ring.mul(y, g);
  } while (y != ring.one());
  return out;
}

/// All units of exact multiplicative order e, ascending by index (single-component rings).
inline std::vector<Element> order_e_elements(const Ring& ring, std::uint64_t e) {
  if (e < 1) throw DomainError("subgroup order must be >= 1");
  auto primes = detail::prime_divisors(e);
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    Element x{i};
    if (ring.is_unit(x) && has_exact_order(ring, x, e, primes)) out.push_back(x);
  }
  return out;
}

namespace detail {

inline std::optional<Element> smallest_of_order(const Ring& ring, std::uint64_t e) {
  if (ring.kind() == Ring::Kind::product) {
    std::vector<Element> parts;
    for (const auto& f : ring.factors()) {
      auto g = smallest_of_order(f, e);
      if (!g) return std::nullopt;
      parts.push_back(*g);
    }
    return ring.join(parts);
  }
  auto primes = prime_divisors(e);
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    Element x{i};
    if (ring.is_unit(x) && has_exact_order(ring, x, e, primes)) return x;
  }
  return std::nullopt;
}

}  // namespace detail

/// The order-e subgroup generated by the smallest-index element of exact order e
/// (componentwise for products).
inline Subgroup find_order_e_subgroup(const Ring& ring, std::uint64_t e) {
  if (e < 1) throw DomainError("subgroup order must be >= 1");
  auto g = detail::smallest_of_order(ring, e);
  if (!g) {
    throw DomainError("no element of multiplicative order " + std::to_string(e) + " in " + ring.name());
  }
  Subgroup out = subgroup_generated_by(ring, *g);
  if (out.size() != e) throw InternalInconsistency("generated subgroup has wrong order");
  return out;
}

/// (G - 1) \ {0} contained in the unit group.
inline bool check_unit_difference(const Ring& ring, const Subgroup& group) {
  for (Element g : group.elements) {
    if (g == ring.one()) continue;
    if (!ring.is_unit(ring.sub(g, ring.one()))) return false;
  }
  return true;
}

/// Membership of -1. Under the unit-difference condition this must coincide with
/// "|G| even or characteristic 2".
inline bool contains_minus_one(const Ring& ring, const Subgroup& group) {
  const bool member = group.contains(ring.neg(ring.one()));
  if (check_unit_difference(ring, group)) {
    const bool predicted = group.size() % 2 == 0 || ring.characteristic() == 2;
    if (predicted != member) {
      throw InternalInconsistency("-1 membership disagrees with the parity predicate in " + ring.name());
    }
  }
  return member;
}

}  // namespace zdkit
