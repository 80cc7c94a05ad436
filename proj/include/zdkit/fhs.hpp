// Frequency-hopping sequences: construction along a cyclic generator,
// Hamming autocorrelation, and the Lempel-Greenberger bound.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdkit/exact.hpp"
#include "zdkit/function_table.hpp"
#include "zdkit/ring.hpp"

namespace zdkit {

struct Autocorrelation {
  std::vector<std::uint64_t> H;  // H[t], t = 0..n-1; H[0] = n
  std::uint64_t H_max = 0;       // max over t = 1..n-1
};

/// H(t) = #{i : x_i = x_{i+t mod n}}, exhaustive.
inline Autocorrelation hamming_autocorrelation(std::span<const std::uint32_t> x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("autocorrelation needs a sequence of length >= 2");
  Autocorrelation a;
  a.H.assign(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + t < n ? i + t : i + t - n;
      h += x[i] == x[j];
    }
    a.H[t] = h;
  }
  a.H_max = *std::max_element(a.H.begin() + 1, a.H.end());
  return a;
}

struct LgBound {
  std::uint64_t epsilon = 0;
  Rational C;
  BigInt bound;  // ceil(C)
};

inline LgBound lg_bound(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 1) throw DomainError("Lempel-Greenberger bound needs n > 1 and m >= 1");
  LgBound b;
  b.epsilon = n % m;
  b.C = make_rational(BigInt(n - b.epsilon) * BigInt(n + b.epsilon - m), BigInt(m) * BigInt(n - 1));
  b.bound = ceil_of(b.C);
  return b;
}

struct FhsCertificate {
  Rational C;
  BigInt bound;
  bool optimal = false;
  std::string via;                   // "lg" or "ab"
  std::optional<bool> ab_predicate;  // lambda - lambda_bar < 1, AB sequences only
};

/// optimal iff 0 <= lambda - C < 1; for AB profiles also lambda - lambda_bar < 1,
/// which must agree because lambda_bar = C there.
inline FhsCertificate fhs_certify(std::uint64_t lambda, const Rational& lambda_bar, std::uint64_t n, std::uint64_t m,
                                  bool is_ab) {
  const LgBound lg = lg_bound(n, m);
  const Rational lam{BigInt(lambda)};
  if (lam < lg.C) {
    throw DomainError("lambda = " + std::to_string(lambda) + " lies below the bound " + to_fraction_string(lg.C));
  }
  FhsCertificate c;
  c.C = lg.C;
  c.bound = lg.bound;
  c.optimal = lam - lg.C < Rational(1);
  c.via = "lg";
  if (c.optimal != (BigInt(lambda) == lg.bound)) {
    throw InternalInconsistency("fractional-part test disagrees with ceil(C) = lambda");
  }
  if (is_ab) {
    c.ab_predicate = lam - lambda_bar < Rational(1);
    if (*c.ab_predicate != c.optimal) {
      throw InternalInconsistency("almost-balanced test disagrees with the Lempel-Greenberger test");
    }
    c.via = "ab";
  }
  return c;
}

struct FHS {
  std::vector<std::uint32_t> values;
  std::uint64_t n = 0, m = 0;
  std::optional<Element> alpha;  // generator used, for constructed sequences
  Autocorrelation autocorrelation;
  Rational lambda_bar;
  bool is_ab = false;
  FhsCertificate certificate;

  std::uint64_t H_max() const { return autocorrelation.H_max; }
};

namespace detail {

inline void finish_fhs(FHS& s) {
  s.n = s.values.size();
  s.autocorrelation = hamming_autocorrelation(s.values);
  std::uint64_t sum = 0;
  for (std::size_t t = 1; t < s.n; ++t) sum += s.autocorrelation.H[t];
  s.lambda_bar = Rational(BigInt(sum), BigInt(s.n - 1));
  std::vector<std::uint64_t> r(s.m, 0);
  for (auto v : s.values) ++r[v];
  const std::uint64_t k = s.n / s.m, eps = s.n % s.m;
  std::uint64_t low = 0, high = 0;
  for (auto x : r) {
    low += x == k;
    high += x == k + 1;
  }
  s.is_ab = low == s.m - eps && high == eps;
  s.certificate = fhs_certify(s.autocorrelation.H_max, s.lambda_bar, s.n, s.m, s.is_ab);
}

}  // namespace detail

/// T_i = f(i alpha). alpha defaults to 1 on Z_n and to the smallest additive
/// generator elsewhere; the domain's additive group must be cyclic.
inline FHS build_fhs(const FunctionTable& f, std::optional<Element> alpha = std::nullopt) {
  const Ring& ring = f.domain();
  if (f.n() < 2) throw DomainError("sequence needs n >= 2");
  if (!alpha) {
    alpha = ring.additive_generator();
    if (!alpha) throw DomainError("additive group of " + ring.name() + " is not cyclic");
  }
  ring.element(alpha->index);
  if (ring.additive_order(*alpha) != ring.order()) {
    throw DomainError("element " + std::to_string(alpha->index) + " does not generate the additive group of " +
                      ring.name());
  }
  FHS s;
  s.m = f.m();
  s.alpha = alpha;
  Element x = ring.zero();
  for (std::uint32_t i = 0; i < f.n(); ++i) {
    s.values.push_back(f(x));
    x = ring.add(x, *alpha);
  }
  detail::finish_fhs(s);
  return s;
}

/// External sequence; symbols are relabelled by first occurrence.
inline FHS analyze_sequence(std::span<const std::uint64_t> raw) {
  if (raw.size() < 2) throw DomainError("sequence needs length >= 2");
  auto [values, m] = compact_labels(raw);
  FHS s;
  s.values = std::move(values);
  s.m = m;
  detail::finish_fhs(s);
  return s;
}

}  // namespace zdkit
