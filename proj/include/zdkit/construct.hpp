// Coset ZDB functions and the change-point transformation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdkit/function_table.hpp"
#include "zdkit/ring.hpp"
#include "zdkit/spectrum.hpp"

namespace zdkit {

/// The distinct sets xG, labelled by ascending minimal canonical index, so {0}
/// carries label 0.
struct CosetLabeling {
  std::vector<std::vector<Element>> cosets;  // cosets[label], ascending
};

struct CosetZdb {
  Subgroup group;
  CosetLabeling labeling;
  FunctionTable table;
};

/// f(x) = label of xG. Requires (G - 1) \ {0} to consist of units, which makes
/// f an (n, (n-1)/k + 1, k-1) ZDB function of Type-A.
inline CosetZdb coset_zdb(const Ring& ring, const Subgroup& group) {
  const std::uint64_t n = ring.order(), k = group.size();
  if (k == 0 || !group.contains(ring.one())) throw DomainError("subgroup must contain the identity");
  if (!check_unit_difference(ring, group)) {
    throw DomainError("subgroup of order " + std::to_string(k) + " violates the unit-difference condition in " +
                      ring.name());
  }
  if ((n - 1) % k != 0) throw DomainError("subgroup order does not divide n - 1");

  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> label(n, kUnset);
  CosetLabeling labeling;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (label[x] != kUnset) continue;
    std::set<std::uint32_t> orbit;
    for (Element g : group.elements) orbit.insert(ring.mul(Element{x}, g).index);
    const auto id = static_cast<std::uint32_t>(labeling.cosets.size());
    std::vector<Element> coset;
    for (std::uint32_t y : orbit) {
      if (label[y] != kUnset) throw InternalInconsistency("cosets overlap");
      label[y] = id;
      coset.push_back(Element{y});
    }
    const std::size_t expected = x == 0 ? 1 : k;
    if (coset.size() != expected) throw InternalInconsistency("coset of unexpected size");
    labeling.cosets.push_back(std::move(coset));
  }
  const auto m = static_cast<std::uint32_t>(labeling.cosets.size());
  if (m != (n - 1) / k + 1) throw InternalInconsistency("wrong number of cosets");
  return CosetZdb{group, std::move(labeling), FunctionTable::make(ring, std::move(label), m)};
}

/// Which row of the change-point case table applies.
enum class SpectrumCase {
  constant,             // (n-1)/k = 1: {n}
  k_only,               // (n-1)/k = 2, no doubled differences: {k}
  k_minus_one_and_k,    // (n-1)/k > 2, no doubled differences: {k-1, k}
  k_plus_minus_one,     // every new difference doubled: {k-1, k+1}
  k_minus_one_to_plus,  // some but not all doubled: {k-1, k, k+1}
};

inline std::string_view to_string(SpectrumCase c) {
  switch (c) {
    case SpectrumCase::constant: return "{n}";
    case SpectrumCase::k_only: return "{k}";
    case SpectrumCase::k_minus_one_and_k: return "{k-1,k}";
    case SpectrumCase::k_plus_minus_one: return "{k-1,k+1}";
    case SpectrumCase::k_minus_one_to_plus: return "{k-1,k,k+1}";
  }
  return "?";
}

inline std::set<std::uint64_t> predicted_set(SpectrumCase c, std::uint64_t n, std::uint64_t k) {
  switch (c) {
    case SpectrumCase::constant: return {n};
    case SpectrumCase::k_only: return {k};
    case SpectrumCase::k_minus_one_and_k: return {k - 1, k};
    case SpectrumCase::k_plus_minus_one: return {k - 1, k + 1};
    case SpectrumCase::k_minus_one_to_plus: return {k - 1, k, k + 1};
  }
  return {};
}

struct ChangePointResult {
  FunctionTable table;
  Element a0;
  Element a;
  std::uint64_t k = 0;
  std::vector<Element> I_a;  // class of a in the base function
  std::vector<Element> D;    // (I(a) - a0) ∩ (a0 - I(a))
  std::vector<Element> E;    // (I(a) - a0) ∪ (a0 - I(a))
  SpectrumCase case_id = SpectrumCase::constant;
  std::set<std::uint64_t> predicted_S;
  ZDSpectrum spectrum;  // brute force, equal to predicted_S by construction
};

namespace detail {

/// g(a0) := f(a); the vacated label is deleted and higher labels shift down.
inline ChangePointResult apply_change_point(const FunctionTable& f, Element a0, Element a) {
  const Ring& ring = f.domain();
  const std::uint32_t vacated = f(a0), target = f(a);
  if (vacated == target) throw DomainError("a0 lies in I(a); the change point would not remove a class");
  for (std::uint32_t x = 0; x < f.n(); ++x) {
    if (x != a0.index && f.values()[x] == vacated) throw DomainError("a0 is not a singleton preimage");
  }
  std::vector<std::uint32_t> values = f.values();
  values[a0.index] = target;
  for (auto& v : values) {
    if (v > vacated) --v;
  }
  ChangePointResult out{FunctionTable::make(ring, std::move(values), f.m() - 1), a0, a};

  std::set<std::uint32_t> left, right;
  for (std::uint32_t x = 0; x < f.n(); ++x) {
    if (f.values()[x] != target) continue;
    out.I_a.push_back(Element{x});
    left.insert(ring.sub(Element{x}, a0).index);
    right.insert(ring.sub(a0, Element{x}).index);
  }
  out.k = out.I_a.size();
  for (auto x : left) {
    if (right.count(x)) out.D.push_back(Element{x});
  }
  std::set<std::uint32_t> both = left;
  both.insert(right.begin(), right.end());
  for (auto x : both) out.E.push_back(Element{x});
  return out;
}

inline void verify_prediction(ChangePointResult& r) {
  r.predicted_S = predicted_set(r.case_id, r.table.n(), r.k);
  r.spectrum = zd_spectrum(r.table);
  if (r.spectrum.S != r.predicted_S) {
    throw InternalInconsistency("change-point spectrum differs from the predicted case " +
                                std::string(to_string(r.case_id)) + " on " + r.table.domain().name());
  }
}

}  // namespace detail

/// f0(0) := f(1) on a coset ZDB; the case is decided by whether -1 lies in G.
inline ChangePointResult change_point_zero(const CosetZdb& base) {
  const Ring& ring = base.table.domain();
  const std::uint64_t n = ring.order(), k = base.group.size();
  if (base.table.m() < 2) throw DomainError("change point needs at least two classes");
  ChangePointResult r = detail::apply_change_point(base.table, ring.zero(), ring.one());
  const std::uint64_t classes = (n - 1) / k;
  if (classes == 1) {
    r.case_id = SpectrumCase::constant;
  } else if (contains_minus_one(ring, base.group)) {
    r.case_id = SpectrumCase::k_plus_minus_one;
  } else {
    r.case_id = classes == 2 ? SpectrumCase::k_only : SpectrumCase::k_minus_one_and_k;
  }
  detail::verify_prediction(r);
  return r;
}

/// g_a(a0) := f(a) on a Type-A ZDB whose singleton preimage is {a0}; the case
/// is decided by the doubled-difference set D.
inline ChangePointResult change_point_general(const FunctionTable& f, Element a0, Element a) {
  const Ring& ring = f.domain();
  ring.element(a0.index);
  ring.element(a.index);
  const auto spectrum = zd_spectrum(f);
  const auto stats = preimage_stats(f);
  const auto cls = classify(f, spectrum, stats);
  if (!cls.is_zdb || !cls.type_a) throw DomainError("change point needs a Type-A ZDB function");
  const std::uint64_t n = f.n(), k = *cls.type_a;
  if (stats.r[f(a0)] != 1) throw DomainError("a0 is not the singleton preimage point");
  if (spectrum.lambda_max != k - 1) {
    throw InternalInconsistency("Type-A ZDB base does not have lambda = k - 1");
  }

  ChangePointResult r = detail::apply_change_point(f, a0, a);
  const std::uint64_t classes = (n - 1) / k;
  if (classes == 1) {
    r.case_id = SpectrumCase::constant;
  } else if (r.D.empty()) {
    r.case_id = classes == 2 ? SpectrumCase::k_only : SpectrumCase::k_minus_one_and_k;
  } else if (r.D.size() == k) {
    r.case_id = SpectrumCase::k_plus_minus_one;
  } else {
    r.case_id = SpectrumCase::k_minus_one_to_plus;
  }
  detail::verify_prediction(r);
  return r;
}

/// Smallest a (ascending index) outside a0's class with an empty D, if any.
inline std::optional<Element> find_empty_d_point(const FunctionTable& f, Element a0) {
  const Ring& ring = f.domain();
  std::vector<bool> tried(f.m(), false);
  tried[f(a0)] = true;
  for (std::uint32_t x = 0; x < f.n(); ++x) {
    const std::uint32_t label = f.values()[x];
    if (tried[label]) continue;
    tried[label] = true;
    std::set<std::uint32_t> left;
    bool empty = true;
    for (std::uint32_t y = 0; y < f.n(); ++y) {
      if (f.values()[y] == label) left.insert(ring.sub(Element{y}, a0).index);
    }
    for (std::uint32_t y = 0; y < f.n() && empty; ++y) {
      if (f.values()[y] == label && left.count(ring.sub(a0, Element{y}).index)) empty = false;
    }
    if (empty) return Element{x};
  }
  return std::nullopt;
}

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t r = 1;
};

/// Coset ZDB on Z_n with |G| = e: n odd, e | p - 1 for every prime p | n.
/// Candidate subgroups are tried by ascending generator index until one meets
/// the unit-difference condition.
inline CosetZdb family_zn(std::uint64_t n, std::uint64_t e, std::uint64_t max_order = kDefaultMaxOrder) {
  if (n < 3 || n % 2 == 0) throw DomainError("Z_n family needs odd n >= 3");
  if (e < 1) throw DomainError("e must be >= 1");
  for (auto p : detail::prime_divisors(n)) {
    if ((p - 1) % e != 0) {
      throw DomainError(std::to_string(e) + " does not divide " + std::to_string(p) + " - 1 for prime " +
                        std::to_string(p) + " | " + std::to_string(n));
    }
  }
  Ring ring = Ring::make(RingSpec::zn(n), max_order);
  for (Element g : order_e_elements(ring, e)) {
    Subgroup group = subgroup_generated_by(ring, g);
    if (check_unit_difference(ring, group)) return coset_zdb(ring, group);
  }
  throw InternalInconsistency("no order-" + std::to_string(e) + " subgroup of Z_" + std::to_string(n) +
                              " meets the unit-difference condition");
}

/// Coset ZDB on a product of fields with componentwise order-e generators.
inline CosetZdb family_product_fields(std::span<const PrimePower> factors, std::uint64_t e,
                                      std::uint64_t max_order = kDefaultMaxOrder) {
  if (factors.empty()) throw DomainError("need at least one field factor");
  if (e < 1) throw DomainError("e must be >= 1");
  std::vector<RingSpec> specs;
  for (const auto& f : factors) {
    if (!detail::is_prime(f.p)) throw DomainError(std::to_string(f.p) + " is not prime");
    if (f.r < 1) throw DomainError("field degree must be >= 1");
    BigInt q = boost::multiprecision::pow(BigInt(f.p), f.r);
    if ((q - 1) % e != 0) {
      throw DomainError(std::to_string(e) + " does not divide " + std::to_string(f.p) + "^" + std::to_string(f.r) +
                        " - 1");
    }
    specs.push_back(RingSpec::gf(f.p, f.r));
  }
  Ring ring = Ring::make(RingSpec::product(std::move(specs)), max_order);
  Subgroup group = find_order_e_subgroup(ring, e);
  if (!check_unit_difference(ring, group)) {
    throw InternalInconsistency("componentwise subgroup failed the unit-difference condition");
  }
  return coset_zdb(ring, group);
}

/// n = prod p_i^{r_i} with one field per distinct prime.
inline std::vector<PrimePower> prime_power_factors(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (auto [p, r] : detail::factorize(n)) out.push_back({p, r});
  return out;
}

}  // namespace zdkit
