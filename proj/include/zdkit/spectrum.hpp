// Zero-difference spectra, classification, and the counting identities and
// bounds every function table satisfies.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdkit/exact.hpp"
#include "zdkit/function_table.hpp"

namespace zdkit {

struct ZDSpectrum {
  std::vector<std::uint64_t> lambda;  // lambda[a] for a = 1..n-1; lambda[0] holds n (trivial shift)
  std::set<std::uint64_t> S;
  std::uint64_t lambda_max = 0;
  std::uint64_t lambda_min = 0;
  std::uint64_t lambda_sum = 0;
  Rational lambda_bar;
};

/// lambda_a = |{x : f(x + a) = f(x)}| by exhaustive scan over all (x, a).
inline ZDSpectrum zd_spectrum(const FunctionTable& f) {
  const Ring& ring = f.domain();
  const std::uint32_t n = f.n();
  if (n < 2) throw DomainError("spectrum needs a domain of order >= 2");
  const auto& v = f.values();
  ZDSpectrum s;
  s.lambda.assign(n, 0);
  s.lambda[0] = n;
  for (std::uint32_t a = 1; a < n; ++a) {
    std::uint64_t count = 0;
    if (ring.kind() == Ring::Kind::zn) {
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t y = x + a < n ? x + a : x + a - n;
        count += v[y] == v[x];
      }
    } else {
      const auto row = ring.translates(Element{a});
      for (std::uint32_t x = 0; x < n; ++x) count += v[row[x]] == v[x];
    }
    s.lambda[a] = count;
    s.S.insert(count);
    s.lambda_sum += count;
  }
  s.lambda_max = *s.S.rbegin();
  s.lambda_min = *s.S.begin();
  s.lambda_bar = Rational(BigInt(s.lambda_sum), BigInt(n - 1));
  return s;
}

/// (n - eps)(n + eps - m) / (m (n - 1)), the balanced-preimage value of the mean spectrum.
inline Rational balanced_lambda(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 1) throw DomainError("balanced bound needs n >= 2 and m >= 1");
  const std::uint64_t eps = n % m;
  return make_rational(BigInt(n - eps) * BigInt(n + eps - m), BigInt(m) * BigInt(n - 1));
}

struct Classification {
  bool is_zdb = false;
  std::optional<std::uint64_t> type_a;  // e with SP = {1, e^(m-1)}
  std::optional<std::uint64_t> type_b;  // e with SP = {e+1, e^(m-1)}
  bool is_ab = false;
  std::uint64_t k = 0;        // floor(n / m)
  std::uint64_t epsilon = 0;  // n mod m
};

inline Classification classify(const FunctionTable& f, const ZDSpectrum& spectrum, const PreimageStats& stats) {
  Classification c;
  const std::uint64_t n = f.n(), m = f.m();
  const auto& s = stats.sizes;
  c.is_zdb = spectrum.S.size() == 1;
  c.k = n / m;
  c.epsilon = n % m;

  if (m >= 2 && s[0] == 1 && std::all_of(s.begin() + 1, s.end(), [&](auto x) { return x == s[1]; })) {
    c.type_a = s[1];
  }
  if (m == 1) {
    c.type_b = s[0] - 1;
  } else if (std::all_of(s.begin(), s.end() - 1, [&](auto x) { return x == s[0]; }) && s.back() == s[0] + 1) {
    c.type_b = s[0];
  }

  std::uint64_t low = 0, high = 0;
  for (auto x : s) {
    low += x == c.k;
    high += x == c.k + 1;
  }
  c.is_ab = low == m - c.epsilon && high == c.epsilon;
  return c;
}

struct IdentityReport {
  std::uint64_t n = 0, m = 0, epsilon = 0;

  BigInt sum_r_r_minus_1;  // sum_b r_b (r_b - 1)
  BigInt sum_lambda;       // sum over nonzero a of lambda_a
  bool counting_identity = false;

  BigInt sum_r_squared;
  Rational mean_identity_rhs;  // (n-1) * lambda_bar + n
  bool square_identity = false;

  Rational C;                    // balanced value (n-eps)(n+eps-m)/(m(n-1))
  BigInt max_bound;              // ceil(C + lambda - lambda_bar)
  bool max_bound_holds = false;  // lambda >= max_bound
  bool max_bound_tight = false;  // lambda == C + lambda - lambda_bar
  bool mean_bound_holds = false; // lambda_bar >= C
  bool mean_bound_tight = false; // lambda_bar == C
  bool tightness_matches_ab = false;

  BigInt delta_extremes;  // discriminant built from lambda and mu
  bool preimage_range_extremes = false;
  Rational delta_mean;    // discriminant built from lambda_bar
  bool preimage_range_mean = false;

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    if (!counting_identity) out.push_back("sum r_b(r_b-1) != sum lambda_a");
    if (!square_identity) out.push_back("sum r_b^2 != (n-1) lambda_bar + n");
    if (!max_bound_holds) out.push_back("lambda below ceil(C + lambda - lambda_bar)");
    if (!mean_bound_holds) out.push_back("lambda_bar below C");
    if (!tightness_matches_ab) out.push_back("bound equality disagrees with almost-balanced profile");
    if (!preimage_range_extremes) out.push_back("preimage size outside the (lambda, mu) range");
    if (!preimage_range_mean) out.push_back("preimage size outside the lambda_bar range");
    return out;
  }
  bool all_ok() const { return failures().empty(); }
};

/// Evaluates every identity and bound without throwing.
inline IdentityReport evaluate_identities(const FunctionTable& f, const ZDSpectrum& sp, const PreimageStats& st) {
  IdentityReport rep;
  const std::uint64_t n = f.n(), m = f.m();
  rep.n = n;
  rep.m = m;
  rep.epsilon = n % m;
  const bool is_ab = classify(f, sp, st).is_ab;

  for (auto r : st.r) {
    rep.sum_r_r_minus_1 += BigInt(r) * (BigInt(r) - 1);
    rep.sum_r_squared += BigInt(r) * r;
  }
  rep.sum_lambda = BigInt(sp.lambda_sum);
  rep.counting_identity = rep.sum_r_r_minus_1 == rep.sum_lambda;

  rep.mean_identity_rhs = Rational(BigInt(n - 1)) * sp.lambda_bar + Rational(BigInt(n));
  rep.square_identity = Rational(rep.sum_r_squared) == rep.mean_identity_rhs;

  const Rational lam(BigInt(sp.lambda_max));
  rep.C = balanced_lambda(n, m);
  const Rational shifted = rep.C + lam - sp.lambda_bar;
  rep.max_bound = ceil_of(shifted);
  rep.max_bound_holds = BigInt(sp.lambda_max) >= rep.max_bound;
  rep.max_bound_tight = lam == shifted;
  rep.mean_bound_holds = sp.lambda_bar >= rep.C;
  rep.mean_bound_tight = sp.lambda_bar == rep.C;
  rep.tightness_matches_ab = rep.mean_bound_tight == is_ab && rep.max_bound_tight == is_ab;

  // n - sqrt(D) <= m r_b <= n + sqrt(D)  <=>  (m r_b - n)^2 <= D (and D >= 0)
  const BigInt N(n), M(m), L(sp.lambda_max), MU(sp.lambda_min);
  rep.delta_extremes = (N + L * N - L) * M * M - (N * N + N + MU * N - MU) * M + N * N;
  const Rational lb = sp.lambda_bar;
  rep.delta_mean = (Rational(N) + lb * N - lb) * Rational(M * M) - (Rational(N * N + N) + lb * N - lb) * Rational(M) +
                   Rational(N * N);
  rep.preimage_range_extremes = rep.delta_extremes >= 0;
  rep.preimage_range_mean = rep.delta_mean >= 0;
  for (auto r : st.r) {
    BigInt dev = M * BigInt(r) - N;
    BigInt sq = dev * dev;
    if (sq > rep.delta_extremes) rep.preimage_range_extremes = false;
    if (Rational(sq) > rep.delta_mean) rep.preimage_range_mean = false;
  }
  return rep;
}

/// Same as evaluate_identities but any failure is reported as a bug.
inline IdentityReport check_identities(const FunctionTable& f, const ZDSpectrum& sp, const PreimageStats& st) {
  IdentityReport rep = evaluate_identities(f, sp, st);
  auto failed = rep.failures();
  if (!failed.empty()) {
    std::string msg = "identity check failed on " + f.domain().name() + ":";
    for (const auto& s : failed) msg += " [" + s + "]";
    throw InternalInconsistency(msg);
  }
  return rep;
}

}  // namespace zdkit
