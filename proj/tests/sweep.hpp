// Enumerates the constructions the property suites and the acceptance binary
// sweep over: coset ZDB functions on Z_n and on products of fields, their
// change points at 0, and the stored Type-A bases with their empty-D change
// points.
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zdkit/zdkit.hpp"

namespace zdkit::sweep {

struct Construction {
  std::string label;
  FunctionTable table;
  std::optional<ChangePointResult> change_point;  // set when `table` came from a change point
};

inline std::string fixture_dir() { return ZDKIT_FIXTURE_DIR; }

inline std::uint64_t gcd_p_minus_one(std::uint64_t n) {
  std::uint64_t g = 0;
  for (auto p : detail::prime_divisors(n)) g = std::gcd(g, p - 1);
  return g;
}

inline std::uint64_t gcd_q_minus_one(std::uint64_t n) {
  std::uint64_t g = 0;
  for (auto [p, r] : detail::factorize(n)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    g = std::gcd(g, q - 1);
  }
  return g;
}

/// Orders swept in full are <= dense_limit; above it only a spread of orders
/// up to n_max is visited (every stride-th odd n plus a few prime powers).
struct SweepPlan {
  std::uint64_t dense_limit = 300;
  std::uint64_t n_max = 2000;
  std::uint64_t stride = 74;
  bool include_fixtures = true;
};

inline std::vector<std::uint64_t> sweep_orders(const SweepPlan& plan) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n <= std::min(plan.dense_limit, plan.n_max); n += 2) out.push_back(n);
  for (std::uint64_t n = plan.dense_limit + 1 + (plan.dense_limit % 2); n <= plan.n_max; n += plan.stride) {
    out.push_back(n | 1);
  }
  for (std::uint64_t n : {625u, 729u, 1331u, 1369u, 1681u, 1849u, 1999u}) {
    if (n > plan.dense_limit && n <= plan.n_max) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void for_each_construction(const SweepPlan& plan, const std::function<void(const Construction&)>& visit) {
  auto with_change_point = [&](const std::string& label, const CosetZdb& z) {
    visit({label, z.table, std::nullopt});
    if (z.table.m() >= 2) {
      auto cp = change_point_zero(z);
      visit({label + " change point", cp.table, cp});
    }
  };
  for (std::uint64_t n : sweep_orders(plan)) {
    const std::uint64_t g = gcd_p_minus_one(n);
    const bool dense = n <= plan.dense_limit;
    for (std::uint64_t e = 2; e <= g; ++e) {
      if (g % e || (!dense && e != g && e != 2)) continue;
      with_change_point("Z_" + std::to_string(n) + " e=" + std::to_string(e), family_zn(n, e));
    }
    // fields of prime-power order where it differs from Z_n
    const auto factors = prime_power_factors(n);
    bool has_extension = false;
    for (auto f : factors) has_extension |= f.r > 1;
    if (has_extension) {
      const std::uint64_t gq = gcd_q_minus_one(n);
      for (std::uint64_t e = 2; e <= gq; ++e) {
        if (gq % e || (!dense && e != gq && e != 2)) continue;
        with_change_point("F(" + std::to_string(n) + ") e=" + std::to_string(e), family_product_fields(factors, e));
      }
    }
  }
  // characteristic 2
  for (std::uint32_t r = 2; (std::uint64_t{1} << r) <= std::min<std::uint64_t>(plan.n_max, 1024); ++r) {
    const std::uint64_t n = std::uint64_t{1} << r;
    if (n > plan.dense_limit && r != 10) continue;
    const std::vector<PrimePower> f{{2, r}};
    for (std::uint64_t e = 3; e < n; e += 2) {
      if ((n - 1) % e) continue;
      with_change_point("GF(" + std::to_string(n) + ") e=" + std::to_string(e), family_product_fields(f, e));
    }
  }
  if (!plan.include_fixtures) return;
  const Json manifest = read_json_file(fixture_dir() + "/typea_manifest.json");
  for (const auto& t : manifest.at("tables")) {
    const std::string file = t.at("file").get<std::string>();
    FunctionTable base = table_from_json(read_json_file(fixture_dir() + "/" + file));
    if (base.n() > plan.n_max) continue;
    visit({file, base, std::nullopt});
    const Element a0 = base.domain().zero();
    if (auto a = find_empty_d_point(base, a0)) {
      auto cp = change_point_general(base, a0, *a);
      visit({file + " empty-D change point", cp.table, cp});
    }
  }
  visit({"t1_source.json", table_from_json(read_json_file(fixture_dir() + "/t1_source.json")), std::nullopt});
}

/// Failures of the structural identities for one construction; empty means all hold.
/// Code distances are brute force over all word pairs, so only for n <= code_limit.
inline std::vector<std::string> property_failures(const Construction& c, std::uint64_t code_limit) {
  std::vector<std::string> out;
  const FunctionTable& f = c.table;
  const Ring& ring = f.domain();
  const auto sp = zd_spectrum(f);
  const auto st = preimage_stats(f);
  const auto id = evaluate_identities(f, sp, st);
  if (!id.counting_identity) out.push_back("sum r(r-1) != sum lambda");
  if (!id.square_identity) out.push_back("sum r^2 != (n-1) lambda_bar + n");
  if (!id.tightness_matches_ab) out.push_back("mean bound equality disagrees with almost-balance");
  for (std::uint32_t a = 1; a < f.n(); ++a) {
    if (sp.lambda[a] != sp.lambda[ring.neg(Element{a}).index]) {
      out.push_back("lambda(" + std::to_string(a) + ") != lambda(-" + std::to_string(a) + ")");
      break;
    }
  }
  if (c.change_point && c.change_point->predicted_S != sp.S) out.push_back("predicted S != brute-force S");
  if (f.m() >= 2 && f.n() <= code_limit) {
    const Code code = build_code(f);
    if (code.d != f.n() - sp.lambda_max) out.push_back("code d != n - lambda_max");
  }
  if (f.m() >= 2) {
    const DSS d = build_dss(f);
    for (std::uint32_t g = 1; g < f.n(); ++g) {
      if (d.coverage[g] != f.n() - sp.lambda[g]) {
        out.push_back("DSS coverage(" + std::to_string(g) + ") != n - lambda");
        break;
      }
    }
  }
  if (auto alpha = ring.additive_generator(); alpha && f.m() >= 2) {
    const FHS s = build_fhs(f, alpha);
    Element t_alpha = ring.zero();
    for (std::uint32_t t = 1; t < f.n(); ++t) {
      t_alpha = ring.add(t_alpha, *alpha);
      if (s.autocorrelation.H[t] != sp.lambda[t_alpha.index]) {
        out.push_back("H(" + std::to_string(t) + ") != lambda(t alpha)");
        break;
      }
    }
  }
  return out;
}

}  // namespace zdkit::sweep
