// Difference systems of sets: preimage partitions, exhaustive coverage, and
// the SQUARE lower bound on the total block size.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "zdkit/exact.hpp"
#include "zdkit/function_table.hpp"
#include "zdkit/ring.hpp"

namespace zdkit {

struct DSS {
  RingSpec group;
  std::vector<std::vector<Element>> blocks;
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> w;         // block sizes, block order
  std::uint64_t tau = 0;                // sum of block sizes
  std::vector<std::uint64_t> coverage;  // coverage[g] for g = 1..n-1; coverage[0] unused
  std::uint64_t rho = 0;
  bool perfect = false;
};

namespace detail {

inline void finish_dss(DSS& d) {
  d.q = d.blocks.size();
  d.w.clear();
  d.tau = 0;
  for (const auto& b : d.blocks) {
    d.w.push_back(b.size());
    d.tau += b.size();
  }
  if (d.n < 2) {
    d.rho = 0;
    d.perfect = true;
    return;
  }
  d.rho = *std::min_element(d.coverage.begin() + 1, d.coverage.end());
  d.perfect = std::all_of(d.coverage.begin() + 1, d.coverage.end(), [&](auto c) { return c == d.rho; });
}

}  // namespace detail

/// Blocks given as canonical indices; checks disjointness and range.
inline DSS verify_dss(const Ring& group, const std::vector<std::vector<Element>>& blocks) {
  const std::uint32_t n = group.order();
  constexpr std::uint32_t kFree = 0xffffffffu;
  std::vector<std::uint32_t> owner(n, kFree);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    for (Element x : blocks[b]) {
      if (x.index >= n) {
        throw DomainError("element " + std::to_string(x.index) + " outside " + group.name());
      }
      if (owner[x.index] != kFree) throw DomainError("blocks overlap at element " + std::to_string(x.index));
      owner[x.index] = b;
    }
  }
  DSS d;
  d.group = group.spec();
  d.blocks = blocks;
  d.n = n;
  d.coverage.assign(n, 0);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    for (Element x : blocks[b]) {
      for (std::uint32_t c = 0; c < blocks.size(); ++c) {
        if (c == b) continue;
        for (Element y : blocks[c]) ++d.coverage[group.sub(x, y).index];
      }
    }
  }
  detail::finish_dss(d);
  return d;
}

/// D_b = f^{-1}(b). Coverage comes from all ordered pairs with different values,
/// so coverage(g) = n - lambda_g.
inline DSS build_dss(const FunctionTable& f) {
  const Ring& ring = f.domain();
  const auto& v = f.values();
  DSS d;
  d.group = ring.spec();
  d.n = f.n();
  for (auto& block : preimages(f)) d.blocks.push_back(std::move(block));
  d.coverage.assign(d.n, 0);
  for (std::uint32_t y = 0; y < d.n; ++y) {
    const auto minus_y = ring.translates(ring.neg(Element{y}));
    for (std::uint32_t x = 0; x < d.n; ++x) {
      if (v[x] != v[y]) ++d.coverage[minus_y[x]];
    }
  }
  detail::finish_dss(d);
  return d;
}

/// sqrt(SQUARE(rho (n-1) + ceil(rho (n-1) / (q-1)))), all in integers.
inline std::uint64_t dss_bound(std::uint64_t n, std::uint64_t q, std::uint64_t rho) {
  if (q < 2) throw DomainError("DSS bound needs q >= 2");
  if (n < 1) throw DomainError("DSS bound needs n >= 1");
  const BigInt base = BigInt(rho) * BigInt(n - 1);
  const BigInt total = base + (base + (q - 2)) / (q - 1);
  if (total > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) throw DomainError("DSS bound argument too large");
  return isqrt_ceil(to_u64(total));
}

struct DssCertificate {
  std::uint64_t n = 0, m = 0, lambda = 0;
  std::uint64_t rho = 0;
  std::uint64_t bound = 0;          // dss_bound(n, m, n - lambda)
  bool side_condition = false;      // n >= m lambda, recorded only
  bool optimal_iff = false;         // n >= m lambda - m + 2
  std::optional<bool> sufficient_improved;  // n >= k(k-1)/2 + 1, ZDB case only
  bool bound_agrees = false;        // optimal_iff == (bound == n)
};

/// Certificate for the partition DSS of a ZD function (tau = n, q = m, rho = n - lambda).
inline DssCertificate dss_certify(std::uint64_t n, std::uint64_t m, std::uint64_t lambda,
                                  std::optional<std::uint64_t> k = std::nullopt) {
  if (m < 2) throw DomainError("DSS certificate needs m >= 2");
  if (lambda > n) throw DomainError("lambda exceeds n");
  DssCertificate c;
  c.n = n;
  c.m = m;
  c.lambda = lambda;
  c.rho = n - lambda;
  c.bound = dss_bound(n, m, c.rho);
  c.side_condition = BigInt(n) >= BigInt(m) * lambda;
  c.optimal_iff = BigInt(n) + m >= BigInt(m) * lambda + 2;
  if (k) c.sufficient_improved = BigInt(n) * 2 >= BigInt(*k) * (BigInt(*k) - 1) + 2;
  c.bound_agrees = c.optimal_iff == (c.bound == n);
  return c;
}

}  // namespace zdkit
