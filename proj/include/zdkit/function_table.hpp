#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zdkit/ring.hpp"

namespace zdkit {

/// Relabels arbitrary symbols to 0..m-1 in order of first occurrence.
inline std::pair<std::vector<std::uint32_t>, std::uint32_t> compact_labels(std::span<const std::uint64_t> raw) {
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  std::vector<std::uint32_t> out;
  out.reserve(raw.size());
  for (std::uint64_t v : raw) {
    auto [it, inserted] = seen.emplace(v, static_cast<std::uint32_t>(seen.size()));
    out.push_back(it->second);
  }
  return {std::move(out), static_cast<std::uint32_t>(seen.size())};
}

/// A function from the additive group of a ring onto Z_m, stored by canonical index.
class FunctionTable {
 public:
  /// Values must lie in [0, m) and hit every symbol.
  static FunctionTable make(Ring domain, std::vector<std::uint32_t> values, std::uint32_t m) {
    if (values.size() != domain.order()) {
      throw DomainError("table has " + std::to_string(values.size()) + " values but " + domain.name() +
                        " has order " + std::to_string(domain.order()));
    }
    if (m == 0) throw DomainError("image size m must be positive");
    std::vector<bool> hit(m, false);
    for (std::uint32_t v : values) {
      if (v >= m) throw DomainError("value " + std::to_string(v) + " outside Z_" + std::to_string(m));
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw DomainError("values do not cover every symbol of Z_" + std::to_string(m));
    }
    FunctionTable f;
    f.domain_ = std::move(domain);
    f.values_ = std::move(values);
    f.m_ = m;
    return f;
  }

  /// Compacts arbitrary labels by first occurrence.
  static FunctionTable from_labels(Ring domain, std::span<const std::uint64_t> raw) {
    auto [values, m] = compact_labels(raw);
    return make(std::move(domain), std::move(values), m);
  }

  const Ring& domain() const { return domain_; }
  std::uint32_t n() const { return domain_.order(); }
  std::uint32_t m() const { return m_; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::uint32_t operator()(Element x) const { return values_.at(x.index); }

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.domain_.spec() == b.domain_.spec() && a.m_ == b.m_ && a.values_ == b.values_;
  }

 private:
  FunctionTable() : domain_(Ring::make(RingSpec::zn(1))) {}

  Ring domain_;
  std::vector<std::uint32_t> values_;
  std::uint32_t m_ = 0;
};

struct PreimageStats {
  std::vector<std::uint64_t> r;      // r[b] = |f^{-1}(b)|
  std::vector<std::uint64_t> sizes;  // the multiset SP(f), ascending
  std::uint64_t b0 = 0;              // r[0]

  /// "{1, 5^2}" style rendering of SP(f).
  std::string multiset() const {
    std::string out = "{";
    for (std::size_t i = 0; i < sizes.size();) {
      std::size_t j = i;
      while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
      if (i > 0) out += ", ";
      out += std::to_string(sizes[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out + "}";
  }
};

inline PreimageStats preimage_stats(const FunctionTable& f) {
  PreimageStats s;
  s.r.assign(f.m(), 0);
  for (std::uint32_t v : f.values()) ++s.r[v];
  s.sizes = s.r;
  std::sort(s.sizes.begin(), s.sizes.end());
  s.b0 = s.r[0];
  return s;
}

/// Preimage classes as element lists, indexed by label.
inline std::vector<std::vector<Element>> preimages(const FunctionTable& f) {
  std::vector<std::vector<Element>> out(f.m());
  for (std::uint32_t x = 0; x < f.n(); ++x) out[f.values()[x]].push_back(Element{x});
  return out;
}

}  // namespace zdkit
