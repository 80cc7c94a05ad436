// Cyclic-shift codes from function tables, exhaustive metrics, and the
// constant-composition / constant-weight bounds.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zdkit/exact.hpp"
#include "zdkit/function_table.hpp"

namespace zdkit {

using Word = std::vector<std::uint32_t>;

struct Code {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t zero_label = 0;  // the symbol that does not count toward weight
  std::vector<Word> words;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> weights;
  std::vector<std::vector<std::uint64_t>> compositions;  // per word, counts of symbols 0..q-1
  bool constant_weight = false;
  bool constant_composition = false;

  std::size_t size() const { return words.size(); }
  std::uint64_t weight() const { return weights.empty() ? 0 : weights.front(); }
};

inline std::uint64_t hamming_distance(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Metrics by exhaustive pairwise comparison.
inline Code verify_code(std::vector<Word> words, std::uint32_t q, std::uint32_t zero_label = 0) {
  if (words.size() < 2) throw DomainError("a code needs at least two words");
  if (q < 2) throw DomainError("alphabet size must be >= 2");
  if (zero_label >= q) throw DomainError("zero label outside the alphabet");
  Code c;
  c.q = q;
  c.n = static_cast<std::uint32_t>(words.front().size());
  c.zero_label = zero_label;
  std::set<Word> distinct;
  for (const auto& w : words) {
    if (w.size() != c.n) throw DomainError("words have different lengths");
    for (auto s : w) {
      if (s >= q) throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
    }
    if (!distinct.insert(w).second) throw DomainError("duplicate codeword");
  }
  c.words = std::move(words);

  c.d = c.n;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    for (std::size_t j = i + 1; j < c.words.size(); ++j) {
      c.d = std::min(c.d, hamming_distance(c.words[i], c.words[j]));
    }
  }
  for (const auto& w : c.words) {
    std::vector<std::uint64_t> comp(q, 0);
    for (auto s : w) ++comp[s];
    c.weights.push_back(c.n - comp[zero_label]);
    c.compositions.push_back(std::move(comp));
  }
  c.constant_weight = std::all_of(c.weights.begin(), c.weights.end(), [&](auto w) { return w == c.weights[0]; });
  c.constant_composition =
      std::all_of(c.compositions.begin(), c.compositions.end(), [&](const auto& x) { return x == c.compositions[0]; });
  return c;
}

/// Row i is the table translated by the i-th element: (f(a_j + a_i))_j.
inline Code build_code(const FunctionTable& f, std::uint32_t zero_label = 0) {
  if (f.m() < 2) throw DomainError("constant function gives identical codewords");
  if (zero_label >= f.m()) throw DomainError("zero label outside the image");
  const Ring& ring = f.domain();
  std::vector<Word> words(f.n(), Word(f.n()));
  for (std::uint32_t i = 0; i < f.n(); ++i) {
    const auto row = ring.translates(Element{i});
    for (std::uint32_t j = 0; j < f.n(); ++j) words[i][j] = f.values()[row[j]];
  }
  return verify_code(std::move(words), f.m(), zero_label);
}

struct BoundCertificate {
  std::optional<Rational> bound;  // empty when the bound's denominator is not positive
  bool optimal = false;           // size equals the bound exactly
};

/// nd / (nd - n^2 + sum w_i^2) for constant-composition codes.
inline BoundCertificate ccc_bound(std::uint64_t n, std::uint64_t d, std::span<const std::uint64_t> composition,
                                  std::uint64_t size) {
  BigInt squares = 0;
  for (auto w : composition) squares += BigInt(w) * w;
  const BigInt num = BigInt(n) * d;
  const BigInt den = num - BigInt(n) * n + squares;
  BoundCertificate c;
  if (den <= 0) return c;
  c.bound = Rational(num, den);
  c.optimal = Rational(BigInt(size)) == *c.bound;
  return c;
}

/// nd / (nd - 2nw + q w^2 / (q - 1)) for q-ary constant-weight codes.
inline BoundCertificate cwc_certify(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t q,
                                    std::uint64_t size) {
  BoundCertificate c;
  if (q < 2) return c;
  const BigInt N(n), D(d), W(w), Q(q);
  const BigInt num = N * D * (Q - 1);
  const BigInt den = (N * D - 2 * N * W) * (Q - 1) + Q * W * W;
  if (den <= 0) return c;
  c.bound = Rational(num, den);
  c.optimal = Rational(BigInt(size)) == *c.bound;
  return c;
}

/// lambda (n-1)(m-1) == b0^2 m - 2 b0 n + n (n - m + 1).
inline bool zd_cwc_optimality(std::uint64_t n, std::uint64_t m, std::uint64_t lambda, std::uint64_t b0) {
  const BigInt N(n), M(m), L(lambda), B(b0);
  return L * (N - 1) * (M - 1) == B * B * M - 2 * B * N + N * (N - M + 1);
}

inline char encode_symbol(std::uint32_t s) {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('A' + (s - 10));
  throw DomainError("symbol " + std::to_string(s) + " has no single-character form");
}

inline std::uint32_t decode_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A' + 10);
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
  throw DomainError(std::string("invalid code symbol '") + c + "'");
}

inline std::string encode_word(const Word& w) {
  std::string out;
  for (auto s : w) out += encode_symbol(s);
  return out;
}

inline Word decode_word(std::string_view text) {
  Word w;
  for (char c : text) w.push_back(decode_symbol(c));
  return w;
}

}  // namespace zdkit
