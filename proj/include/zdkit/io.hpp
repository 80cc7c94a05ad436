// JSON and text formats for rings, tables, codes, DSSs and sequences.
#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdkit/codes.hpp"
#include "zdkit/dss.hpp"
#include "zdkit/exact.hpp"
#include "zdkit/fhs.hpp"
#include "zdkit/function_table.hpp"
#include "zdkit/ring.hpp"

namespace zdkit {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::uint64_t uint_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw DomainError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline std::vector<std::uint64_t> uint_array(const Json& v, const char* what) {
  if (!v.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) {
      throw DomainError(std::string(what) + " must hold non-negative integers");
    }
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

}  // namespace detail

// ---- rings ----------------------------------------------------------------

inline Json ring_to_json(const RingSpec& spec) {
  if (auto* z = std::get_if<RingSpec::Zn>(&spec.kind)) return Json{{"kind", "zn"}, {"n", z->n}};
  if (auto* g = std::get_if<RingSpec::GF>(&spec.kind)) return Json{{"kind", "gf"}, {"p", g->p}, {"r", g->r}};
  Json factors = Json::array();
  for (const auto& f : std::get<RingSpec::Product>(spec.kind).factors) factors.push_back(ring_to_json(f));
  return Json{{"kind", "product"}, {"factors", factors}};
}

inline RingSpec ring_from_json(const Json& j) {
  const Json& kind = detail::field(j, "kind");
  if (!kind.is_string()) throw DomainError("ring kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "zn") return RingSpec::zn(detail::uint_field(j, "n"));
  if (k == "gf") {
    const auto r = detail::uint_field(j, "r");
    if (r > 64) throw DomainError("GF degree too large");
    return RingSpec::gf(detail::uint_field(j, "p"), static_cast<std::uint32_t>(r));
  }
  if (k == "product") {
    const Json& fs = detail::field(j, "factors");
    if (!fs.is_array()) throw DomainError("product factors must be an array");
    std::vector<RingSpec> factors;
    for (const auto& f : fs) factors.push_back(ring_from_json(f));
    return RingSpec::product(std::move(factors));
  }
  throw DomainError("unknown ring kind \"" + k + "\"");
}

// ---- function tables --------------------------------------------------------

inline Json table_to_json(const FunctionTable& f) {
  return Json{{"group", ring_to_json(f.domain().spec())}, {"m", f.m()}, {"values", f.values()}};
}

inline FunctionTable table_from_json(const Json& j, std::uint64_t max_order = kDefaultMaxOrder) {
  Ring ring = Ring::make(ring_from_json(detail::field(j, "group")), max_order);
  const auto m = detail::uint_field(j, "m");
  if (m > ring.order()) throw DomainError("m exceeds the group order");
  auto raw = detail::uint_array(detail::field(j, "values"), "values");
  std::vector<std::uint32_t> values;
  values.reserve(raw.size());
  for (auto v : raw) {
    if (v >= m) throw DomainError("value " + std::to_string(v) + " outside Z_" + std::to_string(m));
    values.push_back(static_cast<std::uint32_t>(v));
  }
  return FunctionTable::make(std::move(ring), std::move(values), static_cast<std::uint32_t>(m));
}

// ---- codes --------------------------------------------------------------------

inline Json code_metrics_json(const Code& c) {
  Json j{{"q", c.q}, {"n", c.n}, {"M", c.size()}, {"d", c.d}, {"zero_label", c.zero_label},
         {"constant_weight", c.constant_weight}, {"constant_composition", c.constant_composition}};
  if (c.constant_weight) j["w"] = c.weight();
  if (c.constant_composition) {
    std::vector<std::uint64_t> sorted = c.compositions.front();
    j["composition"] = sorted;
  }
  return j;
}

inline Json code_to_json(const Code& c) {
  Json words = Json::array();
  for (const auto& w : c.words) words.push_back(w);
  return Json{{"q", c.q}, {"words", words}, {"metrics", code_metrics_json(c)}};
}

/// One word per line, symbols 0-9 then A-Z.
inline std::string code_to_text(const Code& c) {
  std::string out;
  for (const auto& w : c.words) out += encode_word(w) + "\n";
  return out;
}

/// Inverse of code_to_text; blank lines and '#' comments are ignored.
inline std::vector<Word> words_from_text(const std::string& text) {
  std::vector<Word> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string word;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') word += c;
    }
    if (!word.empty()) out.push_back(decode_word(word));
  }
  return out;
}

inline std::vector<Word> words_from_json(const Json& j) {
  const Json& ws = detail::field(j, "words");
  if (!ws.is_array()) throw DomainError("words must be an array");
  std::vector<Word> out;
  for (const auto& w : ws) {
    if (w.is_string()) {
      out.push_back(decode_word(w.get<std::string>()));
    } else {
      Word word;
      for (auto s : detail::uint_array(w, "word")) word.push_back(static_cast<std::uint32_t>(s));
      out.push_back(std::move(word));
    }
  }
  return out;
}

// ---- DSS ------------------------------------------------------------------------

inline Json dss_to_json(const DSS& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json block = Json::array();
    for (Element x : b) block.push_back(x.index);
    blocks.push_back(block);
  }
  Json cert{{"n", d.n}, {"q", d.q}, {"w", d.w}, {"tau", d.tau}, {"rho", d.rho}, {"perfect", d.perfect}};
  if (d.q >= 2) {
    const auto bound = dss_bound(d.n, d.q, d.rho);
    cert["bound"] = bound;
    cert["optimal"] = d.tau == bound;
  }
  return Json{{"group", ring_to_json(d.group)}, {"blocks", blocks}, {"certificate", cert}};
}

inline std::vector<std::vector<Element>> blocks_from_json(const Json& j) {
  const Json& bs = detail::field(j, "blocks");
  if (!bs.is_array()) throw DomainError("blocks must be an array");
  std::vector<std::vector<Element>> out;
  for (const auto& b : bs) {
    std::vector<Element> block;
    for (auto x : detail::uint_array(b, "block")) {
      if (x > 0xffffffffu) throw DomainError("element index too large");
      block.push_back(Element{static_cast<std::uint32_t>(x)});
    }
    out.push_back(std::move(block));
  }
  return out;
}

// ---- sequences ----------------------------------------------------------------------

inline Json fhs_to_json(const FHS& s) {
  Json cert{{"n", s.n},
            {"m", s.m},
            {"H_max", s.H_max()},
            {"lambda_bar", to_fraction_string(s.lambda_bar)},
            {"C", to_fraction_string(s.certificate.C)},
            {"bound", s.certificate.bound.str()},
            {"optimal", s.certificate.optimal},
            {"via", s.certificate.via},
            {"almost_balanced", s.is_ab}};
  Json j{{"values", s.values}};
  if (s.alpha) j["alpha"] = s.alpha->index;
  j["certificate"] = cert;
  return j;
}

/// Comma- or whitespace-separated decimal symbols; braces are ignored.
inline std::vector<std::uint64_t> sequence_from_text(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) throw DomainError("invalid sequence symbol \"" + token + "\"");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
      flush();
    }
  }
  flush();
  return out;
}

inline std::string sequence_to_text(std::span<const std::uint32_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

// ---- files ----------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace zdkit
