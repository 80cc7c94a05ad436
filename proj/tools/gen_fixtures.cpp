// Regenerates the data files under fixtures/.
//
//   gen_fixtures <fixtures-dir>
//
// Printed artifacts (codes C1-C4, sequence T1) are copied verbatim. The
// Type-A tables of order e*v with blocks of size e-1 are built here, not in the
// library: {0}, the cosets {0} x rH for |H| = e-1, and the transversals
// {(i, c u_i) : i != 0} for each c. Within-block differences cover (0, y) e-2
// times through the cosets, and (d, y), d != 0, e-2 times through the
// transversals as long as every u_i - u_j is a unit (then c (u_i - u_j) runs
// over R). Also asking u_i + u_{e-i} to be units keeps the transversals away
// from their negatives, so a change point with empty D exists.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "zdkit/zdkit.hpp"

namespace fs = std::filesystem;
using namespace zdkit;

namespace {

const char* kC1[] = {"12221212101", "21222120111", "22210111122", "22102211211", "12021121212", "21121112220",
                     "12112122021", "20111222112", "11122201122", "01211221221", "11212012212"};
const char* kC2[] = {"2304467A876319A158952", "3443078759A26895611A2", "042235A89193856A76714",
                     "43232A91158456779A860", "40324859A8727116A5693", "675A89801449736232A51",
                     "78A95814530192A342766", "A7819047386545291A326", "8591A15362468274039A7",
                     "7915843825760A316942A", "6A9874064711382A95235", "323429156610AA8987574",
                     "16857794803AA45223619", "985613252A8A494671037", "A96716A27328548430195",
                     "15A7623941A9264857308", "5679A34106982735A8241", "816A522A3957310786449",
                     "91786A73942560132458A", "5A169562A237139044878", "224031667A54975819A83"};
const char* kC3[] = {"01110101000", "10111010000", "11100000011", "11001100100", "01010010101", "10010001110",
                     "01001011010", "10000111001", "00011100011", "00100110110", "00101001101"};
const char* kC4[] = {"01110101010", "10111011000", "11101000011", "11011100100", "01110010101", "10010001111",
                     "01001011110", "11000111001", "00011110011", "10100110110", "00101101101"};
const std::uint32_t kT1[] = {1, 0,  0,  0,  1,  6,  7,  8,  4, 9,  10, 11, 1, 10, 11, 12, 2,  13,
                             14, 15, 4,  5,  6,  7,  4,  14, 15, 16, 3,  16, 13, 14, 3, 7,  8,  5,
                             1,  15, 16, 13, 2,  12, 9,  10, 3,  11, 12, 9,  2,  8, 5,  6};

template <std::size_t N>
void write_words(const fs::path& path, const char* const (&words)[N]) {
  std::ofstream out(path);
  for (const char* w : words) out << w << "\n";
}

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  out << j.dump() << "\n";
}

/// Order-(e-1) subgroup of `ring` meeting the unit-difference condition.
Subgroup small_subgroup(const Ring& ring, std::uint64_t k) {
  if (ring.kind() == Ring::Kind::product) return find_order_e_subgroup(ring, k);
  for (Element g : order_e_elements(ring, k)) {
    Subgroup h = subgroup_generated_by(ring, g);
    if (check_unit_difference(ring, h)) return h;
  }
  throw DomainError("no usable subgroup of order " + std::to_string(k) + " in " + ring.name());
}

bool pick(const Ring& r, std::uint64_t e, std::vector<Element>& u) {
  const std::size_t i = u.size() + 1;  // choosing u_i
  if (i == e) return true;
  const std::size_t partner = e - i;
  for (std::uint32_t x = 1; x < r.order(); ++x) {
    Element c{x};
    if (!r.is_unit(c)) continue;
    bool ok = true;
    for (std::size_t j = 1; j < i && ok; ++j) {
      ok = r.is_unit(r.sub(c, u[j - 1])) && (j != partner || r.is_unit(r.add(c, u[j - 1])));
    }
    if (ok && partner == i) ok = r.is_unit(r.add(c, c));
    if (!ok) continue;
    u.push_back(c);
    if (pick(r, e, u)) return true;
    u.pop_back();
  }
  return false;
}

/// Raw labels over Z_e x R, indexed by (i, r) -> i + e * r.
std::vector<std::uint64_t> extended_labels(const Ring& r, std::uint64_t e) {
  const Subgroup h = small_subgroup(r, e - 1);
  const CosetZdb cosets = coset_zdb(r, h);
  const std::uint64_t v = r.order(), classes = cosets.table.m();
  std::vector<Element> u;
  if (!pick(r, e, u)) throw DomainError("no transversal multipliers in " + r.name());
  std::vector<std::uint64_t> raw(e * v);
  for (std::uint64_t c = 0; c < v; ++c) {
    raw[e * c] = cosets.table.values()[c];
    for (std::uint64_t i = 1; i < e; ++i) {
      raw[i + e * r.mul(Element{static_cast<std::uint32_t>(c)}, u[i - 1]).index] = classes + c;
    }
  }
  return raw;
}

struct Entry {
  std::string file;
  std::uint64_t e, v;
  std::string over;  // "cyclic" or "product"
};

Entry emit_cyclic(const fs::path& dir, std::uint64_t e, std::uint64_t v) {
  if (std::gcd(e, v) != 1) throw DomainError("CRT needs gcd(e, v) = 1");
  Ring r = Ring::make(RingSpec::zn(v));
  auto pairs = extended_labels(r, e);
  const std::uint64_t n = e * v;
  std::vector<std::uint64_t> raw(n);
  for (std::uint64_t x = 0; x < n; ++x) raw[x] = pairs[(x % e) + e * (x % v)];
  auto table = FunctionTable::from_labels(Ring::make(RingSpec::zn(n)), raw);
  const std::string name = "typea_e" + std::to_string(e) + "_z" + std::to_string(n) + ".json";
  write_json(dir / name, table_to_json(table));
  return {name, e, v, "cyclic"};
}

Entry emit_product(const fs::path& dir, std::uint64_t e, const std::vector<PrimePower>& fields) {
  std::vector<RingSpec> specs;
  std::string tag;
  for (const auto& f : fields) {
    specs.push_back(RingSpec::gf(f.p, f.r));
    tag += "_f" + std::to_string(f.p) + (f.r > 1 ? "p" + std::to_string(f.r) : "");
  }
  Ring r = Ring::make(specs.size() == 1 ? specs[0] : RingSpec::product(specs));
  auto raw = extended_labels(r, e);
  std::vector<RingSpec> all{RingSpec::zn(e)};
  if (specs.size() == 1) {
    all.push_back(specs[0]);
  } else {
    all.push_back(RingSpec::product(specs));
  }
  auto table = FunctionTable::from_labels(Ring::make(RingSpec::product(all)), raw);
  const std::string name = "typea_e" + std::to_string(e) + "_z" + std::to_string(e) + tag + ".json";
  write_json(dir / name, table_to_json(table));
  return {name, e, r.order(), "product"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <fixtures-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  write_words(dir / "c1.txt", kC1);
  write_words(dir / "c2.txt", kC2);
  write_words(dir / "c3.txt", kC3);
  write_words(dir / "c4.txt", kC4);
  {
    std::ofstream out(dir / "t1.txt");
    out << sequence_to_text(kT1) << "\n";
  }
  std::vector<std::uint32_t> t1(std::begin(kT1), std::end(kT1));
  write_json(dir / "t1_source.json", table_to_json(FunctionTable::make(Ring::make(RingSpec::zn(52)), t1, 17)));
  // splitting position 0 off into its own class gives the Type-A base of T1
  t1[0] = 17;
  write_json(dir / "zdb_52_18_2.json", table_to_json(FunctionTable::make(Ring::make(RingSpec::zn(52)), t1, 18)));

  std::vector<Entry> entries;
  // cyclic bases, order e*v <= 500
  const std::map<std::uint64_t, std::vector<std::uint64_t>> cyclic = {
      {3, {7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97, 103, 109, 127, 133, 139, 151, 157, 163}},
      {4, {13, 37, 61, 73, 97, 109}},
      {5, {41, 61}},
      {6, {31, 61}},
      {7, {43}},
  };
  for (const auto& [e, vs] : cyclic) {
    for (auto v : vs) entries.push_back(emit_cyclic(dir, e, v));
  }
  // Z_e x product of fields, order e*v <= 500
  const std::vector<std::pair<std::uint64_t, std::vector<PrimePower>>> products = {
      {3, {{7, 1}}},           {3, {{13, 1}}},  {3, {{19, 1}}},  {3, {{5, 2}}},  {3, {{31, 1}}},
      {3, {{37, 1}}},          {3, {{43, 1}}},  {3, {{7, 2}}},   {3, {{61, 1}}}, {3, {{67, 1}}},
      {3, {{73, 1}}},          {3, {{79, 1}}},  {3, {{97, 1}}},  {3, {{103, 1}}}, {3, {{109, 1}}}, {3, {{11, 2}}}, {3, {{127, 1}}},
      {3, {{139, 1}}}, {3, {{151, 1}}}, {3, {{157, 1}}}, {3, {{163, 1}}}, {3, {{7, 1}, {13, 1}}},
      {3, {{7, 1}, {19, 1}}},  {5, {{41, 1}}},  {5, {{61, 1}}},  {5, {{3, 4}}},  {7, {{43, 1}}},
  };
  for (const auto& [e, fields] : products) entries.push_back(emit_product(dir, e, fields));

  Json manifest = Json::array();
  for (const auto& en : entries) {
    manifest.push_back(Json{{"file", en.file}, {"e", en.e}, {"v", en.v}, {"over", en.over}});
  }
  write_json(dir / "typea_manifest.json", Json{{"tables", manifest}});
  std::cout << "wrote " << entries.size() + 7 << " files to " << dir << "\n";
  return 0;
}
