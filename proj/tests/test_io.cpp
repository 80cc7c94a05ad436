#include <gtest/gtest.h>

#include "sweep.hpp"
#include "zdkit/cli.hpp"

using namespace zdkit;

TEST(Io, RingSpecRoundTrip) {
  for (auto spec : {RingSpec::zn(11), RingSpec::gf(3, 2),
                    RingSpec::product({RingSpec::zn(4), RingSpec::product({RingSpec::gf(7, 1), RingSpec::gf(2, 3)})})}) {
    EXPECT_EQ(ring_from_json(ring_to_json(spec)), spec);
  }
  EXPECT_THROW(ring_from_json(Json{{"kind", "torus"}}), DomainError);
  EXPECT_THROW(ring_from_json(Json{{"kind", "zn"}}), DomainError);
}

TEST(Io, TableRoundTrip) {
  const auto f = change_point_zero(family_zn(13, 3)).table;
  const Json doc = table_to_json(f);
  EXPECT_EQ(table_from_json(doc), f);
  EXPECT_EQ(table_to_json(table_from_json(doc)).dump(), doc.dump());
}

TEST(Io, ImportedZdbFixture) {
  const auto f = table_from_json(read_json_file(zdkit::sweep::fixture_dir() + "/zdb_52_18_2.json"));
  EXPECT_EQ(f.n(), 52u);
  EXPECT_EQ(f.m(), 18u);
  EXPECT_EQ(zd_spectrum(f).S, (std::set<std::uint64_t>{2}));
}

TEST(Io, MalformedTables) {
  Json doc = table_to_json(family_zn(7, 3).table);
  Json shorter = doc;
  shorter["values"].erase(shorter["values"].begin());
  EXPECT_THROW(table_from_json(shorter), DomainError);
  Json out_of_range = doc;
  out_of_range["values"][0] = 9;
  EXPECT_THROW(table_from_json(out_of_range), DomainError);
  Json gap = doc;
  gap["m"] = 4;
  EXPECT_THROW(table_from_json(gap), DomainError);
  Json negative = doc;
  negative["values"][0] = -1;
  EXPECT_THROW(table_from_json(negative), DomainError);
  EXPECT_THROW(table_from_json(Json{{"m", 2}}), DomainError);
}

TEST(Io, ImportCompactsArbitraryLabels) {
  const Json doc{{"group", ring_to_json(RingSpec::zn(4))}, {"values", {7, 9, 7, 3}}};
  const auto f = cli::import_table(doc, kDefaultMaxOrder);
  EXPECT_EQ(f.values(), (std::vector<std::uint32_t>{0, 1, 0, 2}));
}

TEST(Io, WordsAndSequences) {
  const auto words = words_from_text("# comment\n0A1\n 1,0,A \n\n");
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], (Word{0, 10, 1}));
  EXPECT_EQ(words[1], (Word{1, 0, 10}));
  EXPECT_EQ(words_from_json(Json{{"words", {"01", {1, 0}}}}), (std::vector<Word>{{0, 1}, {1, 0}}));
  EXPECT_EQ(sequence_from_text("{1, 0,2 3}"), (std::vector<std::uint64_t>{1, 0, 2, 3}));
  EXPECT_THROW(sequence_from_text("1, x"), DomainError);
  const std::vector<std::uint32_t> seq{4, 0, 1};
  EXPECT_EQ(sequence_to_text(seq), "4, 0, 1");
}

TEST(Io, DssDocumentRoundTrip) {
  const DSS d = build_dss(family_zn(11, 5).table);
  const Json doc = dss_to_json(d);
  const DSS again = verify_dss(Ring::make(ring_from_json(doc["group"])), blocks_from_json(doc));
  EXPECT_EQ(again.coverage, d.coverage);
  EXPECT_EQ(doc["certificate"]["optimal"], true);
}

TEST(Io, MissingFile) { EXPECT_THROW(read_file("/nonexistent/zdkit"), DomainError); }
