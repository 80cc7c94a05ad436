#include <gtest/gtest.h>

#include "sweep.hpp"
#include "zdkit/zdkit.hpp"

using namespace zdkit;

TEST(CosetZdb, Z11) {
  const auto z = family_zn(11, 5);
  EXPECT_EQ(z.table.m(), 3u);
  EXPECT_EQ(zd_spectrum(z.table).S, (std::set<std::uint64_t>{4}));
  // {0} keeps label 0
  EXPECT_EQ(z.table(Element{0}), 0u);
}

TEST(CosetZdb, Z7AndProductFields) {
  EXPECT_EQ(zd_spectrum(family_zn(7, 3).table).S, (std::set<std::uint64_t>{2}));
  const std::vector<PrimePower> f{{3, 2}, {5, 1}};
  const auto z = family_product_fields(f, 4);
  EXPECT_EQ(z.table.n(), 45u);
  EXPECT_EQ(z.table.m(), 12u);
  EXPECT_EQ(zd_spectrum(z.table).S, (std::set<std::uint64_t>{3}));
  const std::vector<PrimePower> single{{11, 1}};
  EXPECT_EQ(zd_spectrum(family_product_fields(single, 5).table).S, (std::set<std::uint64_t>{4}));
}

TEST(CosetZdb, DivisibilityErrors) {
  EXPECT_THROW(family_zn(15, 4), DomainError);
  EXPECT_THROW(family_zn(12, 1), DomainError);
  const std::vector<PrimePower> f{{3, 1}, {5, 1}};
  EXPECT_THROW(family_product_fields(f, 4), DomainError);
}

TEST(ChangePoint, Z11GivesZdb) {
  const auto cp = change_point_zero(family_zn(11, 5));
  EXPECT_EQ(cp.table.m(), 2u);
  EXPECT_EQ(cp.spectrum.S, (std::set<std::uint64_t>{5}));
  EXPECT_EQ(cp.case_id, SpectrumCase::k_only);
}

TEST(ChangePoint, MinusOneInGroup) {
  const auto cp = change_point_zero(family_zn(5, 2));
  EXPECT_EQ(cp.spectrum.S, (std::set<std::uint64_t>{1, 3}));
  EXPECT_EQ(cp.case_id, SpectrumCase::k_plus_minus_one);
  const std::vector<PrimePower> f{{3, 2}, {5, 1}};
  const auto cp45 = change_point_zero(family_product_fields(f, 4));
  EXPECT_EQ(cp45.table.m(), 11u);
  EXPECT_EQ(cp45.spectrum.S, (std::set<std::uint64_t>{3, 5}));
}

TEST(ChangePoint, GeneralAtZeroMatchesZeroVersion) {
  for (auto [n, e] : {std::pair{11u, 5u}, {13u, 3u}, {31u, 5u}, {45u, 2u}}) {
    const auto z = family_zn(n, e);
    const auto general = change_point_general(z.table, z.table.domain().zero(), z.table.domain().one());
    EXPECT_EQ(general.table, change_point_zero(z).table) << n << " " << e;
  }
}

TEST(ChangePoint, ImportedT1Base) {
  const auto base = table_from_json(read_json_file(zdkit::sweep::fixture_dir() + "/zdb_52_18_2.json"));
  EXPECT_EQ(zd_spectrum(base).S, (std::set<std::uint64_t>{2}));
  const auto a = find_empty_d_point(base, Element{0});
  ASSERT_TRUE(a);
  const auto cp = change_point_general(base, Element{0}, *a);
  EXPECT_TRUE(cp.D.empty());
  EXPECT_EQ(cp.table.m(), 17u);
  EXPECT_EQ(cp.spectrum.S, (std::set<std::uint64_t>{2, 3}));
}

TEST(ChangePoint, Preconditions) {
  const auto z = family_zn(11, 5);
  // 3 lies in the class of 1, which is not a singleton
  EXPECT_THROW(change_point_general(z.table, Element{3}, Element{2}), DomainError);
  // a in the singleton class itself
  EXPECT_THROW(change_point_general(z.table, Element{0}, Element{0}), DomainError);
  // base not Type-A
  const auto cp = change_point_zero(z);
  EXPECT_THROW(change_point_general(cp.table, Element{0}, Element{2}), DomainError);
}

// Over every coset construction: the base is Type-A with constant spectrum k-1,
// the change point is Type-B, and {k-1,k+1} occurs exactly when -1 is in G.
TEST(ChangePoint, CosetSweep) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 3; n <= 400; n += 2) {
    const std::uint64_t g = zdkit::sweep::gcd_p_minus_one(n);
    for (std::uint64_t e = 1; e <= g; ++e) {
      if (g % e) continue;
      const auto z = family_zn(n, e);
      const auto sp = zd_spectrum(z.table);
      const auto st = preimage_stats(z.table);
      ASSERT_EQ(sp.S, (std::set<std::uint64_t>{e - 1})) << n << " " << e;
      ASSERT_EQ(classify(z.table, sp, st).type_a, e);
      if (z.table.m() < 2 || (n - 1) / e < 2) continue;
      const auto cp = change_point_zero(z);
      ASSERT_EQ(cp.predicted_S, cp.spectrum.S);
      ASSERT_EQ(classify(cp.table, cp.spectrum, preimage_stats(cp.table)).type_b, e);
      ASSERT_EQ(cp.case_id == SpectrumCase::k_plus_minus_one, contains_minus_one(z.table.domain(), z.group))
          << n << " " << e;
      ++count;
    }
  }
  EXPECT_GT(count, 300u);
}

TEST(ChangePoint, StoredBasesHaveEmptyDPoints) {
  const Json manifest = read_json_file(zdkit::sweep::fixture_dir() + "/typea_manifest.json");
  for (const auto& t : manifest.at("tables")) {
    const auto e = t.at("e").get<std::uint64_t>();
    const auto base = table_from_json(read_json_file(zdkit::sweep::fixture_dir() + "/" + t.at("file").get<std::string>()));
    if (base.n() > 300) continue;
    ASSERT_EQ(zd_spectrum(base).S, (std::set<std::uint64_t>{e - 2}));
    const auto a = find_empty_d_point(base, Element{0});
    ASSERT_TRUE(a);
    const auto cp = change_point_general(base, Element{0}, *a);
    ASSERT_EQ(cp.spectrum.S, (std::set<std::uint64_t>{e - 2, e - 1}));
  }
}
