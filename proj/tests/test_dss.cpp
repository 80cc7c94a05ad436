#include <gtest/gtest.h>

#include "zdkit/zdkit.hpp"

using namespace zdkit;

namespace {

std::vector<std::vector<Element>> blocks(std::initializer_list<std::initializer_list<std::uint32_t>> bs) {
  std::vector<std::vector<Element>> out;
  for (auto b : bs) {
    std::vector<Element> block;
    for (auto x : b) block.push_back(Element{x});
    out.push_back(block);
  }
  return out;
}

}  // namespace

TEST(Dss, CosetOnZ11IsPerfectAndOptimal) {
  const DSS d = build_dss(family_zn(11, 5).table);
  EXPECT_EQ(d.w, (std::vector<std::uint64_t>{1, 5, 5}));
  EXPECT_EQ(d.rho, 7u);
  EXPECT_TRUE(d.perfect);
  EXPECT_EQ(d.tau, 11u);
  EXPECT_EQ(dss_bound(11, 3, 7), 11u);
}

TEST(Dss, ChangePointOnZ7) {
  const DSS d = build_dss(change_point_zero(family_zn(7, 3)).table);
  auto w = d.w;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<std::uint64_t>{3, 4}));
  EXPECT_EQ(d.rho, 4u);
}

TEST(Dss, ChangePointOn45) {
  const std::vector<PrimePower> f{{3, 2}, {5, 1}};
  const DSS d = build_dss(change_point_zero(family_product_fields(f, 4)).table);
  auto w = d.w;
  std::sort(w.begin(), w.end());
  std::vector<std::uint64_t> want(10, 4);
  want.push_back(5);
  EXPECT_EQ(w, want);
  EXPECT_EQ(d.rho, 40u);
  EXPECT_EQ(dss_bound(45, 11, 40), 44u);
}

TEST(Dss, VerifyExternalBlocks) {
  const Ring z3 = Ring::make(RingSpec::zn(3));
  const DSS d = verify_dss(z3, blocks({{0}, {1, 2}}));
  EXPECT_EQ(d.coverage[1], 2u);
  EXPECT_EQ(d.coverage[2], 2u);
  EXPECT_TRUE(d.perfect);
  EXPECT_EQ(d.rho, 2u);
  EXPECT_THROW(verify_dss(z3, blocks({{0, 1}, {1, 2}})), DomainError);
  EXPECT_THROW(verify_dss(z3, blocks({{0}, {3}})), DomainError);
}

TEST(Dss, Bound) {
  EXPECT_EQ(dss_bound(11, 3, 7), 11u);
  EXPECT_EQ(dss_bound(45, 11, 41), 45u);
  EXPECT_EQ(dss_bound(45, 11, 40), 44u);
  EXPECT_THROW(dss_bound(11, 1, 7), DomainError);
}

TEST(Dss, Certificates) {
  auto c = dss_certify(11, 3, 4, 5);
  EXPECT_TRUE(c.optimal_iff);
  EXPECT_TRUE(c.bound_agrees);
  EXPECT_EQ(c.sufficient_improved, true);
  c = dss_certify(11, 2, 5);
  EXPECT_TRUE(c.optimal_iff);
  c = dss_certify(45, 11, 5);
  EXPECT_FALSE(c.optimal_iff);
  EXPECT_TRUE(c.bound_agrees);
  EXPECT_THROW(dss_certify(11, 1, 4), DomainError);
}

// The iff condition and the bound agree for every (n, m, lambda) a ZD function
// could have: lambda at least the balanced value C.
TEST(Dss, IffMatchesBoundExhaustively) {
  for (std::uint64_t n = 3; n <= 150; ++n) {
    for (std::uint64_t m = 2; m <= n; ++m) {
      const auto lo = to_u64(lg_bound(n, m).bound);
      for (std::uint64_t lambda = lo; lambda < n; ++lambda) {
        const auto c = dss_certify(n, m, lambda);
        ASSERT_TRUE(c.bound_agrees) << n << " " << m << " " << lambda;
      }
    }
  }
}
