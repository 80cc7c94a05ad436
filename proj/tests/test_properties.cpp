// Structural identities over a smaller construction sweep than the acceptance
// run, so a failure shows up with its construction name.
#include <gtest/gtest.h>

#include "sweep.hpp"

using namespace zdkit;
using zdkit::sweep::Construction;

TEST(Properties, ConstructionSweep) {
  zdkit::sweep::SweepPlan plan{150, 600, 50, true};
  std::uint64_t visited = 0;
  zdkit::sweep::for_each_construction(plan, [&](const Construction& c) {
    ++visited;
    const auto failures = zdkit::sweep::property_failures(c, 100);
    EXPECT_TRUE(failures.empty()) << c.label << ": " << failures.front();
  });
  EXPECT_GT(visited, 300u);
}

TEST(Properties, ChangePointProfilesAreTypeB) {
  zdkit::sweep::SweepPlan plan{200, 200, 1, true};
  zdkit::sweep::for_each_construction(plan, [&](const Construction& c) {
    if (!c.change_point || c.change_point->case_id == SpectrumCase::constant) return;
    const auto cls = classify(c.table, c.change_point->spectrum, preimage_stats(c.table));
    EXPECT_EQ(cls.type_b, c.change_point->k) << c.label;
  });
}
