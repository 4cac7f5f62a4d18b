#include <gtest/gtest.h>

#include "sweep.hpp"

using namespace wlink;

TEST(Sweep, SmallWeightsAgainstSpectrumAndDenseExpansion) {
  oracle::SweepOptions opt;
  opt.max_entry = 8;
  opt.max_degree = 30;
  const oracle::SweepStats s = oracle::run_sweep(opt);
  for (const std::string& f : s.failures) ADD_FAILURE() << f;
  EXPECT_GT(s.admissible, 100u);
  EXPECT_GT(s.dense_checked, 100u);
  EXPECT_GT(s.rejected, 0u);
}
