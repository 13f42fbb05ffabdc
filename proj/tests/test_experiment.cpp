#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "xforge/error.hpp"
#include "xforge/experiment.hpp"

namespace xforge {
namespace {

ExperimentParams small_params(std::size_t trials = 12, std::uint64_t seed = 3) {
  return {10, 5, 3, trials, seed};
}

TEST(Cases, Presets) {
  const auto i = case_params("i");
  ASSERT_TRUE(i);
  EXPECT_EQ(i->n, 50u);
  EXPECT_EQ(i->m, 40u);
  EXPECT_EQ(i->d, 30u);
  EXPECT_EQ(case_params("ii")->d, 10u);
  EXPECT_EQ(case_params("iii")->n, 10u);
  EXPECT_FALSE(case_params("iv"));
}

TEST(ZigzagExperiment, ReportInvariants) {
  const auto r = run_zigzag_experiment(small_params());
  ASSERT_EQ(r.per_trial.size(), 12u);
  const double mean = std::accumulate(r.per_trial.begin(), r.per_trial.end(), 0.0) / 12.0;
  EXPECT_NEAR(r.ave_lambda, mean, 1e-12);
  EXPECT_EQ(r.max_lambda, *std::max_element(r.per_trial.begin(), r.per_trial.end()));
  EXPECT_NEAR(r.bound, bound_f(r.lambda_g, r.lambda_h, r.lambda_h), 1e-15);
  for (double v : r.per_trial) EXPECT_LE(v, r.bound + 1e-9);
  EXPECT_FALSE(r.k.has_value());
}

TEST(ZigzagExperiment, SingleTrialAverageIsMax) {
  const auto r = run_zigzag_experiment(small_params(1));
  EXPECT_EQ(r.ave_lambda, r.max_lambda);
}

TEST(ZigzagExperiment, DeterministicUnderMasterSeed) {
  const auto a = run_zigzag_experiment(small_params(8, 5));
  const auto b = run_zigzag_experiment(small_params(8, 5));
  EXPECT_EQ(a.per_trial, b.per_trial);
  std::ostringstream sa, sb;
  write_zigzag_csv(sa, {a});
  write_zigzag_csv(sb, {b});
  EXPECT_EQ(sa.str(), sb.str());
  const auto c = run_zigzag_experiment(small_params(8, 6));
  EXPECT_NE(a.per_trial, c.per_trial);
}

// Trial t always uses stream t, so a prefix of trials is reproduced exactly.
TEST(ZigzagExperiment, TrialsAreOrderIndependent) {
  const auto few = run_zigzag_experiment(small_params(4, 9));
  const auto many = run_zigzag_experiment(small_params(10, 9));
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(few.per_trial[t], many.per_trial[t]);
}

TEST(ZigzagExperiment, MatrixFreeRouteAgreesWithDense) {
  SpectralConfig sparse;
  sparse.dense_cutoff = 10;
  const auto dense = run_zigzag_experiment(small_params(5));
  const auto matrix_free = run_zigzag_experiment(small_params(5), sparse);
  for (std::size_t t = 0; t < 5; ++t) {
    EXPECT_NEAR(dense.per_trial[t], matrix_free.per_trial[t], 1e-8);
  }
}

TEST(ReducedPowerExperiment, RowsAndBounds) {
  const auto p = small_params();
  const auto rows = run_reduced_power_experiment(p, 6);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_NEAR(rows[0].ave_lambda, 1.0, 1e-9);
  EXPECT_NEAR(rows[0].max_lambda, 1.0, 1e-9);
  EXPECT_EQ(rows[0].bound, 1.0);
  const double fp = bound_f_prime(rows[0].lambda_g, rows[0].lambda_h);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto& r = rows[k - 1];
    EXPECT_EQ(r.k, k);
    EXPECT_NEAR(r.bound, std::pow(fp, static_cast<double>(k - 1)), 1e-15);
    EXPECT_LE(r.max_lambda, r.bound + 1e-9);
    if (k > 1) {
      // Z' is a contraction on 1-perp, so lambda of its powers cannot grow.
      for (std::size_t t = 0; t < p.trials; ++t) {
        EXPECT_LE(r.per_trial[t], rows[k - 2].per_trial[t] + 1e-12);
      }
    }
  }
}

TEST(ReducedPowerExperiment, SquareMatchesZigzagTrialByTrial) {
  const auto p = small_params(10, 21);
  const auto zz = run_zigzag_experiment(p);
  const auto rows = run_reduced_power_experiment(p, 2);
  for (std::size_t t = 0; t < p.trials; ++t) {
    EXPECT_NEAR(rows[1].per_trial[t], zz.per_trial[t], 1e-8);
  }
}

TEST(ReducedPowerExperiment, MatrixFreeRouteAgreesWithDense) {
  SpectralConfig sparse;
  sparse.dense_cutoff = 10;
  const auto dense = run_reduced_power_experiment(small_params(3), 5);
  const auto matrix_free = run_reduced_power_experiment(small_params(3), 5, sparse);
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t t = 0; t < 3; ++t)
      EXPECT_NEAR(dense[k].per_trial[t], matrix_free[k].per_trial[t], 1e-8);
}

TEST(ExperimentCsv, Format) {
  ExperimentReport r;
  r.params = {10, 5, 3, 2, 1};
  r.lambda_g = 0.5909580;
  r.lambda_h = 0.8047379;
  r.per_trial = {0.8, 0.9};
  summarize(r);
  r.bound = 0.9155723;
  std::ostringstream out;
  write_zigzag_csv(out, {r});
  EXPECT_EQ(out.str(),
            "n,m,d,lambda_g,lambda_h,ave,max,f\n"
            "10,5,3,0.5909580,0.8047379,0.8500000,0.9000000,0.9155723\n");

  r.k = 2;
  std::ostringstream rp;
  write_reduced_power_csv(rp, {r});
  EXPECT_EQ(rp.str(), "k,ave,max,bound\n2,0.8500000,0.9000000,0.9155723\n");
}

TEST(Experiments, RejectBadParameters) {
  EXPECT_THROW(run_zigzag_experiment({10, 5, 3, 0, 1}), Error);
  EXPECT_THROW(run_reduced_power_experiment(small_params(), 0), Error);
}

}  // namespace
}  // namespace xforge
