#include <gtest/gtest.h>

#include <omp.h>

#include <vector>

#include "test_support.hpp"
#include "xforge/kernels.hpp"
#include "xforge/linear_operator.hpp"
#include "xforge/products.hpp"
#include "xforge/spectral.hpp"

namespace xforge {
namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed, 99);
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_double() - 0.5;
  return x;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

class KernelAgreement : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { omp_set_num_threads(GetParam()); }
  void TearDown() override { omp_set_num_threads(1); }
};

// Sizes straddle the parallel threshold so both code paths run.
TEST_P(KernelAgreement, RotationKernels) {
  for (const auto [n, m] : {std::pair<std::size_t, std::size_t>{7, 3}, {2000, 12}}) {
    const auto g = testing::random_graph(n, m, n + m);
    const auto inv = g.inverse_codes();
    const auto x = random_vector(n, 1);
    std::vector<double> ys(n), yp(n);
    kernels::serial::rotation_apply(g.codes(), m, x, ys);
    kernels::omp::rotation_apply(inv, m, x, yp);
    EXPECT_LT(max_diff(ys, yp), 1e-15);
    kernels::serial::rotation_apply_transpose(g.codes(), m, x, ys);
    kernels::omp::rotation_apply_transpose(g.codes(), m, x, yp);
    EXPECT_LT(max_diff(ys, yp), 1e-15);
  }
}

TEST_P(KernelAgreement, LiftedAndPermutationKernels) {
  const auto h = testing::random_graph(40, 30, 3);
  const std::size_t blocks = 50;
  const auto x = random_vector(blocks * 40, 2);
  std::vector<double> ys(x.size()), yp(x.size());
  kernels::serial::lifted_apply(h.codes(), 30, blocks, x, ys);
  kernels::omp::lifted_apply(h.codes(), 30, blocks, x, yp);
  EXPECT_LT(max_diff(ys, yp), 1e-15);
  kernels::serial::lifted_apply_transpose(h.codes(), 30, blocks, x, ys);
  kernels::omp::lifted_apply_transpose(h.codes(), 30, blocks, x, yp);
  EXPECT_LT(max_diff(ys, yp), 1e-15);

  const auto g = testing::random_graph(1000, 20, 4);
  const auto z = random_vector(g.n_ports(), 5);
  std::vector<double> ps(z.size()), pp(z.size());
  kernels::serial::permutation_apply(g.codes(), z, ps);
  kernels::omp::permutation_apply(g.codes(), z, pp);
  EXPECT_EQ(ps, pp);
  kernels::serial::permutation_apply_transpose(g.codes(), z, ps);
  kernels::omp::permutation_apply_transpose(g.codes(), z, pp);
  EXPECT_EQ(ps, pp);
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelAgreement, ::testing::Values(1, 4));

TEST(Operators, TransitionOperatorMatchesDenseMatrix) {
  const auto g = testing::random_graph(15, 4, 8);
  const Eigen::MatrixXd dense = to_dense(transition_operator(g));
  EXPECT_LT((dense - testing::walk_matrix(g)).cwiseAbs().maxCoeff(), 1e-15);
  const auto op = transition_operator(g);
  const auto x = random_vector(15, 3);
  std::vector<double> y(15);
  op.apply_transpose(x, y);
  const Eigen::VectorXd expected =
      testing::walk_matrix(g).transpose() * Eigen::Map<const Eigen::VectorXd>(x.data(), 15);
  for (int i = 0; i < 15; ++i) EXPECT_NEAR(y[static_cast<std::size_t>(i)], expected(i), 1e-15);
}

TEST(Operators, FactoredProductsMatchExplicitProducts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = testing::random_graph(6, 4, seed, 0);
    const auto h1 = testing::random_graph(4, 3, seed, 1);
    const auto h2 = testing::random_graph(4, 2, seed, 2);
    const Eigen::MatrixXd zz = to_dense(zigzag_operator(g, h1, h2));
    EXPECT_LT((zz - testing::walk_matrix(zigzag(g, h1, h2))).cwiseAbs().maxCoeff(), 1e-14);
    const Eigen::MatrixXd rz = to_dense(reduced_zigzag_operator(g, h1));
    EXPECT_LT((rz - testing::walk_matrix(reduced_zigzag(g, h1))).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Operators, TransposeOfProductReversesOrder) {
  const auto g = testing::random_graph(5, 3, 1, 0);
  const auto h = testing::random_graph(3, 2, 1, 1);
  const auto op = zigzag_operator(g, h, testing::random_graph(3, 3, 1, 2));
  const Eigen::MatrixXd dense = to_dense(op);
  const auto x = random_vector(op.dim(), 6);
  std::vector<double> y(op.dim());
  op.apply_transpose(x, y);
  const Eigen::VectorXd expected =
      dense.transpose() * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(y[i], expected(static_cast<Eigen::Index>(i)), 1e-14);
}

TEST(Operators, PowerMatchesMatrixPower) {
  const auto g = testing::random_graph(9, 3, 2);
  const Eigen::MatrixXd a = testing::walk_matrix(g);
  const Eigen::MatrixXd cubed = to_dense(operator_power(transition_operator(g), 3));
  EXPECT_LT((cubed - a * a * a).cwiseAbs().maxCoeff(), 1e-14);
  const Eigen::MatrixXd dense_cubed = to_dense(operator_power(dense_operator(a), 3));
  EXPECT_LT((dense_cubed - a * a * a).cwiseAbs().maxCoeff(), 1e-14);
}

}  // namespace
}  // namespace xforge
