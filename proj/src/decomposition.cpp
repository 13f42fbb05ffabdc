#include "xforge/decomposition.hpp"

#include <string>

#include "xforge/error.hpp"

namespace xforge {

Eigen::MatrixXd lift(std::size_t blocks, const Eigen::MatrixXd& b) {
  const Eigen::Index m = b.rows();
  const auto n = static_cast<Eigen::Index>(blocks);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * m, n * m);
  for (Eigen::Index u = 0; u < n; ++u) out.block(u * m, u * m, m, m) = b;
  return out;
}

StepMatrices lift_step_matrices(const LabelledDigraph& g, const LabelledDigraph& h1,
                                const LabelledDigraph& h2) {
  if (h1.n_vertices() != g.degree() || h2.n_vertices() != g.degree()) {
    throw Error(ErrorKind::DimensionMismatch, "H graphs must live on [deg G]");
  }
  const std::size_t n = g.n_vertices();
  const auto size = static_cast<Eigen::Index>(g.n_ports());
  Eigen::MatrixXd rotation = Eigen::MatrixXd::Zero(size, size);
  const auto codes = g.codes();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    rotation(static_cast<Eigen::Index>(codes[i]), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return {TransitionMatrix::from_matrix(lift(n, transition_matrix(h1).matrix())),
          TransitionMatrix::from_matrix(std::move(rotation)),
          TransitionMatrix::from_matrix(lift(n, transition_matrix(h2).matrix()))};
}

SqrtSplit sqrt_split(const TransitionMatrix& b) {
  const SvdFactors f = svd(b);
  const Eigen::VectorXd root = f.singular_values.cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXd scaled = f.left * root.asDiagonal();
  return {scaled * f.left.transpose(), scaled * f.right.transpose()};
}

BlockSplit decompose_parallel_perp(const Eigen::VectorXd& x, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0 || static_cast<std::size_t>(x.size()) != n * m) {
    throw Error(ErrorKind::LengthMismatch, "vector length " + std::to_string(x.size()) +
                                               " is not " + std::to_string(n) + "*" +
                                               std::to_string(m));
  }
  const auto nn = static_cast<Eigen::Index>(n);
  const auto mm = static_cast<Eigen::Index>(m);
  BlockSplit out;
  out.mean.resize(nn);
  out.parallel.resize(x.size());
  for (Eigen::Index u = 0; u < nn; ++u) {
    out.mean(u) = x.segment(u * mm, mm).mean();
    out.parallel.segment(u * mm, mm).setConstant(out.mean(u));
  }
  out.perpendicular = x - out.parallel;
  return out;
}

}  // namespace xforge
