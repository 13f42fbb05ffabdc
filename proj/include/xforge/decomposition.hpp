#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "xforge/graph.hpp"
#include "xforge/spectral.hpp"

namespace xforge {

/// The three factors of the zig-zag walk on [N]x[M] (vertex (u,k) at u*M+k):
/// Z = lifted_b2 * rotation * lifted_b1, with lifted_bi = I_N (x) B_i and
/// rotation the permutation matrix of Rot_G.
struct StepMatrices {
  TransitionMatrix lifted_b1;
  TransitionMatrix rotation;
  TransitionMatrix lifted_b2;
};

StepMatrices lift_step_matrices(const LabelledDigraph& g, const LabelledDigraph& h1,
                                const LabelledDigraph& h2);

/// I_blocks (x) B, built densely.
Eigen::MatrixXd lift(std::size_t blocks, const Eigen::MatrixXd& b);

/// B = first * second with first = P sqrt(S) P^T and second = P sqrt(S) Q^T,
/// from the pinned SVD of `svd()`. Both factors fix the all-ones vector and
/// have second singular value sqrt(sigma_2(B)).
struct SqrtSplit {
  Eigen::MatrixXd first;
  Eigen::MatrixXd second;
};

SqrtSplit sqrt_split(const TransitionMatrix& b);

/// Per-block split of a vector on [N]x[M]: mean[u] is the average of block u,
/// parallel = mean (x) 1_M, perpendicular = x - parallel.
struct BlockSplit {
  Eigen::VectorXd parallel;
  Eigen::VectorXd perpendicular;
  Eigen::VectorXd mean;
};

BlockSplit decompose_parallel_perp(const Eigen::VectorXd& x, std::size_t n, std::size_t m);

}  // namespace xforge
