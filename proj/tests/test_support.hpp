#pragma once

// Test-only oracles. Nothing here calls into the spectral module, so the
// checks built on these helpers stay independent of the code under test.

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "xforge/graph.hpp"
#include "xforge/randgen.hpp"
#include "xforge/rng.hpp"

namespace xforge::testing {

inline LabelledDigraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed,
                                    std::uint64_t stream = 0) {
  SeededRng rng(seed, stream);
  const EdgeMultiset e = config_model(n, m, rng);
  return random_labelling(e, m, rng);
}

/// Integer edge-count matrix: entry (v,u) = number of edges u -> v.
inline Eigen::MatrixXi count_matrix(const LabelledDigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_vertices());
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(n, n);
  for (const Edge& e : edge_multiset_of(g).edges) {
    c(static_cast<Eigen::Index>(e.to), static_cast<Eigen::Index>(e.from)) += 1;
  }
  return c;
}

/// Transition matrix straight from the definition (count / degree).
inline Eigen::MatrixXd walk_matrix(const LabelledDigraph& g) {
  return count_matrix(g).cast<double>() / static_cast<double>(g.degree());
}

/// lambda by the definition max_{x perp 1} |Ax|/|x|: the square root of the
/// top eigenvalue of the Gram matrix of A restricted to an explicit basis of
/// 1-perp. Uses a symmetric eigensolver, not an SVD.
inline double brute_force_lambda(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return 0.0;
  // Basis e_i - e_{i+1}, orthonormalized.
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(n, n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    raw(i, i) = 1.0;
    raw(i + 1, i) = -1.0;
  }
  const Eigen::MatrixXd basis = Eigen::HouseholderQR<Eigen::MatrixXd>(raw).householderQ() *
                                Eigen::MatrixXd::Identity(n, n - 1);
  const Eigen::MatrixXd ab = a * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ab.transpose() * ab,
                                                    Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

/// True when the encoded table hits every port exactly once.
inline bool is_permutation(const LabelledDigraph& g) {
  std::vector<int> hits(g.n_ports(), 0);
  for (auto c : g.codes()) {
    if (c >= g.n_ports()) return false;
    ++hits[c];
  }
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

}  // namespace xforge::testing
