#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "xforge/graph.hpp"

namespace xforge {

/// A square real operator known only through products with A and A^T.
class LinearOperator {
 public:
  using Apply = std::function<void(std::span<const double>, std::span<double>)>;

  LinearOperator(std::size_t dim, Apply apply, Apply apply_transpose)
      : dim_(dim), apply_(std::move(apply)), apply_transpose_(std::move(apply_transpose)) {}

  std::size_t dim() const noexcept { return dim_; }

  /// y = A x. `y` must not alias `x`.
  void apply(std::span<const double> x, std::span<double> y) const { apply_(x, y); }
  /// y = A^T x. `y` must not alias `x`.
  void apply_transpose(std::span<const double> x, std::span<double> y) const {
    apply_transpose_(x, y);
  }

 private:
  std::size_t dim_;
  Apply apply_;
  Apply apply_transpose_;
};

LinearOperator dense_operator(Eigen::MatrixXd a);

/// Transition matrix of `g`, applied straight from its rotation table.
LinearOperator transition_operator(const LabelledDigraph& g);

/// I_blocks (x) B, with B the transition matrix of `h`.
LinearOperator lifted_operator(std::size_t blocks, const LabelledDigraph& h);

/// The permutation matrix of Rot_G on [N]x[M]: entry ((v,l),(u,k)) is 1 iff
/// Rot_G(u,k) = (v,l).
LinearOperator rotation_permutation(const LabelledDigraph& g);

/// Matrix product in written order: product({A, B, C}) = A*B*C, so C acts first.
LinearOperator product(std::vector<LinearOperator> factors);

LinearOperator operator_power(const LinearOperator& a, std::size_t t);

/// (I (x) B2) * Atilde * (I (x) B1): the zig-zag transition matrix in factored form.
LinearOperator zigzag_operator(const LabelledDigraph& g, const LabelledDigraph& h1,
                               const LabelledDigraph& h2);

/// Atilde * (I (x) B): the reduced zig-zag transition matrix in factored form.
LinearOperator reduced_zigzag_operator(const LabelledDigraph& g, const LabelledDigraph& h);

/// Materializes the operator column by column.
Eigen::MatrixXd to_dense(const LinearOperator& a);

}  // namespace xforge
