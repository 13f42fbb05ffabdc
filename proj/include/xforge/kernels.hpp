#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Matrix-free transition kernels over rotation tables. Each kernel has a
// serial reference in `serial` and an OpenMP version in `omp`; the two must
// agree to rounding and the tests hold them to that. The OpenMP forms are
// written as gathers (or per-block scatters) so each output entry is owned by
// one thread, which keeps results independent of the thread count.
//
// Conventions: `rot` is an encoded rotation table (entry u*M+k holds v*M+l),
// `inv` its inverse, `m` the degree. Transition matrices act on columns:
// (A x)_v = (1/M) * sum over edges u->v of x_u.

namespace xforge::kernels {

using Code = std::uint32_t;

namespace serial {

void rotation_apply(std::span<const Code> rot, std::size_t m, std::span<const double> x,
                    std::span<double> y);
void rotation_apply_transpose(std::span<const Code> rot, std::size_t m,
                              std::span<const double> x, std::span<double> y);

/// y = (I_blocks (x) B) x where B is the transition matrix of the graph with
/// rotation table `rot_h` on [M] (M = x.size() / blocks) and degree d.
void lifted_apply(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                  std::span<const double> x, std::span<double> y);
void lifted_apply_transpose(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                            std::span<const double> x, std::span<double> y);

/// y[perm[i]] = x[i]
void permutation_apply(std::span<const Code> perm, std::span<const double> x,
                       std::span<double> y);
/// y[i] = x[perm[i]]
void permutation_apply_transpose(std::span<const Code> perm, std::span<const double> x,
                                 std::span<double> y);

}  // namespace serial

namespace omp {

void rotation_apply(std::span<const Code> inv, std::size_t m, std::span<const double> x,
                    std::span<double> y);
void rotation_apply_transpose(std::span<const Code> rot, std::size_t m,
                              std::span<const double> x, std::span<double> y);
void lifted_apply(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                  std::span<const double> x, std::span<double> y);
void lifted_apply_transpose(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                            std::span<const double> x, std::span<double> y);
void permutation_apply(std::span<const Code> perm, std::span<const double> x,
                       std::span<double> y);
void permutation_apply_transpose(std::span<const Code> perm, std::span<const double> x,
                                 std::span<double> y);

}  // namespace omp

}  // namespace xforge::kernels
