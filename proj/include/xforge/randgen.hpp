#pragma once

#include <cstddef>

#include "xforge/graph.hpp"
#include "xforge/rng.hpp"

namespace xforge {

/// Configuration-model M-regular digraph on [N]. Two uniform permutations x, y
/// of [M*N] are drawn from `rng` in that order (x first, same stream), reduced
/// mod N, and paired as edges (x_i, y_i). Multi-edges and self-loops are kept.
EdgeMultiset config_model(std::size_t n, std::size_t m, SeededRng& rng);

/// Random two-way labelling of an m-regular multiset. Consumes one uniform
/// permutation of [m] per vertex for out-labels (vertices in order), then one
/// per vertex for in-labels. Throws NotRegular.
LabelledDigraph random_labelling(const EdgeMultiset& e, std::size_t m, SeededRng& rng);

/// Deterministic labelling: the s-th edge (in list order) leaving u gets
/// out-label s, and the s-th edge entering v gets in-label s.
LabelledDigraph ordered_labelling(const EdgeMultiset& e, std::size_t m);

}  // namespace xforge
