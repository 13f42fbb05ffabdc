#pragma once

#include <cstddef>

#include "xforge/graph.hpp"

namespace xforge {

// Composite encodings (0-based, fixed):
//   product vertex (u,k), u in [N], k in [M]      -> u*M + k
//   zig-zag edge label (i,j), i in [D1], j in [D2] -> i*D2 + j
//   power label (k_1,...,k_t), k_s in [M]        -> mixed radix, k_1 most significant

/// Generalized zig-zag product G z (H1, H2). Both H graphs must live on
/// [g.degree()]. The result is D1*D2-regular on N*M vertices.
LabelledDigraph zigzag(const LabelledDigraph& g, const LabelledDigraph& h1,
                       const LabelledDigraph& h2);

/// Reduced zig-zag product G z' H = G z (H, trivial): an H-step on the label
/// followed by a rotation step through G. D-regular on N*M vertices.
LabelledDigraph reduced_zigzag(const LabelledDigraph& g, const LabelledDigraph& h);

inline constexpr std::size_t kDefaultPowerCap = 10'000'000;

/// t-th power G^t: edges are length-t walks, Rot(v0,(k1..kt)) = (vt,(lt..l1)).
/// Throws PowerTooLarge when N*M^t exceeds `max_entries`.
LabelledDigraph power(const LabelledDigraph& g, std::size_t t,
                      std::size_t max_entries = kDefaultPowerCap);

}  // namespace xforge
