#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace xforge {

/// A (vertex, label) pair. Indices are 0-based internally.
struct Port {
  std::size_t vertex = 0;
  std::size_t label = 0;

  friend bool operator==(const Port&, const Port&) = default;
};

struct RotationEntry {
  Port from;
  Port to;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed multigraph given by its edge list. Self-loops and repeated edges
/// are allowed.
struct EdgeMultiset {
  std::size_t n_vertices = 0;
  std::vector<Edge> edges;

  /// True when every vertex is the source of exactly `m` edges and the target
  /// of exactly `m` edges.
  bool is_regular(std::size_t m) const;
};

/// Multiset equality (edge order is irrelevant).
bool same_multiset(const EdgeMultiset& a, const EdgeMultiset& b);

/// An M-regular digraph on [N] together with a two-way labelling, stored as
/// its rotation map. The map is a flat array of length N*M whose entry at
/// u*M + k holds the encoded target v*M + l. Immutable once built.
class LabelledDigraph {
 public:
  using Code = std::uint32_t;

  /// Validates that `rot` is a permutation of [0, n*m).
  static LabelledDigraph from_codes(std::size_t n, std::size_t m, std::vector<Code> rot);

  /// Builds from an explicit (u,k) -> (v,l) table in any order. Throws
  /// IncompleteTable when a source port is missing or repeated, and
  /// NotABijection when a target is out of range or hit twice.
  static LabelledDigraph from_table(std::size_t n, std::size_t m,
                                    std::span<const RotationEntry> table);

  std::size_t n_vertices() const noexcept { return n_; }
  std::size_t degree() const noexcept { return m_; }
  std::size_t n_ports() const noexcept { return rot_.size(); }

  /// Rot(u,k). Throws OutOfRange.
  Port rot(std::size_t u, std::size_t k) const;

  /// Encoded rotation table, indexed by u*M + k.
  std::span<const Code> codes() const noexcept { return rot_; }

  /// Encoded inverse rotation table: entry v*M + l holds u*M + k.
  std::vector<Code> inverse_codes() const;

  friend bool operator==(const LabelledDigraph&, const LabelledDigraph&) = default;

 private:
  LabelledDigraph(std::size_t n, std::size_t m, std::vector<Code> rot)
      : n_(n), m_(m), rot_(std::move(rot)) {}

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Code> rot_;
};

/// The 1-regular graph on [m] with a single self-loop at every vertex.
LabelledDigraph trivial_graph(std::size_t m);

Port rot_of(const LabelledDigraph& g, std::size_t u, std::size_t k);

/// Projects the rotation map onto its edges: one edge u -> v per port (u,k).
EdgeMultiset edge_multiset_of(const LabelledDigraph& g);

}  // namespace xforge
