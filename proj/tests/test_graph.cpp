#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"
#include "xforge/error.hpp"
#include "xforge/graph.hpp"

namespace xforge {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an xforge::Error";
  return ErrorKind::IoError;
}

TEST(GraphFromTable, SingleSelfLoop) {
  const std::vector<RotationEntry> table{{{0, 0}, {0, 0}}};
  const auto g = LabelledDigraph::from_table(1, 1, table);
  EXPECT_EQ(g.n_vertices(), 1u);
  EXPECT_EQ(g.degree(), 1u);
  EXPECT_EQ(g.rot(0, 0), (Port{0, 0}));
}

TEST(GraphFromTable, DirectedTwoCycle) {
  const std::vector<RotationEntry> table{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
  const auto g = LabelledDigraph::from_table(2, 1, table);
  EXPECT_EQ(rot_of(g, 0, 0), (Port{1, 0}));
  EXPECT_EQ(rot_of(g, 1, 0), (Port{0, 0}));
}

TEST(GraphFromTable, TargetHitTwiceIsNotABijection) {
  const std::vector<RotationEntry> table{{{0, 0}, {1, 0}}, {{1, 0}, {1, 0}}};
  EXPECT_EQ(kind_of([&] { LabelledDigraph::from_table(2, 1, table); }), ErrorKind::NotABijection);
}

TEST(GraphFromTable, TargetOutOfRangeIsNotABijection) {
  const std::vector<RotationEntry> table{{{0, 0}, {2, 0}}, {{1, 0}, {0, 0}}};
  EXPECT_EQ(kind_of([&] { LabelledDigraph::from_table(2, 1, table); }), ErrorKind::NotABijection);
}

TEST(GraphFromTable, MissingSourceIsIncomplete) {
  const std::vector<RotationEntry> table{{{0, 0}, {1, 0}}};
  EXPECT_EQ(kind_of([&] { LabelledDigraph::from_table(2, 1, table); }),
            ErrorKind::IncompleteTable);
  const std::vector<RotationEntry> dup{{{0, 0}, {1, 0}}, {{0, 0}, {0, 0}}};
  EXPECT_EQ(kind_of([&] { LabelledDigraph::from_table(2, 1, dup); }), ErrorKind::IncompleteTable);
}

TEST(GraphFromCodes, RejectsWrongLengthAndRepeats) {
  EXPECT_EQ(kind_of([] { LabelledDigraph::from_codes(2, 2, {0, 1, 2}); }),
            ErrorKind::IncompleteTable);
  EXPECT_EQ(kind_of([] { LabelledDigraph::from_codes(2, 2, {0, 1, 2, 2}); }),
            ErrorKind::NotABijection);
  EXPECT_EQ(kind_of([] { LabelledDigraph::from_codes(0, 2, {}); }), ErrorKind::InvalidArgument);
}

TEST(TrivialGraph, EverySlotIsASelfLoop) {
  const auto g = trivial_graph(3);
  EXPECT_EQ(g.n_vertices(), 3u);
  EXPECT_EQ(g.degree(), 1u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(g.rot(k, 0), (Port{k, 0}));
  EXPECT_EQ(rot_of(g, 1, 0), (Port{1, 0}));
  EXPECT_EQ(trivial_graph(1).n_ports(), 1u);
}

TEST(RotOf, OutOfRange) {
  const auto g = trivial_graph(3);
  EXPECT_EQ(kind_of([&] { g.rot(3, 0); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([&] { g.rot(0, 1); }), ErrorKind::OutOfRange);
}

TEST(EdgeMultisetOf, SmallGraphs) {
  EdgeMultiset loops{2, {{0, 0}, {1, 1}}};
  EXPECT_TRUE(same_multiset(edge_multiset_of(trivial_graph(2)), loops));
  const auto cycle = LabelledDigraph::from_codes(2, 1, {1, 0});
  EdgeMultiset two{2, {{1, 0}, {0, 1}}};
  EXPECT_TRUE(same_multiset(edge_multiset_of(cycle), two));
}

TEST(EdgeMultiset, RegularityCheck) {
  EdgeMultiset e{2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}}};
  EXPECT_TRUE(e.is_regular(2));
  EXPECT_FALSE(e.is_regular(1));
  EdgeMultiset skewed{2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}};
  EXPECT_TRUE(skewed.is_regular(2));
  EdgeMultiset bad{2, {{0, 1}, {0, 1}, {1, 1}, {1, 0}}};
  EXPECT_FALSE(bad.is_regular(2));
}

// Random graphs: rot is a permutation and the edge projection is regular.
TEST(GraphProperties, BijectiveAndRegularOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const std::size_t m = 1 + (seed * 7) % 6;
    const auto g = testing::random_graph(n, m, seed);
    EXPECT_TRUE(testing::is_permutation(g));
    EXPECT_TRUE(edge_multiset_of(g).is_regular(m));
    const auto inv = g.inverse_codes();
    for (std::size_t i = 0; i < g.n_ports(); ++i) EXPECT_EQ(inv[g.codes()[i]], i);
  }
}

}  // namespace
}  // namespace xforge
