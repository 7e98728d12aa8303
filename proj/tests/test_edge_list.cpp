#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cga/edge_list.hpp"
#include "cga/generator.hpp"

using cga::Edge;
using cga::Graph;
using cga::TreeParams;

TEST(Graph, CanonicalizesUndirectedEdges) {
  const TreeParams p(2, 2, 2);
  const Graph g(p, false, 0, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, DirectedKeepsOrientation) {
  const TreeParams p(2, 2, 2);
  const Graph g(p, true, 0, {{3, 1}, {1, 3}, {0, 2}});
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(2, 0));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 3}, {3, 1}}));
  ASSERT_EQ(g.in_neighbors(2).size(), 1u);
  EXPECT_EQ(g.in_neighbors(2)[0], 0u);
}

TEST(Graph, RejectsInvalidEdges) {
  const TreeParams p(2, 2, 2);
  EXPECT_THROW(Graph(p, false, 0, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(p, false, 0, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(p, false, 0, {{0, 4}}), std::domain_error);
  EXPECT_NO_THROW(Graph(p, true, 0, {{0, 1}, {1, 0}}));
}

TEST(EdgeList, HeaderFormat) {
  const Graph g(TreeParams(3, 2, 1.5), true, 17, {{2, 0}});
  EXPECT_EQ(cga::edge_list_string(g), "# cga b=3 H=2 c=1.5 seed=17 directed=1\n2 0\n");
}

TEST(EdgeList, RoundTrips) {
  for (bool directed : {false, true}) {
    const auto g = cga::sample_graph(TreeParams(2, 8, 1.3), 4, directed);
    std::istringstream in(cga::edge_list_string(g));
    const Graph back = cga::read_edge_list(in);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.seed(), 4u);
    EXPECT_EQ(cga::edge_list_string(back), cga::edge_list_string(g));
  }
}

TEST(EdgeList, IrrationalCRoundTrips) {
  const Graph g(TreeParams(2, 3, 1.0 / 0.3), false, 1, {});
  std::istringstream in(cga::edge_list_string(g));
  EXPECT_EQ(cga::read_edge_list(in).params().c(), 1.0 / 0.3);
}

TEST(EdgeList, RejectsMalformedInput) {
  const char* bad[] = {
      "",
      "0 1\n",
      "# cga b=2 H=2 c=2 seed=0\n",
      "# cga b=2 H=2 c=2 seed=0 directed=2\n",
      "# cga b=1 H=2 c=2 seed=0 directed=0\n",
      "# cga b=2 H=2 c=x seed=0 directed=0\n",
      "# cga b=2 H=2 c=2 seed=0 directed=0\n0\n",
      "# cga b=2 H=2 c=2 seed=0 directed=0\n0 9\n",
      "# cga b=2 H=2 c=2 seed=0 directed=0\n0 1\n1 0\n",
      "# cga b=2 H=2 c=2 seed=0 directed=0\n0 a\n",
      "# cga b=2 H=2 c=2 seed=0 directed=0\n2 2\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(cga::read_edge_list(in), cga::FormatError) << text;
  }
}

TEST(EdgeList, FileRoundTripAndMissingFile) {
  const auto g = cga::sample_graph(TreeParams(2, 5, 2), 8, false);
  const auto path = std::filesystem::temp_directory_path() / "cga_edge_list_test.el";
  cga::save_edge_list(path.string(), g);
  EXPECT_EQ(cga::load_edge_list(path.string()), g);
  std::filesystem::remove(path);
  EXPECT_THROW(cga::load_edge_list(path.string()), std::ios_base::failure);
  EXPECT_THROW(cga::save_edge_list("/nonexistent-dir/x.el", g), std::ios_base::failure);
}
