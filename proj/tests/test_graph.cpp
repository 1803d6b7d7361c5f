#include "covres/graph.hpp"

#include <doctest.h>

#include <algorithm>

using namespace covres;

namespace {

std::vector<std::vector<int>> cover_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& c : minimal_vertex_covers(g)) out.push_back(c.vertices);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("triangle has the three edge covers") {
  const Graph g = build_complete_multipartite({1, 1, 1});
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 3);
  const auto covers = cover_sets(g);
  CHECK(covers == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("complete bipartite covers are the two sides") {
  const Graph g = build_complete_multipartite({2, 3});
  CHECK(g.vertex_count == 5);
  CHECK(g.edges.size() == 6);
  const auto covers = cover_sets(g);
  CHECK(covers == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(g.label(0) == "x1");
  CHECK(g.label(2) == "y1");
}

TEST_CASE("five-cycle has five covers of size three") {
  const Graph g = make_graph({"a", "b", "c", "d", "e"},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto covers = cover_sets(g);
  REQUIRE(covers.size() == 5);
  for (const auto& c : covers) {
    CHECK(c.size() == 3);
    CHECK(is_vertex_cover(g, c));
  }
}

TEST_CASE("multipartite size and edge count") {
  const Graph g = build_complete_multipartite({1, 2, 3, 4});
  CHECK(g.vertex_count == 10);
  CHECK(g.edges.size() == 35);
  REQUIRE(g.parts.has_value());
  CHECK(g.parts->size() == 4);
  // Minimal covers of a complete multipartite graph leave out one part.
  const auto covers = cover_sets(g);
  CHECK(covers.size() == 4);
  for (const auto& c : covers) CHECK(is_vertex_cover(g, c));
}

TEST_CASE("bipartite family wiring") {
  const Graph g = build_cm_bipartite_family(2);
  CHECK(g.vertex_count == 4);
  // x1 adjacent to every y, x_i adjacent to y_i for i >= 2.
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(1, 3));
  CHECK(!g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.edges.size() == 3);

  const Graph g3 = build_cm_bipartite_family(3);
  CHECK(g3.vertex_count == 6);
  CHECK(g3.edges.size() == 5);
  CHECK(g3.label(5) == "y3");
}

TEST_CASE("nested bipartite wiring") {
  const Graph g = build_nested_bipartite(1, 1, 2, 2);
  CHECK(g.vertex_count == 6);
  CHECK(g.edges.size() == 6);
  REQUIRE(g.parts.has_value());
  CHECK(g.parts->size() == 4);

  const Graph h = build_nested_bipartite(2, 1, 1, 1);
  CHECK(h.vertex_count == 5);
  CHECK(h.edges.size() == 5);

  // Unit blocks give the path x1 - y1 - x2 - y2? No: x1 joined to y1 and
  // y2, x2 joined to y2 only, so the path is y1, x1, y2, x2.
  const Graph p = build_nested_bipartite(1, 1, 1, 1);
  CHECK(p.vertex_count == 4);
  CHECK(p.edges.size() == 3);
  const auto covers = cover_sets(p);
  CHECK(covers.size() == 3);
}

TEST_CASE("make_graph rejects malformed input") {
  CHECK_THROWS_AS(make_graph({"a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  // Isolated vertex.
  CHECK_THROWS_AS(make_graph({"a", "b", "c"}, {{0, 1}}), std::invalid_argument);
  // Parts must partition and edges must cross parts.
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 1}},
                             std::vector<std::vector<int>>{{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 1}},
                             std::vector<std::vector<int>>{{0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_complete_multipartite({3}), std::invalid_argument);
  CHECK_THROWS_AS(build_complete_multipartite({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_cm_bipartite_family(1), std::invalid_argument);
  CHECK_THROWS_AS(build_nested_bipartite(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("cover enumeration is capped") {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 25; ++i) labels.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i + 1 < 25; ++i) edges.emplace_back(i, i + 1);
  const Graph path = make_graph(labels, edges);
  CHECK_THROWS_AS(minimal_vertex_covers(path), ResourceLimitError);
}

TEST_CASE("is_vertex_cover") {
  const Graph g = build_complete_multipartite({1, 1, 1});
  CHECK(is_vertex_cover(g, {0, 1}));
  CHECK(is_vertex_cover(g, {0, 1, 2}));
  CHECK(!is_vertex_cover(g, {0}));
  CHECK(!is_vertex_cover(g, {}));
}

TEST_SUITE_END();
