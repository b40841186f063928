#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vpg/graph.hpp"

using namespace vpg;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(testkit::vid(i));
  Graph g(ids);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("intersection graph basics") {
  GridRep cross(Rational(1), Flavor::VPG,
                {GridPath("a", {{0, 1}, {2, 1}}), GridPath("b", {{1, 0}, {1, 2}})});
  Graph k2 = intersection_graph(cross);
  CHECK(k2.size() == 2);
  CHECK(k2.edge_count() == 1);
  REQUIRE(k2.origin());
  CHECK(k2.origin()->path(1).id() == "b");

  std::vector<GridPath> apart;
  for (int i = 0; i < 5; ++i) apart.emplace_back(testkit::vid(i), std::vector<GridPoint>{{0, 2 * i}, {3, 2 * i}});
  CHECK(intersection_graph(GridRep(Rational(1), Flavor::VPG, apart)).edge_count() == 0);
}

TEST_CASE("intersection graph matches pairwise trace comparison") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    GridRep r = testkit::random_rep(rng, 10, 8, 8, 3);
    CHECK(testkit::same_graph(intersection_graph(r), testkit::slow_adjacency(r)));
  }
}

TEST_CASE("connected components") {
  Graph empty5(std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(connected_components(empty5).size() == 5);
  CHECK(connected_components(path_graph(6)).size() == 1);

  std::mt19937_64 rng(4);
  for (int round = 0; round < 100; ++round) {
    Graph g = testkit::random_graph(rng, 14, 0.12);
    // Union-find labelling as the reference.
    std::vector<std::size_t> parent(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
    const auto parts = connected_components(g);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < g.size(); ++i) roots.insert(find(i));
    CHECK(parts.size() == roots.size());
    std::size_t covered = 0;
    for (const auto& part : parts) {
      covered += part.size();
      for (auto v : part) CHECK(find(v) == find(part[0]));
    }
    CHECK(covered == g.size());
  }
}

TEST_CASE("structural checks") {
  Graph k3(std::vector<std::string>{"a", "b", "c"});
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  auto f = structural_checks(k3, true);
  CHECK(!f.triangle_free);
  CHECK(!f.bipartite);
  CHECK(f.subcubic);
  CHECK(f.planar == true);

  auto p4 = structural_checks(path_graph(4));
  CHECK(p4.subcubic);
  CHECK(p4.triangle_free);
  CHECK(p4.bipartite);
  CHECK(!p4.planar);

  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) ids.push_back(testkit::vid(i));
  Graph k5(ids);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  }
  auto f5 = structural_checks(k5, true);
  CHECK(f5.planar == false);
  CHECK(!f5.subcubic);
}

TEST_CASE("edge list export") {
  CHECK(export_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("self loops are rejected") {
  Graph g(std::vector<std::string>{"a"});
  CHECK_THROWS(g.add_edge(0, 0));
}

TEST_CASE("vertex set lexicographic order") {
  auto set_of = [](std::initializer_list<std::size_t> xs) {
    VertexSet s(70);
    for (auto x : xs) s.set(x);
    return s;
  };
  CHECK(lex_less(set_of({0, 2}), set_of({0, 3})));
  CHECK(lex_less(set_of({0, 1, 5}), set_of({0, 2})));
  CHECK(lex_less(set_of({0}), set_of({0, 1})));
  CHECK(!lex_less(set_of({0, 1}), set_of({0})));
  CHECK(lex_less(set_of({65}), set_of({66})));
  CHECK(!lex_less(set_of({3}), set_of({3})));
  CHECK(set_of({1, 64}).complement().count() == 68);
  CHECK(set_of({1, 64}).next(2) == 64);
}
