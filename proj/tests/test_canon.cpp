#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "minorkit/canon.hpp"
#include "minorkit/catalog.hpp"
#include "minorkit/enumerate.hpp"
#include "oracles.hpp"

using namespace minorkit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.connect(a, b);
  return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
    const Graph h = permute(g, random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(are_isomorphic(g, h));
  }
}

TEST_CASE("canonical form is invariant on highly symmetric graphs") {
  std::mt19937 rng(5);
  for (const char* name : {"petersen", "k_4_4", "c12", "octahedron", "wagner_v8", "k_8", "e9"}) {
    CAPTURE(name);
    const Graph g = catalog_lookup(name);
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(canonical_form(permute(g, random_permutation(rng, g.order()))) == canonical_form(g));
    }
  }
}

TEST_CASE("canonical labeling positions produce the canonical graph") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.5);
    const CanonicalLabeling labeling = canonical_labeling(g);
    CHECK(permute(g, labeling.position) == labeling.form.graph());
  }
}

TEST_CASE("canonical forms agree with the brute-force oracle on iso classes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = random_graph(rng, n, 0.5);
    const Graph b = random_graph(rng, n, 0.5);
    CHECK((canonical_form(a) == canonical_form(b)) == (oracle::brute_code(a) == oracle::brute_code(b)));
  }
}

TEST_CASE("non-isomorphic graphs with equal degree sequences are told apart") {
  // C6 and two triangles are both 2-regular on six vertices.
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
  CHECK_FALSE(canonical_form(cycle_graph(6)) == canonical_form(two_triangles));
  // K3,3 and the triangular prism are both 3-regular on six vertices.
  Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(are_isomorphic(prism, complete_bipartite(3, 3)));
}

TEST_CASE("canonical ordering ranks order first") {
  CHECK(canonical_form(complete_graph(4)) < canonical_form(Graph(5)));
  CHECK(canonical_form(Graph(3)) < canonical_form(complete_graph(3)));
}

TEST_CASE("canonical graph6 is stable") {
  CHECK(canonical_form(complete_graph(3)).graph6() == "Bw");
  CHECK(canonical_form(permute(path_graph(3), std::vector<int>{1, 0, 2})).graph6() ==
        canonical_form(path_graph(3)).graph6());
}
