#include <doctest.h>

#include <set>

#include "minorkit/canon.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/planarity.hpp"
#include "oracles.hpp"

using namespace minorkit;

TEST_CASE("layer counts through order 7 match the orbit-marking oracle") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto& layer = GraphEnumerator::shared().layer(n);
    std::set<std::uint64_t> codes;
    for (const Graph& g : layer) codes.insert(oracle::brute_code(g));
    CHECK(codes.size() == layer.size());
    CHECK(codes == oracle::orbit_representatives(n));
  }
}

TEST_CASE("layer counts match Burnside through order 8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(GraphEnumerator::shared().layer(n).size() == oracle::burnside_count(n));
  }
}

TEST_CASE("layers hold distinct canonical forms sorted by size") {
  const auto& layer = GraphEnumerator::shared().layer(7);
  std::set<CanonicalForm> forms;
  int last_size = -1;
  for (const Graph& g : layer) {
    CHECK(g.order() == 7);
    CHECK(g.size() >= last_size);
    last_size = g.size();
    CHECK(forms.insert(canonical_form(g)).second);
  }
}

TEST_CASE("worker count does not change the output") {
  GraphEnumerator one(1);
  GraphEnumerator four(4);
  for (int n = 1; n <= 7; ++n) CHECK(one.layer(n) == four.layer(n));
}

TEST_CASE("hereditary filter prunes parents") {
  EnumFilter planar{[](const Graph& g) { return is_planar(g); }, true};
  const auto filtered = enumerate_graphs(6, planar, 2);
  std::size_t expected = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : GraphEnumerator::shared().layer(n)) expected += is_planar(g);
  CHECK(filtered.size() == expected);
  for (const Graph& g : filtered) CHECK(is_planar(g));
}

TEST_CASE("non-hereditary filter is applied at output only") {
  EnumFilter connected{[](const Graph& g) { return is_connected(g); }, false};
  const auto graphs = enumerate_graphs(6, connected, 2);
  // connected graphs of order 1..6: 1, 1, 2, 6, 21, 112
  CHECK(graphs.size() == 143);
}

TEST_CASE("for_each resumes from a position") {
  GraphEnumerator& e = GraphEnumerator::shared();
  std::vector<Graph> all;
  e.for_each(5, [&](const Graph& g, EnumPosition) {
    all.push_back(g);
    return true;
  });
  CHECK(all.size() == 1 + 2 + 4 + 11 + 34);
  std::vector<Graph> tail;
  e.for_each(5, [&](const Graph& g, EnumPosition) {
    tail.push_back(g);
    return true;
  }, EnumPosition{4, 3});
  CHECK(tail.size() == 11 - 3 + 34);
  CHECK(tail.front() == e.layer(4)[3]);
  int visited = 0;
  e.for_each(5, [&](const Graph&, EnumPosition) { return ++visited < 5; });
  CHECK(visited == 5);
}

TEST_CASE("orders above the enumeration cap are refused") {
  CHECK_THROWS_AS(GraphEnumerator::shared().layer(kMaxEnumerationOrder + 1), CapacityError);
}
