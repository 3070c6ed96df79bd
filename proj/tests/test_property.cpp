#include <doctest.h>

#include <random>

#include "minorkit/catalog.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/planarity.hpp"
#include "minorkit/property.hpp"
#include "oracles.hpp"

using namespace minorkit;

namespace {

// Random well-formed tree; `pred` is the operation allowed at this point (if any).
PropertyNode random_node(std::mt19937& rng, int depth) {
  auto leaf = [&] {
    switch (rng() % 7) {
      case 0: return PropertyNode{NodeKind::planar};
      case 1: return PropertyNode{NodeKind::outerplanar};
      case 2: return PropertyNode{NodeKind::truth};
      case 3: return PropertyNode{NodeKind::falsity};
      case 4: return PropertyNode{NodeKind::tw_le, static_cast<int>(rng() % 4)};
      case 5: return PropertyNode{NodeKind::edges_le, static_cast<int>(rng() % 12)};
      default: return PropertyNode{NodeKind::order_le, static_cast<int>(rng() % 9)};
    }
  };
  if (depth == 0) return leaf();
  switch (rng() % 6) {
    case 0: return PropertyNode{NodeKind::negation, -1, "", {random_node(rng, depth - 1)}};
    case 1: return PropertyNode{NodeKind::conjunction, -1, "", {random_node(rng, depth - 1), random_node(rng, depth - 1)}};
    case 2: return PropertyNode{NodeKind::disjunction, -1, "", {random_node(rng, depth - 1), random_node(rng, depth - 1)}};
    case 3: {
      const NodeKind quantifier = rng() % 2 ? NodeKind::some_vertex : NodeKind::all_vertices;
      PropertyNode op{NodeKind::remove_vertex, -1, "", {random_node(rng, depth - 1)}};
      return PropertyNode{quantifier, -1, "", {op}};
    }
    case 4: {
      const NodeKind quantifier = rng() % 2 ? NodeKind::some_edge : NodeKind::all_edges;
      const NodeKind action = rng() % 2 ? NodeKind::delete_edge : NodeKind::contract_edge;
      PropertyNode op{action, -1, "", {random_node(rng, depth - 1)}};
      return PropertyNode{quantifier, -1, "", {op}};
    }
    default: return leaf();
  }
}

}  // namespace

TEST_CASE("precedence: not binds tighter than and, and tighter than or") {
  CHECK(parse_property_node("not planar and outerplanar") ==
        PropertyNode{NodeKind::conjunction, -1, "",
                     {PropertyNode{NodeKind::negation, -1, "", {PropertyNode{NodeKind::planar}}},
                      PropertyNode{NodeKind::outerplanar}}});
  const PropertyNode mixed = parse_property_node("true or false and false");
  CHECK(mixed.kind == NodeKind::disjunction);
  CHECK(mixed.children[1].kind == NodeKind::conjunction);
  CHECK(parse_property("true or false and false").evaluate(Graph(1)));
  CHECK_FALSE(parse_property("(true or false) and false").evaluate(Graph(1)));
}

TEST_CASE("operations bind to a unary expression") {
  const PropertyNode n = parse_property_node("all_edges(del:planar or con:planar)");
  REQUIRE(n.kind == NodeKind::all_edges);
  const PropertyNode& body = n.children[0];
  CHECK(body.kind == NodeKind::disjunction);
  CHECK(body.children[0].kind == NodeKind::delete_edge);
  CHECK(body.children[1].kind == NodeKind::contract_edge);
}

TEST_CASE("parse errors report a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_property(text);
    } catch (const PropertyParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("planar and") == 10);
  CHECK(position_of("all_edges(rm:planar)") == 10);
  CHECK(position_of("rm:planar") == 0);
  CHECK(position_of("some_vertex(con:planar)") == 12);
  CHECK(position_of("tw_le(-1)") == 6);
  CHECK(position_of("nonsense") == 0);
  CHECK(position_of("planar)") == 6);
  CHECK(position_of("(planar") == 7);
  CHECK_THROWS_AS(parse_property("tw_le(1001)"), PropertyParseError);
}

TEST_CASE("print and parse round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const PropertyNode node = random_node(rng, 1 + static_cast<int>(rng() % 4));
    const std::string text = print_property(node);
    CAPTURE(text);
    CHECK(parse_property_node(text) == node);
  }
}

TEST_CASE("registry names expand to their definitions") {
  const auto& graphs = GraphEnumerator::shared().layer(6);
  const std::pair<const char*, const char*> pairs[] = {
      {"sap", "all_edges(del:planar and con:planar)"},
      {"almost_planar", "all_edges(del:planar or con:planar)"},
      {"ca", "all_vertices(rm:planar)"},
      {"ce", "all_edges(del:planar)"},
      {"cc", "all_edges(con:planar)"},
      {"ne", "not some_edge(del:planar)"},
      {"nc", "not some_edge(con:planar)"},
      {"cace", "all_edge_vertex_pairs(rm:planar or del:planar)"},
      {"apex(outerplanar)", "some_vertex(rm:outerplanar)"},
      {"e_le(3)", "edges_le(3)"},
  };
  for (auto [name, definition] : pairs) {
    CAPTURE(name);
    CHECK(expand_named(parse_property_node(name)) == parse_property_node(definition));
    const PropertySpec a = parse_property(name);
    const PropertySpec b = parse_property(definition);
    CHECK(a.declared_closed() == b.declared_closed());
    for (const Graph& g : graphs) CHECK(a.evaluate(g) == b.evaluate(g));
  }
  CHECK(property_registry().size() >= 11);
}

TEST_CASE("declared closedness") {
  CHECK(parse_property("planar").declared_closed());
  CHECK(parse_property("sap").declared_closed());
  CHECK(parse_property("almost_planar").declared_closed());
  CHECK(parse_property("apex(planar)").declared_closed());
  CHECK(parse_property("planar and tw_le(2)").declared_closed());
  CHECK_FALSE(parse_property("not planar").declared_closed());
  CHECK_FALSE(parse_property("ca").declared_closed());
  CHECK(parse_property("planar or outerplanar").declared_closed());
  CHECK(parse_property("not sap").complement_declared_closed());
  CHECK_FALSE(parse_property("sap").complement_declared_closed());
  CHECK(declared_closedness(parse_property("sap")).status == MinorClosedness::Status::declared_closed);
}

TEST_CASE("edge quantifiers on edgeless graphs and vertex quantifiers on K1") {
  CHECK(parse_property("sap").evaluate(Graph(4)));
  CHECK_FALSE(parse_property("some_edge(del:true)").evaluate(Graph(4)));
  CHECK(parse_property("some_vertex(rm:true)").evaluate(Graph(1)));
}

TEST_CASE("SAP sits between planar and almost-planar") {
  const PropertySpec sap = parse_property("sap");
  const PropertySpec almost = parse_property("almost_planar");
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : GraphEnumerator::shared().layer(n)) {
      if (is_planar(g)) CHECK(sap.evaluate(g));
      if (sap.evaluate(g)) CHECK(almost.evaluate(g));
    }
  CHECK(sap.evaluate(complete_graph(5)));
  CHECK_FALSE(sap.evaluate(catalog_lookup("k33_plus_e")));
  CHECK(almost.evaluate(catalog_lookup("k33_plus_e")));
}

TEST_CASE("edge and order bounds are definitional") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : GraphEnumerator::shared().layer(n)) {
      CHECK(parse_property("e_le(0)").evaluate(g) == (g.size() == 0));
      CHECK(parse_property("e_le(4)").evaluate(g) == (g.size() <= 4));
      CHECK(parse_property("order_le(3)").evaluate(g) == (g.order() <= 3));
    }
  CHECK(parse_property("order_le(3)").order_sensitive());
  CHECK_FALSE(parse_property("planar").order_sensitive());
}

TEST_CASE("pair quantifier skips the edge's own endpoints") {
  // On K2 the only edge has no other vertex, so the universal pair quantifier is vacuous.
  CHECK(parse_property("all_edge_vertex_pairs(rm:false)").evaluate(complete_graph(2)));
  CHECK_FALSE(parse_property("all_edge_vertex_pairs(rm:false)").evaluate(complete_graph(3)));
}

TEST_CASE("treewidth matches the elimination-order oracle") {
  for (int n = 1; n <= 7; ++n) {
    const auto& layer = GraphEnumerator::shared().layer(n);
    for (std::size_t i = 0; i < layer.size(); i += (n == 7 ? 5 : 1)) {
      const Graph& g = layer[i];
      const int expected = oracle::treewidth(g);
      CHECK(treewidth(g) == expected);
      CHECK(treewidth_le(g, expected));
      if (expected > 0) CHECK_FALSE(treewidth_le(g, expected - 1));
    }
  }
  CHECK(treewidth(petersen_graph()) == 4);
  CHECK(treewidth(complete_graph(12)) == 11);
  CHECK_THROWS_AS(treewidth_le(Graph(13), 2), CapacityError);
}

TEST_CASE("minor-closedness scan") {
  const MinorClosedness planar = check_minor_closed(parse_property("planar"), 6);
  CHECK(planar.clean);
  CHECK(planar.bound == 6);
  const MinorClosedness nonplanar = check_minor_closed(parse_property("not planar"), 5);
  CHECK_FALSE(nonplanar.clean);
  REQUIRE(nonplanar.counterexample.has_value());
  CHECK(nonplanar.counterexample->graph == complete_graph(5));
  CHECK(parse_property("planar").evaluate(nonplanar.counterexample->minor));
  CHECK(check_minor_closed(parse_property("ca"), 6).clean);
  CHECK_FALSE(check_minor_closed(parse_property("order_le(3) or not order_le(5)"), 6).clean);
  CHECK_THROWS_AS(check_minor_closed(parse_property("planar"), 9), CapacityError);
}
