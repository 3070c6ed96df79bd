#include "minorkit/property.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>

#include "minorkit/canon.hpp"
#include "minorkit/planarity.hpp"

namespace minorkit {

PropertyParseError::PropertyParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, number, lparen, rparen, colon, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  long long value = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      const std::size_t start = i;
      if (c == '-') ++i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      Token t{Tok::number, std::string(src.substr(start, i - start)), start};
      const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw PropertyParseError("malformed number \"" + t.text + "\"", start);
      out.push_back(std::move(t));
    } else if (c == '(' || c == ')' || c == ':') {
      out.push_back({c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : Tok::colon, std::string(1, c), i});
      ++i;
    } else {
      throw PropertyParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Registry

const std::map<std::string, NodeKind, std::less<>>& quantifiers() {
  static const std::map<std::string, NodeKind, std::less<>> table = {
      {"some_vertex", NodeKind::some_vertex},
      {"all_vertices", NodeKind::all_vertices},
      {"some_edge", NodeKind::some_edge},
      {"all_edges", NodeKind::all_edges},
      {"all_edge_vertex_pairs", NodeKind::all_edge_vertex_pairs},
  };
  return table;
}

const std::map<std::string, NodeKind, std::less<>>& bounded_atoms() {
  static const std::map<std::string, NodeKind, std::less<>> table = {
      {"tw_le", NodeKind::tw_le},
      {"edges_le", NodeKind::edges_le},
      {"order_le", NodeKind::order_le},
  };
  return table;
}

// Definitions of the parameterless registry entries.
const std::map<std::string, std::string, std::less<>>& definitions() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"ca", "all_vertices(rm:planar)"},
      {"ce", "all_edges(del:planar)"},
      {"cc", "all_edges(con:planar)"},
      {"almost_planar", "all_edges(del:planar or con:planar)"},
      {"sap", "all_edges(del:planar and con:planar)"},
      {"ne", "not some_edge(del:planar)"},
      {"nc", "not some_edge(con:planar)"},
      {"cace", "all_edge_vertex_pairs(rm:planar or del:planar)"},
      {"strong_cace", "all_edge_vertex_pairs(rm:planar and del:planar)"},
  };
  return table;
}

const RegistryEntry* find_entry(std::string_view name) {
  for (const RegistryEntry& e : property_registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Parser: or_expr > and_expr > unary > primary

enum class Context { none, vertex, edge, pair };

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  PropertyNode parse() {
    PropertyNode node = parse_or(Context::none);
    if (peek().kind != Tok::end) fail("unexpected \"" + peek().text + "\"");
    return node;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  [[noreturn]] void fail(const std::string& message) const { throw PropertyParseError(message, peek().pos); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++at_;
  }

  bool at_keyword(const char* word) const { return peek().kind == Tok::ident && peek().text == word; }

  PropertyNode parse_or(Context ctx) {
    PropertyNode left = parse_and(ctx);
    while (at_keyword("or")) {
      ++at_;
      left = PropertyNode{NodeKind::disjunction, -1, {}, {std::move(left), parse_and(ctx)}};
    }
    return left;
  }

  PropertyNode parse_and(Context ctx) {
    PropertyNode left = parse_unary(ctx);
    while (at_keyword("and")) {
      ++at_;
      left = PropertyNode{NodeKind::conjunction, -1, {}, {std::move(left), parse_unary(ctx)}};
    }
    return left;
  }

  PropertyNode parse_unary(Context ctx) {
    if (at_keyword("not")) {
      ++at_;
      return PropertyNode{NodeKind::negation, -1, {}, {parse_unary(ctx)}};
    }
    return parse_primary(ctx);
  }

  int parse_count() {
    expect(Tok::lparen, "'('");
    if (peek().kind != Tok::number) fail("expected a count");
    const Token& t = next();
    if (t.value < 0) throw PropertyParseError("negative bound " + t.text, t.pos);
    if (t.value > 1000) throw PropertyParseError("bound " + t.text + " too large", t.pos);
    expect(Tok::rparen, "')'");
    return static_cast<int>(t.value);
  }

  PropertyNode parse_primary(Context ctx) {
    if (peek().kind == Tok::lparen) {
      ++at_;
      PropertyNode inner = parse_or(ctx);
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (peek().kind != Tok::ident) fail(peek().kind == Tok::end ? "unexpected end of input" : "unexpected \"" + peek().text + "\"");
    const Token& word = peek();
    const std::string id = word.text;

    if (id == "rm" || id == "del" || id == "con") {
      const bool allowed = id == "rm"    ? ctx == Context::vertex || ctx == Context::pair
                           : id == "del" ? ctx == Context::edge || ctx == Context::pair
                                         : ctx == Context::edge;
      if (!allowed) fail("\"" + id + ":\" not allowed here");
      ++at_;
      expect(Tok::colon, "':'");
      const NodeKind kind = id == "rm" ? NodeKind::remove_vertex : id == "del" ? NodeKind::delete_edge : NodeKind::contract_edge;
      return PropertyNode{kind, -1, {}, {parse_unary(Context::none)}};
    }
    if (const auto q = quantifiers().find(id); q != quantifiers().end()) {
      ++at_;
      expect(Tok::lparen, "'('");
      const Context inner = q->second == NodeKind::some_vertex || q->second == NodeKind::all_vertices ? Context::vertex
                            : q->second == NodeKind::all_edge_vertex_pairs                             ? Context::pair
                                                                                                       : Context::edge;
      PropertyNode pred = parse_or(inner);
      expect(Tok::rparen, "')'");
      return PropertyNode{q->second, -1, {}, {std::move(pred)}};
    }
    if (const auto b = bounded_atoms().find(id); b != bounded_atoms().end()) {
      ++at_;
      return PropertyNode{b->second, parse_count(), {}, {}};
    }
    if (id == "planar" || id == "outerplanar" || id == "true" || id == "false") {
      ++at_;
      const NodeKind kind = id == "planar" ? NodeKind::planar : id == "outerplanar" ? NodeKind::outerplanar
                            : id == "true" ? NodeKind::truth : NodeKind::falsity;
      return PropertyNode{kind, -1, {}, {}};
    }
    if (const RegistryEntry* entry = find_entry(id)) {
      ++at_;
      PropertyNode node{NodeKind::named, -1, id, {}};
      if (entry->param == RegistryParam::count) {
        node.k = parse_count();
      } else if (entry->param == RegistryParam::property) {
        expect(Tok::lparen, "'('");
        node.children.push_back(parse_or(Context::none));
        expect(Tok::rparen, "')'");
      }
      return node;
    }
    fail("unknown atom \"" + id + "\"");
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

constexpr int kOrLevel = 1;
constexpr int kAndLevel = 2;
constexpr int kUnaryLevel = 3;
constexpr int kAtomLevel = 4;

struct Printed {
  std::string text;
  int level;
};

std::string wrap(const Printed& p, int min_level) { return p.level < min_level ? "(" + p.text + ")" : p.text; }

Printed print_node(const PropertyNode& node) {
  switch (node.kind) {
    case NodeKind::planar:
      return {"planar", kAtomLevel};
    case NodeKind::outerplanar:
      return {"outerplanar", kAtomLevel};
    case NodeKind::truth:
      return {"true", kAtomLevel};
    case NodeKind::falsity:
      return {"false", kAtomLevel};
    case NodeKind::tw_le:
      return {"tw_le(" + std::to_string(node.k) + ")", kAtomLevel};
    case NodeKind::edges_le:
      return {"edges_le(" + std::to_string(node.k) + ")", kAtomLevel};
    case NodeKind::order_le:
      return {"order_le(" + std::to_string(node.k) + ")", kAtomLevel};
    case NodeKind::named: {
      std::string text = node.name;
      if (!node.children.empty()) text += "(" + print_node(node.children[0]).text + ")";
      if (node.k >= 0) text += "(" + std::to_string(node.k) + ")";
      return {text, kAtomLevel};
    }
    case NodeKind::negation:
      return {"not " + wrap(print_node(node.children[0]), kUnaryLevel), kUnaryLevel};
    case NodeKind::conjunction:
      return {wrap(print_node(node.children[0]), kAndLevel) + " and " + wrap(print_node(node.children[1]), kAndLevel + 1),
              kAndLevel};
    case NodeKind::disjunction:
      return {wrap(print_node(node.children[0]), kOrLevel) + " or " + wrap(print_node(node.children[1]), kOrLevel + 1),
              kOrLevel};
    case NodeKind::some_vertex:
    case NodeKind::all_vertices:
    case NodeKind::some_edge:
    case NodeKind::all_edges:
    case NodeKind::all_edge_vertex_pairs:
      for (const auto& [name, kind] : quantifiers()) {
        if (kind == node.kind) return {name + "(" + print_node(node.children[0]).text + ")", kAtomLevel};
      }
      break;
    case NodeKind::remove_vertex:
      return {"rm:" + wrap(print_node(node.children[0]), kUnaryLevel), kUnaryLevel};
    case NodeKind::delete_edge:
      return {"del:" + wrap(print_node(node.children[0]), kUnaryLevel), kUnaryLevel};
    case NodeKind::contract_edge:
      return {"con:" + wrap(print_node(node.children[0]), kUnaryLevel), kUnaryLevel};
  }
  return {"?", kAtomLevel};
}

// ---------------------------------------------------------------------------
// Evaluation over the expanded tree

struct Focus {
  Vertex vertex = -1;
  Edge edge;
  bool has_edge = false;
};

bool eval(const PropertyNode& node, const Graph& g, const Focus& focus) {
  switch (node.kind) {
    case NodeKind::planar:
      return is_planar(g);
    case NodeKind::outerplanar:
      return is_outerplanar(g);
    case NodeKind::truth:
      return true;
    case NodeKind::falsity:
      return false;
    case NodeKind::tw_le:
      return treewidth_le(g, node.k);
    case NodeKind::edges_le:
      return g.size() <= node.k;
    case NodeKind::order_le:
      return g.order() <= node.k;
    case NodeKind::named:
      return eval(expand_named(node), g, focus);
    case NodeKind::negation:
      return !eval(node.children[0], g, focus);
    case NodeKind::conjunction:
      return eval(node.children[0], g, focus) && eval(node.children[1], g, focus);
    case NodeKind::disjunction:
      return eval(node.children[0], g, focus) || eval(node.children[1], g, focus);
    case NodeKind::some_vertex:
    case NodeKind::all_vertices: {
      const bool want = node.kind == NodeKind::some_vertex;
      for (int v = 0; v < g.order(); ++v) {
        if (eval(node.children[0], g, {v, {}, false}) == want) return want;
      }
      return !want;
    }
    case NodeKind::some_edge:
    case NodeKind::all_edges: {
      const bool want = node.kind == NodeKind::some_edge;
      for (const Edge& e : g.edges()) {
        if (eval(node.children[0], g, {-1, e, true}) == want) return want;
      }
      return !want;
    }
    case NodeKind::all_edge_vertex_pairs:
      for (const Edge& e : g.edges()) {
        for (int v = 0; v < g.order(); ++v) {
          if (v == e.u || v == e.v) continue;
          if (!eval(node.children[0], g, {v, e, true})) return false;
        }
      }
      return true;
    case NodeKind::remove_vertex:
      return eval(node.children[0], delete_vertex(g, focus.vertex), {});
    case NodeKind::delete_edge:
      return eval(node.children[0], minorkit::delete_edge(g, focus.edge), {});
    case NodeKind::contract_edge:
      return eval(node.children[0], minorkit::contract_edge(g, focus.edge), {});
  }
  return false;
}

bool node_closed(const PropertyNode& node);

std::optional<bool> registry_closure(const PropertyNode& expanded) {
  for (const auto& [name, definition] : definitions()) {
    if (expand_named(parse_property_node(definition)) == expanded) return find_entry(name)->closed;
  }
  return std::nullopt;
}

bool node_closed(const PropertyNode& node) {
  switch (node.kind) {
    case NodeKind::planar:
    case NodeKind::outerplanar:
    case NodeKind::truth:
    case NodeKind::falsity:
    case NodeKind::tw_le:
    case NodeKind::edges_le:
    case NodeKind::order_le:
      return true;
    case NodeKind::named: {
      const RegistryEntry* entry = find_entry(node.name);
      if (entry->param == RegistryParam::property) return node_closed(node.children[0]);
      return entry->closed;
    }
    case NodeKind::conjunction:
    case NodeKind::disjunction:
      return node_closed(node.children[0]) && node_closed(node.children[1]);
    case NodeKind::some_vertex: {
      // apex of a minor-closed property
      const PropertyNode& pred = node.children[0];
      if (pred.kind == NodeKind::remove_vertex && node_closed(pred.children[0])) return true;
      break;
    }
    default:
      break;
  }
  if (auto known = registry_closure(expand_named(node))) return *known;
  return false;
}

bool mentions_order(const PropertyNode& node) {
  if (node.kind == NodeKind::order_le) return true;
  for (const PropertyNode& c : node.children) {
    if (mentions_order(c)) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<RegistryEntry>& property_registry() {
  static const std::vector<RegistryEntry> entries = {
      {"apex", RegistryParam::property, "some vertex deletion satisfies the argument", true},
      {"ca", RegistryParam::none, "every vertex deletion is planar", false},
      {"ce", RegistryParam::none, "every edge deletion is planar", false},
      {"cc", RegistryParam::none, "every edge contraction is planar", false},
      {"almost_planar", RegistryParam::none, "for every edge, its deletion or its contraction is planar", true},
      {"sap", RegistryParam::none, "for every edge, its deletion and its contraction are planar", true},
      {"ne", RegistryParam::none, "no edge deletion is planar", false},
      {"nc", RegistryParam::none, "no edge contraction is planar", false},
      {"cace", RegistryParam::none, "for every edge ab and vertex v outside it, G-v or G-ab is planar", false},
      {"strong_cace", RegistryParam::none, "for every edge ab and vertex v outside it, G-v and G-ab are planar", false},
      {"e_le", RegistryParam::count, "at most k edges", true},
  };
  return entries;
}

PropertyNode parse_property_node(std::string_view text) { return Parser(text).parse(); }

PropertySpec parse_property(std::string_view text) { return PropertySpec(parse_property_node(text)); }

std::string print_property(const PropertyNode& node) { return print_node(node).text; }

PropertyNode expand_named(const PropertyNode& node) {
  if (node.kind == NodeKind::named) {
    if (node.name == "apex") {
      return PropertyNode{NodeKind::some_vertex, -1, {},
                          {PropertyNode{NodeKind::remove_vertex, -1, {}, {expand_named(node.children[0])}}}};
    }
    if (node.name == "e_le") return PropertyNode{NodeKind::edges_le, node.k, {}, {}};
    const auto it = definitions().find(node.name);
    if (it == definitions().end()) throw std::logic_error("registry entry without definition: " + node.name);
    return expand_named(parse_property_node(it->second));
  }
  PropertyNode out = node;
  for (PropertyNode& c : out.children) c = expand_named(c);
  return out;
}

PropertySpec::PropertySpec(PropertyNode root)
    : root_(std::move(root)), expanded_(expand_named(root_)), text_(print_property(root_)) {}

bool PropertySpec::evaluate(const Graph& g) const { return eval(expanded_, g, {}); }

bool PropertySpec::declared_closed() const { return node_closed(root_); }

bool PropertySpec::complement_declared_closed() const {
  return root_.kind == NodeKind::negation && node_closed(root_.children[0]);
}

bool PropertySpec::order_sensitive() const { return mentions_order(expanded_); }

PropertySpec PropertySpec::negated() const { return PropertySpec(PropertyNode{NodeKind::negation, -1, {}, {root_}}); }

// ---------------------------------------------------------------------------
// Tree-width

bool treewidth_le(const Graph& g, int k) {
  const int n = g.order();
  if (n > 12) throw CapacityError("tree-width needs order <= 12, got " + std::to_string(n));
  if (k < 0) return false;
  if (n <= k + 1) return true;
  // feasible[S]: the vertices of S can be eliminated first, each with at most
  // k later-eliminated vertices reachable through S.
  std::vector<char> feasible(std::size_t{1} << n, 0);
  feasible[0] = 1;
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    for (VertexSet rest = s; rest != 0 && !feasible[s]; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      const VertexSet before = s & ~bit(v);
      if (!feasible[before]) continue;
      // vertices outside `before` reachable from v through `before`
      VertexSet reach = bit(v);
      VertexSet frontier = reach;
      while (frontier != 0) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(__builtin_ctz(f));
        next &= before & ~reach;
        reach |= next;
        frontier = next;
      }
      VertexSet boundary = 0;
      for (VertexSet r = reach; r != 0; r &= r - 1) boundary |= g.neighbors(__builtin_ctz(r));
      boundary &= ~before & ~bit(v);
      if (popcount(boundary) <= k) feasible[s] = 1;
    }
  }
  return feasible[low_bits(n)] != 0;
}

int treewidth(const Graph& g) {
  for (int k = 0;; ++k) {
    if (treewidth_le(g, k)) return k;
  }
}

// ---------------------------------------------------------------------------
// Minor-closedness

MinorClosedness declared_closedness(const PropertySpec& p) {
  MinorClosedness out;
  out.status = p.declared_closed() ? MinorClosedness::Status::declared_closed : MinorClosedness::Status::declared_open;
  return out;
}

}  // namespace minorkit
