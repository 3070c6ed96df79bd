#include "minorkit/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "minorkit/graph6.hpp"

namespace minorkit {

namespace {

using Rows = std::array<VertexSet, kMaxOrder>;

struct Partition {
  std::array<VertexSet, kMaxOrder> cells{};
  int count = 0;

  void push(VertexSet cell) { cells[count++] = cell; }
  bool discrete(int n) const { return count == n; }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    if (n_ == 0) return {{}, CanonicalForm(Graph(0))};
    Partition root;
    root.push(low_bits(n_));
    search(root, 0);
    Graph out(n_);
    for (int i = 0; i < n_; ++i) {
      for (VertexSet row = best_rows_[i]; row != 0; row &= row - 1) {
        const int j = __builtin_ctz(row);
        if (j > i) out.connect(i, j);
      }
    }
    return {std::vector<int>(best_pos_.begin(), best_pos_.begin() + n_), CanonicalForm(std::move(out))};
  }

 private:
  void refine(Partition& p) const {
    struct Entry {
      std::array<std::uint8_t, kMaxOrder> sig;
      int vertex;
    };
    std::array<Entry, kMaxOrder> entries;
    for (;;) {
      Partition next;
      const int width = p.count;
      for (int c = 0; c < p.count; ++c) {
        const VertexSet cell = p.cells[c];
        if ((cell & (cell - 1)) == 0) {
          next.push(cell);
          continue;
        }
        int k = 0;
        for (VertexSet rest = cell; rest != 0; rest &= rest - 1) {
          Entry& e = entries[k++];
          e.vertex = __builtin_ctz(rest);
          const VertexSet row = g_.neighbors(e.vertex);
          for (int j = 0; j < width; ++j) e.sig[j] = static_cast<std::uint8_t>(popcount(row & p.cells[j]));
        }
        std::sort(entries.begin(), entries.begin() + k, [width](const Entry& a, const Entry& b) {
          const int c = std::memcmp(a.sig.data(), b.sig.data(), width);
          return c != 0 ? c < 0 : a.vertex < b.vertex;
        });
        VertexSet group = bit(entries[0].vertex);
        for (int i = 1; i < k; ++i) {
          if (std::memcmp(entries[i].sig.data(), entries[i - 1].sig.data(), width) != 0) {
            next.push(group);
            group = 0;
          }
          group |= bit(entries[i].vertex);
        }
        next.push(group);
      }
      if (next.count == p.count) return;
      p = next;
    }
  }

  void search(Partition p, int depth) {
    refine(p);
    if (p.discrete(n_)) {
      leaf(p);
      return;
    }
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const VertexSet cell = p.cells[target];
    VertexSet explored = 0;
    for (VertexSet rest = cell; rest != 0; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      if (explored != 0 && same_orbit_as_any(v, explored, depth)) continue;
      explored |= bit(v);
      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.push(bit(v));
          child.push(cell & ~bit(v));
        } else {
          child.push(p.cells[c]);
        }
      }
      prefix_[depth] = v;
      search(child, depth + 1);
    }
  }

  // Orbit test under the automorphisms found so far that fix the current
  // individualization prefix pointwise.
  bool same_orbit_as_any(int v, VertexSet explored, int depth) const {
    std::array<int, kMaxOrder> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[prefix_[i]] == prefix_[i];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(v);
    for (VertexSet rest = explored; rest != 0; rest &= rest - 1) {
      if (find(__builtin_ctz(rest)) == root) return true;
    }
    return false;
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[__builtin_ctz(p.cells[i])] = i;
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      VertexSet mapped = 0;
      for (VertexSet row = g_.neighbors(v); row != 0; row &= row - 1) mapped |= bit(pos[__builtin_ctz(row)]);
      rows[pos[v]] = mapped;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_rows_ = best_rows_ = rows;
      first_pos_ = best_pos_ = pos;
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(pos, first_pos_);
      return;
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record_automorphism(pos, best_pos_);
    } else if (cmp < 0) {
      best_rows_ = rows;
      best_pos_ = pos;
    }
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const std::array<int, kMaxOrder>& pos, const std::array<int, kMaxOrder>& other_pos) {
    std::array<int, kMaxOrder> at{};
    for (int v = 0; v < n_; ++v) at[other_pos[v]] = v;
    std::array<int, kMaxOrder> gamma{};
    for (int v = 0; v < n_; ++v) gamma[v] = at[pos[v]];
    automorphisms_.push_back(gamma);
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxOrder> prefix_{};
  bool have_leaf_ = false;
  Rows first_rows_{};
  Rows best_rows_{};
  std::array<int, kMaxOrder> first_pos_{};
  std::array<int, kMaxOrder> best_pos_{};
  std::vector<std::array<int, kMaxOrder>> automorphisms_;
};

}  // namespace

std::string CanonicalForm::graph6() const { return encode_graph6(graph_); }

std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.order() != b.order()) return a.order() <=> b.order();
  const auto ra = a.graph().rows();
  const auto rb = b.graph().rows();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] != rb[i]) return ra[i] <=> rb[i];
  }
  return std::strong_ordering::equal;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& key) const {
  std::size_t h = static_cast<std::size_t>(key.order()) * 0x9e3779b97f4a7c15ULL;
  for (VertexSet row : key.graph().rows()) {
    h ^= row + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace minorkit
