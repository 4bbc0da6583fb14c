#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/errors.hpp"

namespace cubrecon {

/// Undirected graph on vertices 0..vertex_count-1, edges stored as sorted
/// (u < v) pairs in canonical order.
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
    for (auto& [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count) {
        throw StructuralError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
      }
      if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw StructuralError("parallel edges are not allowed");
    }
    edges_ = std::move(edges);
    adjacency_.assign(vertex_count, {});
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }

  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& a : adjacency_) m = std::max(m, a.size());
    return m;
  }

  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Component id per vertex, numbered in order of smallest vertex.
  std::vector<std::size_t> component_ids() const {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> id(vertex_count_, unset);
    std::size_t next = 0;
    for (std::size_t s = 0; s < vertex_count_; ++s) {
      if (id[s] != unset) continue;
      std::queue<std::size_t> q;
      q.push(s);
      id[s] = next;
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (auto w : adjacency_[u]) {
          if (id[w] == unset) {
            id[w] = next;
            q.push(w);
          }
        }
      }
      ++next;
    }
    return id;
  }

  bool is_connected() const {
    const auto id = component_ids();
    return std::all_of(id.begin(), id.end(), [](std::size_t c) { return c == 0; });
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Labels in 1..n, indexed like SimpleGraph::edges().
struct EdgeLabelling {
  std::vector<std::size_t> labels;
};

/// Vertex v goes to the bit vector codes[v]; bit i is coordinate i + 1.
struct HypercubeEmbedding {
  std::size_t n = 0;
  std::vector<std::uint64_t> codes;

  /// Injective, inside {0,1}^n, and edges go to hypercube edges.
  bool is_valid_for(const SimpleGraph& g) const {
    if (codes.size() != g.vertex_count() || n > 64) return false;
    const std::uint64_t range = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (auto c : codes) {
      if ((c & ~range) != 0) return false;
    }
    for (const auto& [u, v] : g.edges()) {
      if (std::popcount(codes[u] ^ codes[v]) != 1) return false;
    }
    return true;
  }

  CubeWord word(std::size_t v) const { return CubeWord::vertex(n, codes[v]); }
};

/// The graph of a complex: vertices in canonical order, plus that order.
struct ComplexGraph {
  SimpleGraph graph;
  std::vector<CubeWord> vertices;
};

inline ComplexGraph graph_of(const CubicalComplex& c) {
  ComplexGraph out;
  out.vertices = c.vertices();
  std::unordered_map<CubeWord, std::size_t> index;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) index.emplace(out.vertices[i], i);
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& f : c.faces()) {
    if (f.dim() != 1) continue;
    const auto ends = f.facets();
    edges.emplace_back(index.at(ends[0]), index.at(ends[1]));
  }
  out.graph = SimpleGraph(out.vertices.size(), std::move(edges));
  return out;
}

/// Checks the cycle-parity and path-parity conditions for a labelling of a
/// connected graph.
///
/// Each vertex gets the XOR of label indicator bits along a spanning-tree
/// path from the root. The fundamental cycle of a non-tree edge has even
/// label counts iff the edge's label bit equals the XOR of its endpoint
/// codes, and these cycles span the cycle space. With that in place, the
/// label parity along any path is the XOR of its endpoint codes, so the
/// path condition is the same as the codes being pairwise distinct.
inline bool verify_labelling(const SimpleGraph& g, const EdgeLabelling& lab) {
  if (lab.labels.size() != g.edges().size()) {
    throw StructuralError("labelling does not cover every edge");
  }
  if (!g.is_connected()) throw StructuralError("verify_labelling requires a connected graph");
  if (g.vertex_count() == 0) return true;
  for (auto l : lab.labels) {
    if (l < 1 || l > 64) throw StructuralError("labels must lie in 1..64");
  }
  auto label_bit = [&](std::size_t u, std::size_t v) {
    return std::uint64_t{1} << (lab.labels[*g.edge_index(u, v)] - 1);
  };

  std::vector<std::uint64_t> code(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> parent(g.vertex_count(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto w : g.neighbours(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = u;
      code[w] = code[u] ^ label_bit(u, w);
      q.push(w);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const bool tree_edge = (parent[v] == u && v != 0) || (parent[u] == v && u != 0);
    if (tree_edge) continue;
    if ((code[u] ^ code[v]) != label_bit(u, v)) return false;
  }
  std::vector<std::uint64_t> sorted = code;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// Induced subgraphs of the connected components, each with the original
/// vertex numbers of its vertices.
inline std::vector<std::pair<SimpleGraph, std::vector<std::size_t>>> split_components(const SimpleGraph& g) {
  const auto id = g.component_ids();
  const std::size_t count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<std::size_t>> members(count);
  std::vector<std::size_t> local(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    local[v] = members[id[v]].size();
    members[id[v]].push_back(v);
  }
  std::vector<std::vector<SimpleGraph::Edge>> edges(count);
  for (const auto& [u, v] : g.edges()) edges[id[u]].emplace_back(local[u], local[v]);
  std::vector<std::pair<SimpleGraph, std::vector<std::size_t>>> out;
  for (std::size_t c = 0; c < count; ++c) {
    out.emplace_back(SimpleGraph(members[c].size(), std::move(edges[c])), std::move(members[c]));
  }
  return out;
}

/// verify_labelling applied to every connected component separately.
inline bool verify_labelling_per_component(const SimpleGraph& g, const EdgeLabelling& lab) {
  if (lab.labels.size() != g.edges().size()) throw StructuralError("labelling does not cover every edge");
  for (const auto& [sub, members] : split_components(g)) {
    EdgeLabelling part;
    for (const auto& [u, v] : sub.edges()) part.labels.push_back(lab.labels[*g.edge_index(members[u], members[v])]);
    if (!verify_labelling(sub, part)) return false;
  }
  return true;
}

/// Labels every edge by the coordinate (1-based) in which its endpoint
/// codes differ.
inline EdgeLabelling labelling_from_embedding(const HypercubeEmbedding& emb, const SimpleGraph& g) {
  if (emb.codes.size() != g.vertex_count()) throw StructuralError("embedding does not cover every vertex");
  EdgeLabelling lab;
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t diff = emb.codes[u] ^ emb.codes[v];
    if (std::popcount(diff) != 1) {
      throw ContradictionError("endpoints of edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") differ in " + std::to_string(std::popcount(diff)) + " coordinates");
    }
    lab.labels.push_back(static_cast<std::size_t>(std::countr_zero(diff)) + 1);
  }
  return lab;
}

struct EmbeddingSearch {
  std::optional<HypercubeEmbedding> embedding;
  // Set when the graph is not bipartite: a closed walk of odd length,
  // listed as its vertices in order.
  std::optional<std::vector<std::size_t>> odd_cycle;
  std::size_t n_max = 0;
};

namespace detail {

inline std::optional<std::vector<std::size_t>> find_odd_cycle(const SimpleGraph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> colour(g.vertex_count(), unset), parent(g.vertex_count(), unset),
      depth(g.vertex_count(), 0);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != unset) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto w : g.neighbours(u)) {
        if (colour[w] == unset) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (colour[w] == colour[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<std::size_t> left{u}, right{w};
          std::size_t a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::vector<std::vector<std::size_t>> all_pairs_distances(const SimpleGraph& g) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> dist(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), inf));
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto w : g.neighbours(u)) {
        if (dist[s][w] == inf) {
          dist[s][w] = dist[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

// Backtracking placement of vertices (in BFS order per component) into
// {0,1}^n. Prunes with Hamming distance <= graph distance (same parity) and
// with coordinate symmetry: among coordinates no placed code uses yet, only
// the lowest may be introduced.
class EmbeddingSearcher {
 public:
  EmbeddingSearcher(const SimpleGraph& g, std::size_t n, bool break_symmetry)
      : g_(g), n_(n), break_symmetry_(break_symmetry), dist_(all_pairs_distances(g)) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<bool> seen(g.vertex_count(), false);
    anchor_.assign(g.vertex_count(), unset);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        order_.push_back(u);
        for (auto w : g.neighbours(u)) {
          if (!seen[w]) {
            seen[w] = true;
            anchor_[w] = u;
            q.push(w);
          }
        }
      }
    }
    code_.assign(g.vertex_count(), 0);
  }

  /// Calls visit(codes) for every embedding found; visit returns false to stop.
  void run(const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    used_.clear();
    place(0, 0);
  }

 private:
  bool consistent(std::size_t v, std::uint64_t c, std::size_t placed) const {
    if (used_.contains(c)) return false;
    for (std::size_t i = 0; i < placed; ++i) {
      const std::size_t u = order_[i];
      const std::size_t d = dist_[v][u];
      const auto h = static_cast<std::size_t>(std::popcount(c ^ code_[u]));
      if (d == std::numeric_limits<std::size_t>::max()) continue;
      if (h > d || (h % 2) != (d % 2)) return false;
    }
    return true;
  }

  void place(std::size_t placed, std::uint64_t touched) {
    if (stopped_) return;
    if (placed == order_.size()) {
      if (!(*visit_)(code_)) stopped_ = true;
      return;
    }
    const std::size_t v = order_[placed];
    auto attempt = [&](std::uint64_t c) {
      if (!consistent(v, c, placed)) return;
      code_[v] = c;
      used_.insert(c);
      place(placed + 1, touched | c);
      used_.erase(c);
    };
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    if (anchor_[v] != unset) {
      const std::uint64_t base = code_[anchor_[v]];
      bool fresh_tried = false;
      for (std::size_t i = 0; i < n_ && !stopped_; ++i) {
        const std::uint64_t b = std::uint64_t{1} << i;
        if (break_symmetry_ && (touched & b) == 0) {
          if (fresh_tried) continue;
          fresh_tried = true;
        }
        attempt(base ^ b);
      }
    } else if (placed == 0 && break_symmetry_) {
      attempt(0);
    } else {
      const std::uint64_t limit = std::uint64_t{1} << n_;
      for (std::uint64_t c = 0; c < limit && !stopped_; ++c) attempt(c);
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  bool break_symmetry_;
  std::vector<std::vector<std::size_t>> dist_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> anchor_;
  std::vector<std::uint64_t> code_;
  std::unordered_set<std::uint64_t> used_;
  const std::function<bool(const std::vector<std::uint64_t>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace detail

/// Searches for an embedding of g into the graph of I^n for n up to n_max.
/// An empty result means none exists for any n <= n_max; for non-bipartite
/// graphs an odd cycle certifies that none exists for any n.
inline EmbeddingSearch find_graph_embedding(const SimpleGraph& g, std::size_t n_max) {
  EmbeddingSearch out;
  out.n_max = n_max;
  if (n_max > 30) throw ContractError("embedding search supports n_max <= 30");
  if (auto cycle = detail::find_odd_cycle(g)) {
    out.odd_cycle = std::move(cycle);
    return out;
  }
  if (g.vertex_count() == 0) {
    out.embedding = HypercubeEmbedding{0, {}};
    return out;
  }
  std::size_t lower = g.max_degree();
  while ((std::size_t{1} << lower) < g.vertex_count()) ++lower;
  for (std::size_t n = lower; n <= n_max; ++n) {
    detail::EmbeddingSearcher searcher(g, n, true);
    std::optional<std::vector<std::uint64_t>> found;
    searcher.run([&](const std::vector<std::uint64_t>& codes) {
      found = codes;
      return false;
    });
    if (found) {
      out.embedding = HypercubeEmbedding{n, std::move(*found)};
      return out;
    }
  }
  return out;
}

/// Every embedding of g into the graph of I^n, without symmetry reduction.
inline void for_each_graph_embedding(const SimpleGraph& g, std::size_t n,
                                     const std::function<bool(const HypercubeEmbedding&)>& visit) {
  if (n > 30) throw ContractError("embedding enumeration supports n <= 30");
  detail::EmbeddingSearcher searcher(g, n, false);
  searcher.run([&](const std::vector<std::uint64_t>& codes) { return visit(HypercubeEmbedding{n, codes}); });
}

/// A cubical complex given only by vertex sets of its faces (vertices,
/// edges and higher faces all listed).
struct AbstractCubicalComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> faces;

  SimpleGraph graph() const {
    std::vector<SimpleGraph::Edge> edges;
    for (const auto& f : faces) {
      if (f.size() == 2) edges.emplace_back(f[0], f[1]);
    }
    return SimpleGraph(vertex_count, std::move(edges));
  }
};

/// Forgets the coordinates of a complex; vertex i is the i-th vertex word
/// in canonical order.
inline AbstractCubicalComplex forget_embedding(const CubicalComplex& c) {
  AbstractCubicalComplex out;
  const auto verts = c.vertices();
  out.vertex_count = verts.size();
  std::unordered_map<CubeWord, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);
  for (const auto& f : c.faces()) {
    std::vector<std::size_t> vs;
    f.for_each_vertex([&](const CubeWord& v) { vs.push_back(index.at(v)); });
    std::sort(vs.begin(), vs.end());
    out.faces.push_back(std::move(vs));
  }
  return out;
}

/// Maps every face through a graph embedding and checks that its image is
/// an ambient face of matching dimension.
inline CubicalComplex lift_to_complex_embedding(const AbstractCubicalComplex& c, const HypercubeEmbedding& emb) {
  if (!emb.is_valid_for(c.graph())) {
    throw ContradictionError("vertex map is not a graph embedding into the hypercube");
  }
  std::vector<CubeWord> words;
  for (const auto& f : c.faces) {
    if (f.empty()) throw StructuralError("empty face in abstract complex");
    if (!std::has_single_bit(f.size())) {
      throw ContradictionError("a face with " + std::to_string(f.size()) + " vertices cannot be a cube");
    }
    std::vector<CubeWord> image;
    for (auto v : f) image.push_back(emb.word(v));
    const CubeWord span = span_of_vertices(emb.n, image);
    // Distinct codes inside the span, as many as the span has vertices.
    if ((std::size_t{1} << span.dim()) != f.size()) {
      throw ContradictionError("image of a " + std::to_string(f.size()) + "-vertex face is not an ambient face");
    }
    words.push_back(span);
  }
  try {
    return CubicalComplex::from_closed_faces(emb.n, std::move(words));
  } catch (const StructuralError& e) {
    throw ContradictionError(std::string("embedded faces do not form a complex: ") + e.what());
  }
}

}  // namespace cubrecon
