#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cubrecon/embeddability.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/generators.hpp"
#include "test_support.hpp"

using cubrecon::CubicalComplex;
using cubrecon::EdgeLabelling;
using cubrecon::HypercubeEmbedding;
using cubrecon::SimpleGraph;

namespace {

SimpleGraph cycle(std::size_t n) {
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, edges);
}

// Labelling listed around the cycle 0-1-...-(n-1)-0, mapped onto edge order.
EdgeLabelling cycle_labels(const SimpleGraph& g, const std::vector<std::size_t>& around) {
  EdgeLabelling lab;
  lab.labels.assign(g.edges().size(), 0);
  for (std::size_t i = 0; i < around.size(); ++i) {
    lab.labels[*g.edge_index(i, (i + 1) % around.size())] = around[i];
  }
  return lab;
}

// Exhaustive oracle: is there any injective map V -> {0,1}^n sending edges
// to hypercube edges? Only for tiny inputs.
bool brute_force_embeds(const SimpleGraph& g, std::size_t n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> code(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == g.vertex_count()) {
      std::set<std::uint64_t> s(code.begin(), code.end());
      if (s.size() != code.size()) return false;
      for (const auto& [a, b] : g.edges()) {
        if (std::popcount(code[a] ^ code[b]) != 1) return false;
      }
      return true;
    }
    for (std::uint64_t c = 0; c < size; ++c) {
      code[v] = c;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<CubicalComplex> generator_corpus() {
  std::vector<CubicalComplex> out;
  for (const char* spec :
       {"cube(3)", "boundary-cube(3)", "boundary-cube(4)", "even-cycle(4)", "even-cycle(6)", "even-cycle(10)",
        "product(boundary-cube(2),boundary-cube(2))", "product(boundary-cube(3),boundary-cube(2))",
        "cbs({0,1},{1,2},{0,2})", "cbs({0,1,2},{0,2,3})", "disjoint-union(boundary-cube(2),cube(1))",
        "skeleton-of(boundary-cube(4),1)"}) {
    out.push_back(cubrecon::generate_complex(spec));
  }
  return out;
}

}  // namespace

TEST(SimpleGraph, Validation) {
  EXPECT_THROW(SimpleGraph(2, {{0, 2}}), cubrecon::StructuralError);
  EXPECT_THROW(SimpleGraph(2, {{1, 1}}), cubrecon::StructuralError);
  EXPECT_THROW(SimpleGraph(2, {{0, 1}, {1, 0}}), cubrecon::StructuralError);
  const SimpleGraph g(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(g.edges(), (std::vector<SimpleGraph::Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(SimpleGraph(3, {{0, 1}}).is_connected());
}

TEST(VerifyLabelling, Examples) {
  const auto c4 = cycle(4);
  EXPECT_TRUE(verify_labelling(c4, cycle_labels(c4, {1, 2, 1, 2})));
  EXPECT_FALSE(verify_labelling(c4, cycle_labels(c4, {1, 2, 1, 3})));
  const SimpleGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_labelling(path, EdgeLabelling{{1, 1}}));
  EXPECT_TRUE(verify_labelling(path, EdgeLabelling{{1, 2}}));
}

TEST(VerifyLabelling, Errors) {
  const auto c4 = cycle(4);
  EXPECT_THROW(verify_labelling(c4, EdgeLabelling{{1, 2}}), cubrecon::StructuralError);
  EXPECT_THROW(verify_labelling(SimpleGraph(3, {{0, 1}}), EdgeLabelling{{1}}), cubrecon::StructuralError);
  EXPECT_THROW(verify_labelling(c4, cycle_labels(c4, {0, 2, 1, 2})), cubrecon::StructuralError);
}

TEST(VerifyLabelling, AgreesWithPathAndCycleEnumerationOnSmallGraphs) {
  // Oracle: every simple cycle has only even label counts and every simple
  // path between distinct vertices has some odd count.
  std::mt19937 rng(51);
  std::size_t accepted = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<SimpleGraph::Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);  // spanning tree
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng() % 4 == 0 && std::find(edges.begin(), edges.end(), SimpleGraph::Edge{u, v}) == edges.end()) {
          edges.emplace_back(u, v);
        }
      }
    }
    const SimpleGraph g(n, edges);
    EdgeLabelling lab;
    for (std::size_t i = 0; i < g.edges().size(); ++i) lab.labels.push_back(1 + rng() % 3);

    bool ok = true;
    std::vector<bool> on(n, false);
    std::vector<std::size_t> counts(4, 0);
    auto walk = [&](auto&& self, std::size_t start, std::size_t u) -> void {
      for (auto w : g.neighbours(u)) {
        const std::size_t l = lab.labels[*g.edge_index(u, w)];
        if (w == start && counts[0] >= 2) {  // closing a cycle of >= 3 edges
          ++counts[l];
          if (counts[1] % 2 || counts[2] % 2 || counts[3] % 2) ok = false;
          --counts[l];
        }
        if (on[w]) continue;
        on[w] = true;
        ++counts[l];
        ++counts[0];
        if (counts[1] % 2 == 0 && counts[2] % 2 == 0 && counts[3] % 2 == 0) ok = false;  // path, all even
        self(self, start, w);
        --counts[0];
        --counts[l];
        on[w] = false;
      }
    };
    for (std::size_t s = 0; s < n; ++s) {
      on[s] = true;
      walk(walk, s, s);
      on[s] = false;
    }
    EXPECT_EQ(verify_labelling(g, lab), ok) << "trial " << t;
    accepted += ok ? 1 : 0;
  }
  EXPECT_GT(accepted, 0u);
}

TEST(FindEmbedding, OddCyclesRejectedWithCertificate) {
  std::mt19937 rng(52);
  for (int t = 0; t < 30; ++t) {
    const std::size_t len = 3 + 2 * (rng() % 3);
    const auto g = cycle(len);
    const auto r = find_graph_embedding(g, 6);
    EXPECT_FALSE(r.embedding.has_value());
    ASSERT_TRUE(r.odd_cycle.has_value());
    const auto& cyc = *r.odd_cycle;
    EXPECT_EQ(cyc.size() % 2, 1u);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      EXPECT_TRUE(g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]).has_value());
    }
  }
}

TEST(FindEmbedding, TriangleAndK23Rejected) {
  EXPECT_FALSE(find_graph_embedding(cubrecon::graph_c3(), 6).embedding.has_value());
  const auto k23 = find_graph_embedding(cubrecon::graph_k23(), 6);
  EXPECT_FALSE(k23.embedding.has_value());
  EXPECT_FALSE(k23.odd_cycle.has_value());
  EXPECT_FALSE(brute_force_embeds(cubrecon::graph_k23(), 3));
}

TEST(FindEmbedding, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937 rng(53);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<SimpleGraph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const SimpleGraph g(n, edges);
    const auto r = find_graph_embedding(g, 3);
    EXPECT_EQ(r.embedding.has_value(), brute_force_embeds(g, 3)) << "trial " << t;
    if (r.embedding) {
      EXPECT_TRUE(r.embedding->is_valid_for(g));
    }
  }
}

TEST(FindEmbedding, CubeGraphEmbedsInItsOwnDimension) {
  const auto cg = graph_of(cubrecon::boundary_cube(3));
  const auto r = find_graph_embedding(cg.graph, 3);
  ASSERT_TRUE(r.embedding.has_value());
  EXPECT_EQ(r.embedding->n, 3u);
  EXPECT_TRUE(r.embedding->is_valid_for(cg.graph));
  EXPECT_EQ(r.embedding->codes[0], 0u);
}

TEST(FindEmbedding, GeneratorComplexesEmbedAtAmbientDimensionWithVerifiedLabels) {
  for (const auto& c : generator_corpus()) {
    const auto cg = graph_of(c);
    const auto r = find_graph_embedding(cg.graph, c.ambient_dim());
    ASSERT_TRUE(r.embedding.has_value()) << complex_to_string(c);
    EXPECT_LE(r.embedding->n, c.ambient_dim());
    EXPECT_TRUE(r.embedding->is_valid_for(cg.graph));
    const auto lab = labelling_from_embedding(*r.embedding, cg.graph);
    EXPECT_TRUE(verify_labelling_per_component(cg.graph, lab));
    const auto lifted = lift_to_complex_embedding(cubrecon::forget_embedding(c), *r.embedding);
    EXPECT_EQ(lifted.size(), c.size());
    EXPECT_EQ(lifted.f_vector(), c.f_vector());
  }
}

TEST(FindEmbedding, EmptyAndSingleVertex) {
  EXPECT_TRUE(find_graph_embedding(SimpleGraph(0, {}), 2).embedding.has_value());
  const auto one = find_graph_embedding(SimpleGraph(1, {}), 2);
  ASSERT_TRUE(one.embedding.has_value());
  EXPECT_EQ(one.embedding->n, 0u);
  EXPECT_THROW(find_graph_embedding(SimpleGraph(1, {}), 31), cubrecon::ContractError);
}

TEST(Labelling, FromEmbeddingExamples) {
  const auto c4 = cycle(4);
  const HypercubeEmbedding emb{2, {0b00, 0b01, 0b11, 0b10}};
  const auto lab = labelling_from_embedding(emb, c4);
  EXPECT_EQ(lab.labels, cycle_labels(c4, {1, 2, 1, 2}).labels);
  EXPECT_TRUE(verify_labelling(c4, lab));

  const SimpleGraph edge(2, {{0, 1}});
  const auto r = find_graph_embedding(edge, 3);
  ASSERT_TRUE(r.embedding.has_value());
  EXPECT_EQ(labelling_from_embedding(*r.embedding, edge).labels, (std::vector<std::size_t>{1}));

  const auto cube = cubrecon::cube(3);
  const auto cg = graph_of(cube);
  HypercubeEmbedding identity{3, {}};
  for (const auto& v : cg.vertices) identity.codes.push_back(v.ones());
  const auto ids = labelling_from_embedding(identity, cg.graph);
  for (std::size_t i = 0; i < cg.graph.edges().size(); ++i) {
    const auto [u, v] = cg.graph.edges()[i];
    const auto span = cubrecon::span_of_vertices(3, {cg.vertices[u], cg.vertices[v]});
    EXPECT_EQ(std::uint64_t{1} << (ids.labels[i] - 1), span.stars());
  }
}

TEST(Labelling, RoundTripOnRandomSubgraphsOfHypercubes) {
  std::mt19937 rng(54);
  for (int t = 0; t < 60; ++t) {
    const auto c = skeleton(oracle::random_complex(rng, 4, 3, 2), 1);
    auto g = graph_of(c).graph;
    if (!g.is_connected()) continue;
    const auto r = find_graph_embedding(g, 4);
    ASSERT_TRUE(r.embedding.has_value());
    EXPECT_TRUE(verify_labelling(g, labelling_from_embedding(*r.embedding, g)));
  }
}

TEST(Lift, Examples) {
  const HypercubeEmbedding c4{2, {0b00, 0b01, 0b10, 0b11}};
  const auto square = cubrecon::boundary_cube(2);
  EXPECT_EQ(lift_to_complex_embedding(cubrecon::forget_embedding(square), c4), square);
  const auto disk = cubrecon::cube(2);
  EXPECT_EQ(lift_to_complex_embedding(cubrecon::forget_embedding(disk), c4), disk);

  const auto hexagon = cubrecon::generate_complex("cbs({0,1},{1,2},{0,2})");
  const auto abstract = cubrecon::forget_embedding(hexagon);
  const auto r = find_graph_embedding(abstract.graph(), 3);
  ASSERT_TRUE(r.embedding.has_value());
  const auto lifted = lift_to_complex_embedding(abstract, *r.embedding);
  EXPECT_EQ(lifted.f_vector(), (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(lifted.ambient_dim(), 3u);
}

TEST(Lift, RejectsNonEmbeddings) {
  const auto square = cubrecon::cube(2);
  const HypercubeEmbedding bad{2, {0b00, 0b01, 0b01, 0b11}};
  EXPECT_THROW(lift_to_complex_embedding(cubrecon::forget_embedding(square), bad), cubrecon::ContradictionError);
}

TEST(EhrenborgHetyei, EveryEmbeddingOfASmallCubeIsAFace) {
  std::size_t embeddings = 0;
  for (std::size_t m = 0; m <= 2; ++m) {
    const auto cube = cubrecon::cube(m);
    const auto cg = graph_of(cube);
    for (std::size_t n = m; n <= 4; ++n) {
      cubrecon::for_each_graph_embedding(cg.graph, n, [&](const HypercubeEmbedding& emb) {
        ++embeddings;
        std::vector<cubrecon::CubeWord> image;
        for (std::size_t v = 0; v < cg.graph.vertex_count(); ++v) image.push_back(emb.word(v));
        const auto span = cubrecon::span_of_vertices(n, image);
        EXPECT_EQ(span.dim(), m);
        std::set<std::uint64_t> codes(emb.codes.begin(), emb.codes.end());
        EXPECT_EQ(codes.size(), std::size_t{1} << m);
        EXPECT_NO_THROW(lift_to_complex_embedding(cubrecon::forget_embedding(cube), emb));
        return true;
      });
    }
  }
  // Images are the C(n,m) 2^(n-m) m-faces, each hit by the 2^m m! graph
  // automorphisms of I^m: 2^n n!/(n-m)! embeddings in total.
  std::size_t expected = 0;
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = m; n <= 4; ++n) {
      std::size_t frames = std::size_t{1} << n;
      for (std::size_t i = 0; i < m; ++i) frames *= n - i;
      expected += frames;
    }
  }
  EXPECT_EQ(embeddings, expected);
}
