#pragma once

// Shared fixtures and seeded random generators for the test suite.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperph/filtration.hpp"
#include "hyperph/hypergraph.hpp"
#include "hyperph/morphism.hpp"

namespace testsup {

using hyperph::FilteredHypergraph;
using hyperph::Hyperedge;
using hyperph::Hypergraph;
using hyperph::HypergraphMorphism;

inline std::vector<std::string> vlabels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// The three edges of a triangle, no vertices, no face.
inline Hypergraph triangle_boundary() {
  return Hypergraph(vlabels(3), {{0, 1}, {1, 2}, {0, 2}});
}

// One-point wedge of k triangle 1-skeletons as a graph hypergraph: every
// vertex and every edge is a hyperedge. Vertex 0 is the wedge point.
inline Hypergraph wedge_of_triangles(int k) {
  std::vector<Hyperedge> edges;
  edges.push_back({0});
  for (int i = 0; i < k; ++i) {
    int a = 1 + 2 * i, b = 2 + 2 * i;
    edges.push_back({a});
    edges.push_back({b});
    edges.push_back({0, a});
    edges.push_back({0, b});
    edges.push_back({a, b});
  }
  return Hypergraph(vlabels(2 * k + 1), edges);
}

// Wedge weights: `hat` on the singleton at the wedge point, `base` elsewhere.
inline FilteredHypergraph wedge_filtration(int k, double base, double hat) {
  Hypergraph h = wedge_of_triangles(k);
  std::vector<double> w;
  for (const auto& e : h.edges())
    w.push_back(e == Hyperedge{0} ? hat : base);
  return FilteredHypergraph(std::move(h), std::move(w));
}

// A single m-simplex together with all of its 1-faces (no other faces).
inline Hypergraph simplex_frame(int m) {
  std::vector<Hyperedge> edges;
  Hyperedge top;
  for (int i = 0; i <= m; ++i) top.push_back(i);
  edges.push_back(top);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.push_back({i, j});
  return Hypergraph(vlabels(m + 1), edges);
}

// Frame weights: `edge` on every 1-face, `top` on the m-simplex.
inline FilteredHypergraph frame_filtration(int m, double top, double edge) {
  Hypergraph h = simplex_frame(m);
  std::vector<double> w;
  for (const auto& e : h.edges())
    w.push_back(e.size() == 2 ? edge : top);
  return FilteredHypergraph(std::move(h), std::move(w));
}

// k disjoint blocks {4i,4i+1,4i+2} (a filled triangle), {4i+1,4i+3},
// {4i+2,4i+3}; no vertices, no faces of the filled triangle.
inline Hypergraph triangle_blocks(int k) {
  std::vector<Hyperedge> edges;
  for (int i = 0; i < k; ++i) {
    int b = 4 * i;
    edges.push_back({b, b + 1, b + 2});
    edges.push_back({b + 1, b + 3});
    edges.push_back({b + 2, b + 3});
  }
  return Hypergraph(vlabels(4 * k), edges);
}

// Coauthorship snapshots: {u}; +{u,v}; +{v,w}; +{u,v,w}.
inline Hypergraph coauthorship(int stage) {
  std::vector<std::string> verts = {"u", "v", "w"};
  std::vector<std::vector<std::string>> edges = {{"u"}};
  if (stage >= 1) edges.push_back({"u", "v"});
  if (stage >= 2) edges.push_back({"v", "w"});
  if (stage >= 3) edges.push_back({"u", "v", "w"});
  return Hypergraph::from_labels(verts, edges);
}

// ---- seeded random instances; all weights are dyadic (k/8) so that
// eps-shifted comparisons in the interleaving and stability tests are exact.

inline Hypergraph random_hypergraph(std::mt19937& rng, int max_vertices = 7,
                                    int max_edges = 20, int max_card = 5) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(1, max_edges);
  std::uniform_int_distribution<int> card(1, std::min(n, max_card));
  std::set<Hyperedge> edges;
  int want = ne(rng);
  for (int it = 0; it < 4 * want && static_cast<int>(edges.size()) < want;
       ++it) {
    std::set<int> pick;
    int c = card(rng);
    std::uniform_int_distribution<int> vx(0, n - 1);
    while (static_cast<int>(pick.size()) < c) pick.insert(vx(rng));
    edges.insert(Hyperedge(pick.begin(), pick.end()));
  }
  return Hypergraph(vlabels(n),
                    std::vector<Hyperedge>(edges.begin(), edges.end()));
}

inline double dyadic(std::mt19937& rng, int lo_eighths, int hi_eighths) {
  std::uniform_int_distribution<int> d(lo_eighths, hi_eighths);
  return d(rng) / 8.0;
}

inline FilteredHypergraph random_filtration(std::mt19937& rng, Hypergraph h) {
  std::vector<double> w;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    w.push_back(dyadic(rng, 0, 40));
  return FilteredHypergraph(std::move(h), std::move(w));
}

// Perturbs every weight by a dyadic offset of at most eps_eighths/8.
inline FilteredHypergraph perturb(std::mt19937& rng,
                                  const FilteredHypergraph& f,
                                  int eps_eighths) {
  std::uniform_int_distribution<int> d(-eps_eighths, eps_eighths);
  std::vector<double> w = f.weights();
  for (double& x : w) x += d(rng) / 8.0;
  return FilteredHypergraph(f.base(), std::move(w));
}

// Random filtration of a simplicial complex with face-monotone weights, so
// every sublevel set is itself a simplicial complex.
inline FilteredHypergraph random_simplicial_filtration(std::mt19937& rng,
                                                       int max_vertices = 7) {
  Hypergraph k =
      hyperph::associated_complex(random_hypergraph(rng, max_vertices, 10, 4));
  std::map<Hyperedge, double> w;
  for (const auto& e : k.edges()) w[e] = dyadic(rng, 0, 24);
  std::vector<const Hyperedge*> order;
  for (const auto& e : k.edges()) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const Hyperedge* a, const Hyperedge* b) {
              return a->size() < b->size();
            });
  for (const Hyperedge* ep : order) {
    if (ep->size() < 2) continue;
    double m = w[*ep];
    for (std::size_t skip = 0; skip < ep->size(); ++skip) {
      Hyperedge face;
      for (std::size_t j = 0; j < ep->size(); ++j)
        if (j != skip) face.push_back((*ep)[j]);
      m = std::max(m, w[face]);
    }
    w[*ep] = m;
  }
  std::vector<double> weights;
  for (const auto& e : k.edges()) weights.push_back(w[e]);
  return FilteredHypergraph(std::move(k), std::move(weights));
}

// Random morphism: the codomain is the image of a random vertex map plus a
// few extra hyperedges, so validity holds by construction.
inline HypergraphMorphism random_morphism(std::mt19937& rng,
                                          int max_vertices = 6,
                                          int max_edges = 10) {
  Hypergraph dom = random_hypergraph(rng, max_vertices, max_edges, 4);
  std::uniform_int_distribution<int> nc(1, max_vertices);
  int cod_n = nc(rng);
  std::uniform_int_distribution<int> vx(0, cod_n - 1);
  std::vector<int> vmap;
  for (std::size_t i = 0; i < dom.vertex_count(); ++i) vmap.push_back(vx(rng));
  std::set<Hyperedge> cod_edges;
  for (const auto& e : dom.edges()) {
    std::set<int> img;
    for (int v : e) img.insert(vmap[static_cast<std::size_t>(v)]);
    cod_edges.insert(Hyperedge(img.begin(), img.end()));
  }
  std::uniform_int_distribution<int> extra(0, 4);
  std::uniform_int_distribution<int> card(1, std::min(cod_n, 3));
  for (int i = extra(rng); i > 0; --i) {
    std::set<int> pick;
    int c = card(rng);
    while (static_cast<int>(pick.size()) < c) pick.insert(vx(rng));
    cod_edges.insert(Hyperedge(pick.begin(), pick.end()));
  }
  std::vector<std::string> cod_labels;
  for (int i = 0; i < cod_n; ++i) cod_labels.push_back("w" + std::to_string(i));
  Hypergraph cod(cod_labels,
                 std::vector<Hyperedge>(cod_edges.begin(), cod_edges.end()));
  return HypergraphMorphism(std::move(dom), std::move(cod), std::move(vmap));
}

}  // namespace testsup
