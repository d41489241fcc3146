#include <limits>
#include <stdexcept>
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hyperph/filtration.hpp"
#include "hyperph/hypergraph.hpp"
#include "hyperph/morphism.hpp"
#include "support.hpp"

using namespace hyperph;
using namespace testsup;

TEST_CASE("hypergraph construction and canonical form") {
  Hypergraph h(vlabels(3), {{2, 0}, {1}});
  CHECK(h.edges() == std::vector<Hyperedge>{{0, 2}, {1}});  // lex order
  CHECK(h.contains({0, 2}));
  CHECK_FALSE(h.contains({0, 1}));
  CHECK(h.vertex_index("v1") == 1);
  CHECK(h.vertex_index("zz") == -1);
  CHECK(h.max_degree() == 1);
  CHECK(Hypergraph().max_degree() == -1);

  CHECK_THROWS_AS(Hypergraph(vlabels(2), {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(vlabels(2), {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(vlabels(2), {{0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({"a", "a"}, {}), std::invalid_argument);

  Hypergraph byname = Hypergraph::from_labels({"u", "v"}, {{"v", "u"}});
  CHECK(byname.edges() == std::vector<Hyperedge>{{0, 1}});
  CHECK_THROWS_AS(Hypergraph::from_labels({"u"}, {{"x"}}),
                  std::invalid_argument);
}

TEST_CASE("associated complex of the triangle boundary") {
  // three 1-cells and no vertices: closure adds exactly the three vertices
  Hypergraph h = triangle_boundary();
  Hypergraph d = associated_complex(h);
  CHECK(d.edge_count() == 6);
  CHECK(count_simplices(d, 0) == 3);
  CHECK(count_simplices(d, 1) == 3);
  CHECK(is_simplicial(d));
  CHECK_FALSE(is_simplicial(h));
  // nothing inside h is closed under taking faces
  CHECK(lower_associated_complex(h).edge_count() == 0);
}

TEST_CASE("associated complexes on degenerate and simplicial inputs") {
  Hypergraph empty;
  CHECK(associated_complex(empty).edge_count() == 0);
  CHECK(lower_associated_complex(empty).edge_count() == 0);

  // full powerset on three vertices is already simplicial: both maps fix it
  Hypergraph power(vlabels(3),
                   {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(is_simplicial(power));
  CHECK(associated_complex(power) == power);
  CHECK(lower_associated_complex(power) == power);

  // triangle block: filled face plus two struts, no vertices listed
  Hypergraph block = triangle_blocks(1);
  CHECK(block.edge_count() == 3);
  CHECK(lower_associated_complex(block).edge_count() == 0);
  CHECK(associated_complex(block).edge_count() == 10);  // 4 + 5 + 1
}

TEST_CASE("closure extremality, brute-forced on small inputs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = random_hypergraph(rng, 5, 4, 3);
    Hypergraph up = associated_complex(h);
    Hypergraph low = lower_associated_complex(h);

    CHECK(is_simplicial(up));
    CHECK(is_simplicial(low));
    CHECK(edges_subset(low, h));
    CHECK(edges_subset(h, up));
    CHECK(associated_complex(up) == up);
    CHECK(lower_associated_complex(low) == low);

    // minimality: no proper sub-collection of up containing h is simplicial
    std::vector<Hyperedge> extra;
    for (const Hyperedge& e : up.edges())
      if (!h.contains(e)) extra.push_back(e);
    if (extra.size() <= 9) {
      for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << extra.size());
           ++mask) {
        std::vector<Hyperedge> edges = h.edges();
        for (std::size_t b = 0; b < extra.size(); ++b)
          if (mask & (std::size_t{1} << b)) edges.push_back(extra[b]);
        CHECK_FALSE(is_simplicial(Hypergraph(up.vertices(), edges)));
      }
    }

    // maximality: enlarging low by any leftover edge of h breaks simpliciality
    for (const Hyperedge& e : h.edges()) {
      if (low.contains(e)) continue;
      std::vector<Hyperedge> edges = low.edges();
      edges.push_back(e);
      CHECK_FALSE(is_simplicial(Hypergraph(h.vertices(), edges)));
    }
  }
}

TEST_CASE("sublevel hypergraphs") {
  // weights align with the canonical edge order {01},{02},{12}
  FilteredHypergraph f(triangle_boundary(), {0.5, 1.0, 0.25});
  CHECK(f.weight({1, 2}) == 0.25);
  CHECK(sublevel(f, 0.0).edge_count() == 0);
  CHECK(sublevel(f, 0.25).edges() == std::vector<Hyperedge>{{1, 2}});
  CHECK(sublevel(f, 0.5).edge_count() == 2);
  CHECK(sublevel(f, 2.0) == f.base());
  CHECK(sublevel(f, 0.25).vertices() == f.base().vertices());

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    FilteredHypergraph g = random_filtration(rng, random_hypergraph(rng));
    double a = dyadic(rng, 0, 40), b = dyadic(rng, 0, 40);
    if (a > b) std::swap(a, b);
    CHECK(edges_subset(sublevel(g, a), sublevel(g, b)));
  }
}

TEST_CASE("critical values") {
  Hypergraph h(vlabels(4), {{0}, {1}, {2}, {3}});
  FilteredHypergraph f(h, {3, 1, 3, 2});
  CHECK(critical_values(f) == std::vector<double>{1, 2, 3});
  CHECK(critical_values(FilteredHypergraph()).empty());
  CHECK_THROWS_AS(FilteredHypergraph(h, {1, 2, 3}), std::invalid_argument);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(FilteredHypergraph(h, {1, 2, 3, inf}),
                  std::invalid_argument);
}

TEST_CASE("linf distance between weight functions") {
  Hypergraph h = triangle_boundary();
  FilteredHypergraph f(h, {0, 1, 2});
  FilteredHypergraph g(h, {0.5, 1, 1});
  CHECK(linf_distance(f, g) == 1.0);
  CHECK(linf_distance(f, f) == 0.0);
  FilteredHypergraph other(coauthorship(0), {0});
  CHECK_THROWS_AS(linf_distance(f, other), std::invalid_argument);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    FilteredHypergraph a = random_filtration(rng, random_hypergraph(rng));
    FilteredHypergraph b = perturb(rng, a, 6);
    CHECK(linf_distance(a, b) <= 6.0 / 8.0);
    CHECK(linf_distance(a, b) == linf_distance(b, a));
  }
}

TEST_CASE("morphism validation and construction") {
  Hypergraph tri = triangle_boundary();
  Hypergraph seg(vlabels(2), {{0}, {1}, {0, 1}});

  // collapse two triangle corners onto one segment endpoint
  MorphismValidation v = validate_morphism({0, 1, 1}, tri, seg);
  CHECK(v.ok);
  CHECK_NOTHROW(HypergraphMorphism(tri, seg, {0, 1, 1}));

  // image {0,1} of {v0,v1} is missing from an edgeless codomain
  MorphismValidation bad = validate_morphism({0, 1, 1}, tri, Hypergraph(vlabels(2), {}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violating == Hyperedge{0, 1});
  CHECK_THROWS_AS(HypergraphMorphism(tri, Hypergraph(vlabels(2), {}), {0, 1, 1}),
                  std::invalid_argument);

  // wrong arity and out-of-range entries
  CHECK_FALSE(validate_morphism({0, 1}, tri, seg).ok);
  CHECK_FALSE(validate_morphism({0, 1, 7}, tri, seg).ok);

  // inclusions between successive collaboration stages are valid
  for (int s = 0; s + 1 < 4; ++s) {
    Hypergraph a = coauthorship(s), b = coauthorship(s + 1);
    std::vector<int> idmap;
    for (const std::string& label : a.vertices())
      idmap.push_back(b.vertex_index(label));
    CHECK(validate_morphism(idmap, a, b).ok);
  }
}

TEST_CASE("hyperedge images") {
  Hypergraph tri = triangle_boundary();
  Hypergraph seg(vlabels(2), {{0}, {1}, {0, 1}});
  HypergraphMorphism m(tri, seg, {0, 1, 1});
  CHECK(map_hyperedge(m, {0, 1}) == Hyperedge{0, 1});
  CHECK(map_hyperedge(m, {1, 2}) == Hyperedge{1});  // collapsed
  Hypergraph img = image_hypergraph(m);
  CHECK(img.vertices() == seg.vertices());
  CHECK(img.edges() == std::vector<Hyperedge>{{0, 1}, {1}});
}

TEST_CASE("pull-back and push-forward filtrations") {
  Hypergraph tri = triangle_boundary();
  Hypergraph seg(vlabels(2), {{0}, {1}, {0, 1}});
  HypergraphMorphism m(tri, seg, {0, 1, 1});

  // seg's canonical edge order is {0},{0,1},{1}
  FilteredHypergraph on_cod(seg, {5, 2, 7});
  CHECK(on_cod.weight({1}) == 7);
  FilteredHypergraph pulled = pullback_filtration(m, on_cod);
  CHECK(pulled.base() == tri);
  CHECK(pulled.weight({0, 1}) == 2);  // image {0,1}
  CHECK(pulled.weight({0, 2}) == 2);
  CHECK(pulled.weight({1, 2}) == 7);  // image {1}

  FilteredHypergraph on_dom(tri, {3, 4, 6});  // edges {0,1},{0,2},{1,2}
  FilteredHypergraph pushed = pushforward_filtration(m, on_dom);
  CHECK(pushed.base() == image_hypergraph(m));
  CHECK(pushed.weight({0, 1}) == 3);  // min(3, 4): both map onto {0,1}
  CHECK(pushed.weight({1}) == 6);

  CHECK_THROWS_AS(pullback_filtration(m, on_dom), std::invalid_argument);
  CHECK_THROWS_AS(pushforward_filtration(m, on_cod), std::invalid_argument);
}

TEST_CASE("transported sublevels are images and preimages of sublevels") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    HypergraphMorphism m = random_morphism(rng);
    FilteredHypergraph on_dom = random_filtration(rng, m.domain());
    FilteredHypergraph on_cod = random_filtration(rng, m.codomain());
    for (int probe = 0; probe < 5; ++probe) {
      double t = dyadic(rng, 0, 40);

      Hypergraph cod_sub = sublevel(on_cod, t);
      std::vector<Hyperedge> expect_pull;
      for (const Hyperedge& e : m.domain().edges())
        if (cod_sub.contains(map_hyperedge(m, e))) expect_pull.push_back(e);
      CHECK(sublevel(pullback_filtration(m, on_cod), t).edges() == expect_pull);

      std::set<Hyperedge> expect_push;
      Hypergraph dom_sub = sublevel(on_dom, t);
      for (const Hyperedge& e : dom_sub.edges())
        expect_push.insert(map_hyperedge(m, e));
      std::vector<Hyperedge> got;
      Hypergraph push_sub = sublevel(pushforward_filtration(m, on_dom), t);
      for (const Hyperedge& e : push_sub.edges()) got.push_back(e);
      CHECK(std::set<Hyperedge>(got.begin(), got.end()) == expect_push);
      CHECK(got.size() == expect_push.size());
    }
  }
}

TEST_CASE("simplex counting") {
  CHECK(count_simplices(wedge_of_triangles(3), 1) == 9);
  CHECK(count_simplices(wedge_of_triangles(3), 0) == 7);
  Hypergraph frame = associated_complex(simplex_frame(4));
  CHECK(count_simplices(frame, 1) == 10);  // C(5,2)
  CHECK(count_simplices(Hypergraph(), 0) == 0);
  CHECK(count_simplices(frame, -1) == 0);
}
