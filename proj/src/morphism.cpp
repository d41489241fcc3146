#include "hyperph/morphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace hyperph {

static Hyperedge map_edge_raw(const std::vector<int>& vertex_map,
                              const Hyperedge& e) {
  Hyperedge img;
  for (int v : e) img.push_back(vertex_map[v]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

MorphismValidation validate_morphism(const std::vector<int>& vertex_map,
                                     const Hypergraph& domain,
                                     const Hypergraph& codomain) {
  MorphismValidation r;
  if (vertex_map.size() != domain.vertex_count()) {
    r.ok = false;
    r.message = "vertex map is not total on the domain";
    return r;
  }
  for (int t : vertex_map) {
    if (t < 0 || t >= static_cast<int>(codomain.vertex_count())) {
      r.ok = false;
      r.message = "vertex map image out of range";
      return r;
    }
  }
  for (const auto& e : domain.edges()) {
    Hyperedge img = map_edge_raw(vertex_map, e);
    if (!codomain.contains(img)) {
      r.ok = false;
      r.violating = e;
      r.message = "image of hyperedge " + format_hyperedge(domain, e) +
                  " is not a hyperedge of the codomain";
      return r;
    }
  }
  return r;
}

HypergraphMorphism::HypergraphMorphism(Hypergraph domain, Hypergraph codomain,
                                       std::vector<int> vertex_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_map_(std::move(vertex_map)) {
  MorphismValidation v = validate_morphism(vertex_map_, domain_, codomain_);
  if (!v.ok) throw std::invalid_argument("invalid morphism: " + v.message);
}

Hyperedge map_hyperedge(const HypergraphMorphism& m, const Hyperedge& e) {
  if (!m.domain().contains(e))
    throw std::invalid_argument("map_hyperedge: edge not in the domain");
  return map_edge_raw(m.vertex_map(), e);
}

Hypergraph image_hypergraph(const HypergraphMorphism& m) {
  std::vector<Hyperedge> images;
  for (const auto& e : m.domain().edges())
    images.push_back(map_edge_raw(m.vertex_map(), e));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return Hypergraph(m.codomain().vertices(), std::move(images));
}

FilteredHypergraph pullback_filtration(const HypergraphMorphism& m,
                                       const FilteredHypergraph& on_codomain) {
  if (on_codomain.base() != m.codomain())
    throw std::invalid_argument("pull-back filtration must live on the codomain");
  std::vector<double> ws;
  for (const auto& e : m.domain().edges())
    ws.push_back(on_codomain.weight(map_edge_raw(m.vertex_map(), e)));
  return FilteredHypergraph(m.domain(), std::move(ws));
}

FilteredHypergraph pushforward_filtration(const HypergraphMorphism& m,
                                          const FilteredHypergraph& on_domain) {
  if (on_domain.base() != m.domain())
    throw std::invalid_argument("push-forward filtration must live on the domain");
  std::map<Hyperedge, double> best;
  const auto& es = m.domain().edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    Hyperedge img = map_edge_raw(m.vertex_map(), es[i]);
    double w = on_domain.weights()[i];
    auto it = best.find(img);
    if (it == best.end())
      best.emplace(std::move(img), w);
    else
      it->second = std::min(it->second, w);
  }
  Hypergraph image = image_hypergraph(m);
  std::vector<double> ws;
  for (const auto& e : image.edges()) ws.push_back(best.at(e));
  return FilteredHypergraph(std::move(image), std::move(ws));
}

}  // namespace hyperph
