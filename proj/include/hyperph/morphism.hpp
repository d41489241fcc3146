#pragma once

// Morphisms of hypergraphs: vertex maps that send hyperedges to hyperedges
// (images may collapse to smaller cardinality), plus the pull-back and
// push-forward constructions that transport filtrations along a morphism.

#include <string>
#include <vector>

#include "hyperph/filtration.hpp"
#include "hyperph/hypergraph.hpp"

namespace hyperph {

struct MorphismValidation {
  bool ok = true;
  Hyperedge violating;  // first domain edge whose image is not a codomain edge
  std::string message;
};

MorphismValidation validate_morphism(const std::vector<int>& vertex_map,
                                     const Hypergraph& domain,
                                     const Hypergraph& codomain);

class HypergraphMorphism {
 public:
  // vertex_map[i] is the codomain index of domain vertex i; throws when the
  // map is not total or some edge image is not a codomain edge.
  HypergraphMorphism(Hypergraph domain, Hypergraph codomain,
                     std::vector<int> vertex_map);

  const Hypergraph& domain() const { return domain_; }
  const Hypergraph& codomain() const { return codomain_; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }

 private:
  Hypergraph domain_, codomain_;
  std::vector<int> vertex_map_;
};

// Image of a domain hyperedge: sorted, deduplicated vertex image.
Hyperedge map_hyperedge(const HypergraphMorphism& m, const Hyperedge& e);

// {phi(e) : e edge of domain} on the codomain vertex list.
Hypergraph image_hypergraph(const HypergraphMorphism& m);

// Pull-back of a filtration on the codomain: weight(e) = weight'(phi(e)).
FilteredHypergraph pullback_filtration(const HypergraphMorphism& m,
                                       const FilteredHypergraph& on_codomain);

// Push-forward of a filtration on the domain, living on image_hypergraph:
// weight(e') = min { weight(e) : phi(e) = e' }.
FilteredHypergraph pushforward_filtration(const HypergraphMorphism& m,
                                          const FilteredHypergraph& on_domain);

}  // namespace hyperph
