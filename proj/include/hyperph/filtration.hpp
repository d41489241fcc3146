#pragma once

// Weight functions on hyperedges and the sublevel filtrations they induce.

#include <vector>

#include "hyperph/hypergraph.hpp"

namespace hyperph {

class FilteredHypergraph {
 public:
  FilteredHypergraph() = default;

  // weights[i] is the weight of base.edges()[i]; all weights must be finite.
  FilteredHypergraph(Hypergraph base, std::vector<double> weights);

  static FilteredHypergraph constant(Hypergraph base, double w);

  const Hypergraph& base() const { return base_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(const Hyperedge& e) const;  // throws if e is not an edge

  friend bool operator==(const FilteredHypergraph& a,
                         const FilteredHypergraph& b) = default;

 private:
  Hypergraph base_;
  std::vector<double> weights_;
};

// Sublevel hypergraph {e : weight(e) <= t} on the same vertex list.
Hypergraph sublevel(const FilteredHypergraph& f, double t);

// Sorted distinct weights.
std::vector<double> critical_values(const FilteredHypergraph& f);

// max_e |f(e) - g(e)|; requires identical bases.
double linf_distance(const FilteredHypergraph& f, const FilteredHypergraph& g);

}  // namespace hyperph
