#include "hyperph/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperph {

FilteredHypergraph::FilteredHypergraph(Hypergraph base,
                                       std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.edge_count())
    throw std::invalid_argument("weight count does not match edge count");
  for (double w : weights_)
    if (!std::isfinite(w))
      throw std::invalid_argument("hyperedge weights must be finite");
}

FilteredHypergraph FilteredHypergraph::constant(Hypergraph base, double w) {
  std::vector<double> ws(base.edge_count(), w);
  return FilteredHypergraph(std::move(base), std::move(ws));
}

double FilteredHypergraph::weight(const Hyperedge& e) const {
  const auto& es = base_.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e)
    throw std::invalid_argument("weight of a non-edge requested");
  return weights_[static_cast<std::size_t>(it - es.begin())];
}

Hypergraph sublevel(const FilteredHypergraph& f, double t) {
  std::vector<Hyperedge> kept;
  const auto& es = f.base().edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (f.weights()[i] <= t) kept.push_back(es[i]);
  return Hypergraph(f.base().vertices(), std::move(kept));
}

std::vector<double> critical_values(const FilteredHypergraph& f) {
  std::vector<double> vals = f.weights();
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

double linf_distance(const FilteredHypergraph& f, const FilteredHypergraph& g) {
  if (f.base() != g.base())
    throw std::invalid_argument("function distance needs a common hypergraph");
  double d = 0;
  for (std::size_t i = 0; i < f.weights().size(); ++i)
    d = std::max(d, std::abs(f.weights()[i] - g.weights()[i]));
  return d;
}

}  // namespace hyperph
