#include "hyperph/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyperph {

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen_labels;
  for (const auto& v : vertices_)
    if (!seen_labels.insert(v).second)
      throw std::invalid_argument("duplicate vertex label: " + v);
  std::set<Hyperedge> seen;
  for (Hyperedge e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    if (e.front() < 0 || e.back() >= static_cast<int>(vertices_.size()))
      throw std::invalid_argument("hyperedge vertex index out of range");
    if (!seen.insert(e).second)
      throw std::invalid_argument("duplicate hyperedge");
  }
  edges_.assign(seen.begin(), seen.end());
}

Hypergraph Hypergraph::from_labels(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& edges) {
  Hypergraph tmp(vertices, {});
  std::vector<Hyperedge> idx_edges;
  for (const auto& e : edges) {
    Hyperedge ie;
    for (const auto& label : e) {
      int i = tmp.vertex_index(label);
      if (i < 0) throw std::invalid_argument("unknown vertex label: " + label);
      ie.push_back(i);
    }
    idx_edges.push_back(std::move(ie));
  }
  return Hypergraph(std::move(vertices), std::move(idx_edges));
}

bool Hypergraph::contains(const Hyperedge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  return -1;
}

int Hypergraph::max_degree() const {
  std::size_t card = 0;
  for (const auto& e : edges_) card = std::max(card, e.size());
  return static_cast<int>(card) - 1;
}

bool is_simplicial(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() == 1) continue;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      Hyperedge facet;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) facet.push_back(e[i]);
      if (!h.contains(facet)) return false;
    }
  }
  return true;
}

Hypergraph associated_complex(const Hypergraph& h) {
  std::set<Hyperedge> closure;
  for (const auto& e : h.edges()) {
    std::size_t n = e.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      Hyperedge sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(e[i]);
      closure.insert(std::move(sub));
    }
  }
  return Hypergraph(h.vertices(),
                    std::vector<Hyperedge>(closure.begin(), closure.end()));
}

Hypergraph lower_associated_complex(const Hypergraph& h) {
  // By increasing cardinality: an edge belongs iff all of its facets do.
  std::set<Hyperedge> kept;
  std::vector<Hyperedge> by_card = h.edges();
  std::stable_sort(by_card.begin(), by_card.end(),
                   [](const Hyperedge& a, const Hyperedge& b) {
                     return a.size() < b.size();
                   });
  for (const auto& e : by_card) {
    bool ok = true;
    for (std::size_t skip = 0; skip < e.size() && ok; ++skip) {
      if (e.size() == 1) break;
      Hyperedge facet;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) facet.push_back(e[i]);
      ok = kept.count(facet) > 0;
    }
    if (ok) kept.insert(e);
  }
  return Hypergraph(h.vertices(),
                    std::vector<Hyperedge>(kept.begin(), kept.end()));
}

std::size_t count_simplices(const Hypergraph& h, int n) {
  if (n < 0) return 0;
  std::size_t card = static_cast<std::size_t>(n) + 1;
  std::size_t count = 0;
  for (const auto& e : h.edges())
    if (e.size() == card) ++count;
  return count;
}

bool edges_subset(const Hypergraph& inner, const Hypergraph& outer) {
  for (const auto& e : inner.edges())
    if (!outer.contains(e)) return false;
  return true;
}

std::string format_hyperedge(const Hypergraph& h, const Hyperedge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += " ";
    out += h.vertices()[e[i]];
  }
  return out + "}";
}

}  // namespace hyperph
