#pragma once

// Hypergraphs on an ordered vertex set, their associated simplicial complex
// (downward closure) and lower-associated simplicial complex (largest
// simplicial complex contained in the hypergraph).

#include <cstddef>
#include <string>
#include <vector>

namespace hyperph {

// A hyperedge is a strictly ascending list of vertex indices; it doubles as
// an abstract simplex of cardinality size() and dimension size() - 1.
using Hyperedge = std::vector<int>;

class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges are canonicalized (sorted, deduplicated within an edge); empty
  // edges, out-of-range indices and duplicate edges are rejected.
  Hypergraph(std::vector<std::string> vertices, std::vector<Hyperedge> edges);

  static Hypergraph from_labels(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }  // sorted
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(const Hyperedge& e) const;
  int vertex_index(const std::string& label) const;  // -1 when absent

  // Largest simplex dimension that can occur: max cardinality - 1, or -1.
  int max_degree() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Hyperedge> edges_;
};

bool is_simplicial(const Hypergraph& h);

// Smallest simplicial complex containing h: all nonempty subsets of edges.
Hypergraph associated_complex(const Hypergraph& h);

// Largest simplicial complex contained in h: edges all of whose nonempty
// subsets are edges of h.
Hypergraph lower_associated_complex(const Hypergraph& h);

// Number of hyperedges of cardinality n + 1.
std::size_t count_simplices(const Hypergraph& h, int n);

// Edge containment for hypergraphs over the same vertex list.
bool edges_subset(const Hypergraph& inner, const Hypergraph& outer);

std::string format_hyperedge(const Hypergraph& h, const Hyperedge& e);

}  // namespace hyperph
