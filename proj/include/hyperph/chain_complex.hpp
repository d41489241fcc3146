#pragma once

// Chain complexes over F_p.  Every complex the library builds from a
// hypergraph is realized inside one ambient simplicial chain basis (the
// associated complex of the full hypergraph) so that inclusion- and
// morphism-induced maps between different complexes compose without
// re-basing: a complex carries per-degree ambient "carrier" bases, and
// quotient complexes additionally carry projection/section matrices.

#include <cstdint>
#include <vector>

#include "hyperph/fp_matrix.hpp"
#include "hyperph/hypergraph.hpp"

namespace hyperph {

// dims[n] generators in degree n; boundary[n] maps degree n to degree n-1
// (boundary[0] has zero rows).  Degrees run 0..top(); out-of-range degrees
// are zero-dimensional.
struct ChainComplex {
  std::uint32_t p = 2;
  std::vector<std::size_t> dims;
  std::vector<Matrix> boundary;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const {
    return (n >= 0 && n <= top()) ? dims[n] : 0;
  }
  Matrix boundary_at(int n) const;  // zero-shaped outside 0..top

  // Shape consistency and boundary-of-boundary = 0; throws std::logic_error.
  void validate() const;
};

// The chain basis of a simplicial complex: per-degree sorted simplex lists
// together with boundary matrices in that basis (alternating-sign faces).
struct SimplicialChainBasis {
  std::vector<std::vector<Hyperedge>> simplices;  // per degree, sorted
  ChainComplex complex;

  std::size_t dim(int n) const { return complex.dim(n); }
  // Index of a simplex in its degree's basis; -1 when absent.
  long index_of(const Hyperedge& s) const;
};

// Builds the basis of a simplicial complex K through degree top_degree
// (padding zero degrees above K's own dimension).  Throws
// std::invalid_argument when K is not a simplicial complex.
SimplicialChainBasis simplicial_chain_basis(const Hypergraph& k,
                                            std::uint32_t p, int top_degree);

// The plain chain complex of a simplicial complex (natural top degree).
ChainComplex simplicial_chain_complex(const Hypergraph& k, std::uint32_t p);

// A chain complex realized relative to an ambient simplicial basis.
//  - carrier[n]: ambient_n x k_n basis of the carrying subspace;
//  - proj[n]/sect[n]: quotient projection and section (identity for plain
//    subcomplexes, where own coordinates are carrier coordinates).
// cx holds dimensions and boundaries in own (= quotient) coordinates.
struct ChainNode {
  ChainComplex cx;
  std::vector<Matrix> carrier;
  std::vector<Matrix> proj;
  std::vector<Matrix> sect;
};

// Node on the span of the given per-degree carriers; boundaries are the
// ambient boundaries restricted to the carriers (throws when the span is not
// closed under the boundary).
ChainNode subspace_node(const SimplicialChainBasis& ambient,
                        std::vector<Matrix> carriers);

// Coordinate subcomplex of the ambient spanned by the simplices of `sub`
// (every edge of `sub` must be an ambient simplex).
ChainNode coordinate_node(const SimplicialChainBasis& ambient,
                          const Hypergraph& sub, int top_degree);

// Quotient of a subcomplex node by per-degree subspaces of its own
// coordinates (w[n] must be boundary-invariant).
ChainNode quotient_node(const ChainNode& parent, const std::vector<Subspace>& w);

// Infimum chain complex of a hypergraph inside the ambient basis:
//   Inf_n = R_n cap boundary^{-1}(R_{n-1}),
// where R_n is the span of the cardinality-(n+1) hyperedges.
ChainNode infimum_complex(const SimplicialChainBasis& ambient,
                          const Hypergraph& h, int top_degree);

// Supremum chain complex: Sup_n = R_n + boundary(R_{n+1}).
ChainNode supremum_complex(const SimplicialChainBasis& ambient,
                           const Hypergraph& h, int top_degree);

// Homology of a chain complex in degree n.  Classes are coordinates with
// respect to `representatives`; reduce() sends cycle columns to class
// coordinates (throwing when a column is not a cycle).
struct HomologySpace {
  std::size_t dim = 0;
  Matrix representatives;  // chain_dim x dim
  Matrix cycles;           // chain_dim x z, basis of the cycle space
  Matrix projection;       // dim x z, quotient by the boundary space

  Matrix reduce(const Matrix& chains) const;
};

HomologySpace homology(const ChainComplex& c, int n);

// Embedded homology of a hypergraph: homology of the infimum complex.  Also
// computes the supremum side and checks the two dimensions agree, throwing
// std::logic_error on mismatch (which would signal a bug).
HomologySpace embedded_homology(const Hypergraph& h, int n, std::uint32_t p);

}  // namespace hyperph
