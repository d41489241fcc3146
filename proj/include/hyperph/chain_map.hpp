#pragma once

// Chain maps between the complexes of chain_complex.hpp, the chain maps a
// hypergraph morphism induces on the associated / supremum / infimum /
// lower-associated complexes, and kernel / cokernel complexes of chain maps.

#include <vector>

#include "hyperph/chain_complex.hpp"
#include "hyperph/morphism.hpp"

namespace hyperph {

struct ChainMap {
  ChainComplex source, target;
  std::vector<Matrix> maps;  // maps[n]: target.dim(n) x source.dim(n)

  Matrix map_at(int n) const;
  // Shape consistency and boundary commutation; throws std::logic_error.
  void validate() const;
};

// Per-degree matrices of the simplicial chain map induced by a morphism's
// vertex map between two ambient bases:  a simplex goes to its signed,
// sorted image, or to zero when vertices collapse.
std::vector<Matrix> ambient_morphism_map(const SimplicialChainBasis& source,
                                         const SimplicialChainBasis& target,
                                         const std::vector<int>& vertex_map);

// Chain map A -> B through their ambient realizations.  `ambient`, when
// present, transforms A's ambient into B's (e.g. a morphism map); otherwise
// the two nodes share one ambient and the map is induced by inclusion.
// Throws when the transported carrier does not land in B's carrier.
std::vector<Matrix> node_chain_map(const ChainNode& a, const ChainNode& b,
                                   const std::vector<Matrix>* ambient);

ChainMap node_map_as_chain_map(const ChainNode& a, const ChainNode& b,
                               const std::vector<Matrix>* ambient);

// All four chain maps a morphism induces, with the vertical inclusion maps
// of the two rows of complexes on each side.  Degrees run 0..top where top
// covers both sides' hyperedge cardinalities.
struct MorphismChainMaps {
  SimplicialChainBasis source_ambient, target_ambient;
  ChainNode src_delta, src_sup, src_inf, src_lower;
  ChainNode tgt_delta, tgt_sup, tgt_inf, tgt_lower;
  ChainMap delta_map, sup_map, inf_map, lower_map;   // horizontal
  ChainMap src_lower_incl, src_iota, src_sup_incl;   // lower->inf->sup->delta
  ChainMap tgt_lower_incl, tgt_iota, tgt_sup_incl;
};

MorphismChainMaps morphism_chain_maps(const HypergraphMorphism& m,
                                      std::uint32_t p);

// Kernel complex of a chain map: degree-wise kernels with the restricted
// boundary.
ChainComplex kernel_complex(const ChainMap& f);

// Cokernel complex: degree-wise quotients of the target by the image, with
// the induced boundary.
ChainComplex cokernel_complex(const ChainMap& f);

// Matrix of the homology map induced by the degree-n component of a chain
// map, with respect to the given homology bases.  Throws when the image of a
// representative cycle is not a cycle (which would signal a bug).
Matrix induced_homology_map(const Matrix& f_n, const HomologySpace& hs,
                            const HomologySpace& ht);

Matrix induced_homology_map(const ChainMap& f, int n);

}  // namespace hyperph
