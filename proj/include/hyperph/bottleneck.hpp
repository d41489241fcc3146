#pragma once

#include "hyperph/persistence.hpp"

namespace hyperph {

// Bottleneck distance between persistence diagrams. Off-diagonal points may
// be matched to each other (cost = sup-norm of the difference) or to the
// diagonal (cost = half the persistence); points with infinite death are
// matched among themselves by birth. Returns +infinity when the essential
// point counts differ.
double bottleneck_infinity(const PersistenceDiagram& a,
                           const PersistenceDiagram& b);

// p-th Wasserstein-style distance with the same ground cost: the minimum over
// matchings of the l^p sum of per-pair costs, finite p >= 1.
double bottleneck_p(const PersistenceDiagram& a, const PersistenceDiagram& b,
                    double p);

// Dispatches on p: infinity selects bottleneck_infinity.
double diagram_distance(const PersistenceDiagram& a,
                        const PersistenceDiagram& b, double p);

// Distance between two filtrations on a common hypergraph: the largest
// diagram distance across the three filtration variants (embedded, upper
// associated, lower associated) in degree n.
double hypergraph_distance(const FilteredHypergraph& f,
                           const FilteredHypergraph& g, int n, double p,
                           std::uint32_t field = 2);

// Distance between two kernel/image/cokernel triples: the largest bottleneck
// distance across the three parts.
double map_distance(const DiagramTriple& a, const DiagramTriple& b);

// l^p refinement of map_distance (the sup over parts is kept; each part is
// compared with the p-cost matching).
double map_distance_p(const DiagramTriple& a, const DiagramTriple& b, double p);

}  // namespace hyperph
