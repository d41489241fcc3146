#pragma once

// Persistence modules over the finite critical-value scale of a filtration,
// their diagrams (via rank inclusion-exclusion over composite transitions,
// which stays correct for subspace filtrations like the embedded-homology
// one), persistent maps induced by hypergraph morphisms together with their
// kernel / image / cokernel modules, the full commutative diagram of
// homology-level arrows on the four complex rows, and verification of strong
// interleaving conditions.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperph/chain_map.hpp"
#include "hyperph/filtration.hpp"
#include "hyperph/morphism.hpp"

namespace hyperph {

enum class Variant { embedded, delta_upper, delta_lower };
enum class Direction { pushforward, pullback };

std::string to_string(Variant v);
std::string to_string(Direction d);

// Spaces at strictly increasing critical scales with transition matrices;
// index 0 (anything below scales.front()) is the zero space.
struct PersistenceModule {
  std::uint32_t p = 2;
  std::vector<double> scales;
  std::vector<std::size_t> dims;
  std::vector<Matrix> steps;  // steps[i]: dims[i] -> dims[i+1]

  std::size_t index_count() const { return scales.size(); }
  // Number of scales <= t, in 0..m.
  std::size_t index_at(double t) const;
  std::size_t dim_of_index(std::size_t i) const { return i == 0 ? 0 : dims[i - 1]; }
  std::size_t dim_at(double t) const { return dim_of_index(index_at(t)); }

  // Composite transition between indices 0..m, i <= j.
  Matrix transition(std::size_t i, std::size_t j) const;
  Matrix transition_at(double s, double t) const;

  void validate() const;  // shapes; throws std::logic_error
};

struct DiagramPoint {
  double birth = 0;
  double death = 0;  // +infinity for essential classes
  std::size_t multiplicity = 1;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

struct PersistenceDiagram {
  std::vector<DiagramPoint> points;  // sorted by (birth, death), merged

  void canonicalize();
  std::size_t size() const;  // total multiplicity

  friend bool operator==(const PersistenceDiagram&,
                         const PersistenceDiagram&) = default;
};

// Persistence module of one filtration variant in homology degree n.
PersistenceModule build_persistence_module(const FilteredHypergraph& f,
                                           Variant variant, int n,
                                           std::uint32_t p = 2);

// Diagram of a module by inclusion-exclusion over ranks of composite
// transitions.  Throws std::logic_error when a multiplicity comes out
// negative (a non-functorial input).
PersistenceDiagram module_diagram(const PersistenceModule& m);

PersistenceDiagram variant_diagram(const FilteredHypergraph& f,
                                   Variant variant, int n,
                                   std::uint32_t p = 2);

// A morphism of persistence modules over a common scale list.
struct PersistentMap {
  PersistenceModule source, target;
  std::vector<Matrix> maps;  // maps[i]: source.dims[i] -> target.dims[i]

  void validate() const;  // ladder commutes; throws std::logic_error
};

struct Submodules {
  PersistenceModule ker, im, coker;
  // Realizations at each index: kernel basis in source coordinates, image
  // basis in target coordinates, and the cokernel quotient of the target.
  std::vector<Matrix> ker_basis;
  std::vector<Matrix> im_basis;
  std::vector<QuotientMap> coker_quotient;
};

// Degree-wise kernels / images / cokernels with their induced transitions.
Submodules submodules(const PersistentMap& f);

struct DiagramTriple {
  PersistenceDiagram ker, im, coker;
};

DiagramTriple map_diagram_triple(const PersistentMap& f);

// The homology-level persistent map induced by a morphism on one complex
// row (embedded keys the row to the infimum complex).  For pushforward the
// filtration lives on the domain, for pullback on the codomain.
PersistentMap build_persistent_map(const HypergraphMorphism& m,
                                   const FilteredHypergraph& f,
                                   Direction direction, Variant variant, int n,
                                   std::uint32_t p = 2);

struct Arrow {
  std::string name;
  PersistentMap map;
};

// Every homology-level arrow of the commutative diagram induced by a
// morphism: per row (delta / sup / inf / lower) the horizontal map, the
// kernel inclusion and cokernel projection columns, the vertical maps
// between rows on the kernel, middle and cokernel columns, and the two
// iota maps between the infimum and supremum rows.
struct MorphismPersistence {
  std::uint32_t p = 2;
  int degree = 0;
  Direction direction = Direction::pushforward;
  std::vector<double> scales;
  std::map<std::string, PersistenceModule> modules;
  std::vector<Arrow> arrows;

  const PersistentMap& arrow(const std::string& name) const;
};

MorphismPersistence build_morphism_persistence(const HypergraphMorphism& m,
                                               const FilteredHypergraph& f,
                                               Direction direction, int n,
                                               std::uint32_t p = 2);

// (name, D(Ker), D(Im), D(Coker)) for every arrow.
std::vector<std::pair<std::string, DiagramTriple>> commutative_diagram_triples(
    const MorphismPersistence& mp);

// The arrows surfaced by the command-line interface: the four horizontal
// homology maps and the two iota maps.
const std::vector<std::string>& surfaced_arrows();

// ---- strong interleaving ----

using ShiftFn = std::function<Matrix(double)>;

struct InterleavingReport {
  bool ok = true;
  char condition = 0;  // failing condition 'a'..'d'
  double t = 0, s = 0;
};

// Checks conditions (a)-(d) of a strong eps-interleaving at every pair
// t <= s drawn from `samples`:
//   (a) psi_s  nu'_t^s  phi_{t-eps} = nu_{t-eps}^{s+eps}
//   (b) nu_{t+eps}^{s+eps} psi_t    = psi_s  nu'_t^s
//   (c) phi_s  nu_t^s  psi_{t-eps}  = nu'_{t-eps}^{s+eps}
//   (d) nu'_{t+eps}^{s+eps} phi_t   = phi_s  nu_t^s
// phi(t) must map P at t to Q at t+eps, psi(t) maps Q at t to P at t+eps.
InterleavingReport verify_strong_interleaving(const PersistenceModule& P,
                                              const PersistenceModule& Q,
                                              double eps, const ShiftFn& phi,
                                              const ShiftFn& psi,
                                              const std::vector<double>& samples);

// Inclusion-induced shift maps between the sublevel filtrations of two
// weight functions on one hypergraph, ready for verify_strong_interleaving.
struct InclusionInterleaving {
  PersistenceModule P, Q;
  double eps = 0;
  ShiftFn phi, psi;
  std::vector<double> samples;  // critical values, their +-eps shifts, midpoints
};

// eps < 0 means "use linf_distance(f, g)"; an explicit eps must be at least
// that distance or shift construction throws.
InclusionInterleaving build_inclusion_interleaving(const FilteredHypergraph& f,
                                                   const FilteredHypergraph& g,
                                                   Variant variant, int n,
                                                   std::uint32_t p = 2,
                                                   double eps = -1);

}  // namespace hyperph
