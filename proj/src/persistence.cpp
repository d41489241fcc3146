#include "hyperph/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <stdexcept>

namespace hyperph {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::embedded: return "embedded";
    case Variant::delta_upper: return "delta";
    case Variant::delta_lower: return "lower";
  }
  return "?";
}

std::string to_string(Direction d) {
  return d == Direction::pushforward ? "pushforward" : "pullback";
}

std::size_t PersistenceModule::index_at(double t) const {
  std::size_t i = 0;
  while (i < scales.size() && scales[i] <= t) ++i;
  return i;
}

Matrix PersistenceModule::transition(std::size_t i, std::size_t j) const {
  if (i > j || j > scales.size())
    throw std::invalid_argument("transition indices out of order");
  if (i == 0) return Matrix(dim_of_index(j), 0, p);
  Matrix c = Matrix::identity(dims[i - 1], p);
  for (std::size_t k = i; k < j; ++k) c = steps[k - 1] * c;
  return c;
}

Matrix PersistenceModule::transition_at(double s, double t) const {
  return transition(index_at(s), index_at(t));
}

void PersistenceModule::validate() const {
  if (dims.size() != scales.size())
    throw std::logic_error("persistence module: dimension count mismatch");
  for (std::size_t i = 1; i < scales.size(); ++i)
    if (!(scales[i - 1] < scales[i]))
      throw std::logic_error("persistence module: scales not increasing");
  std::size_t nsteps = scales.empty() ? 0 : scales.size() - 1;
  if (steps.size() != nsteps)
    throw std::logic_error("persistence module: step count mismatch");
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i].rows() != dims[i + 1] || steps[i].cols() != dims[i] ||
        steps[i].modulus() != p)
      throw std::logic_error("persistence module: step shape mismatch");
}

void PersistenceDiagram::canonicalize() {
  std::map<std::pair<double, double>, std::size_t> acc;
  for (const auto& pt : points)
    if (pt.multiplicity > 0) acc[{pt.birth, pt.death}] += pt.multiplicity;
  points.clear();
  for (const auto& [key, mult] : acc)
    points.push_back({key.first, key.second, mult});
}

std::size_t PersistenceDiagram::size() const {
  std::size_t n = 0;
  for (const auto& pt : points) n += pt.multiplicity;
  return n;
}

namespace {

// Per-scale chain nodes of one filtration variant with their homology.
struct FamilyBuild {
  std::vector<ChainNode> nodes;
  std::vector<HomologySpace> hom;
};

ChainNode build_variant_node(const SimplicialChainBasis& ambient,
                             const Hypergraph& sub, Variant v, int top) {
  switch (v) {
    case Variant::embedded:
      return infimum_complex(ambient, sub, top);
    case Variant::delta_upper:
      return coordinate_node(ambient, associated_complex(sub), top);
    case Variant::delta_lower:
      return coordinate_node(ambient, lower_associated_complex(sub), top);
  }
  throw std::logic_error("unknown variant");
}

FamilyBuild build_family(const SimplicialChainBasis& ambient,
                         const FilteredHypergraph& f,
                         const std::vector<double>& scales, Variant v, int n,
                         bool check_sup) {
  FamilyBuild fam;
  for (double t : scales) {
    Hypergraph sub = sublevel(f, t);
    ChainNode node = build_variant_node(ambient, sub, v, n + 1);
    HomologySpace h = homology(node.cx, n);
    if (v == Variant::embedded && check_sup) {
      ChainNode sup = supremum_complex(ambient, sub, n + 1);
      if (homology(sup.cx, n).dim != h.dim)
        throw std::logic_error(
            "infimum/supremum homology dimensions disagree (bug)");
    }
    fam.nodes.push_back(std::move(node));
    fam.hom.push_back(std::move(h));
  }
  return fam;
}

PersistenceModule assemble_module(const std::vector<double>& scales,
                                  const std::vector<ChainNode>& nodes,
                                  const std::vector<HomologySpace>& hom, int n,
                                  std::uint32_t p) {
  PersistenceModule m;
  m.p = p;
  m.scales = scales;
  for (const auto& h : hom) m.dims.push_back(h.dim);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto chain = node_chain_map(nodes[i], nodes[i + 1], nullptr);
    m.steps.push_back(induced_homology_map(chain[n], hom[i], hom[i + 1]));
  }
  m.validate();
  return m;
}

SimplicialChainBasis ambient_for(const Hypergraph& h, std::uint32_t p, int n) {
  return simplicial_chain_basis(associated_complex(h), p, n + 2);
}

}  // namespace

PersistenceModule build_persistence_module(const FilteredHypergraph& f,
                                           Variant variant, int n,
                                           std::uint32_t p) {
  if (n < 0) throw std::invalid_argument("homology degree must be nonnegative");
  std::vector<double> scales = critical_values(f);
  SimplicialChainBasis ambient = ambient_for(f.base(), p, n);
  FamilyBuild fam = build_family(ambient, f, scales, variant, n, true);
  return assemble_module(scales, fam.nodes, fam.hom, n, p);
}

PersistenceDiagram module_diagram(const PersistenceModule& m) {
  m.validate();
  std::size_t count = m.scales.size();
  std::vector<std::vector<std::size_t>> r(
      count + 1, std::vector<std::size_t>(count + 1, 0));
  for (std::size_t i = 1; i <= count; ++i) {
    Matrix c = Matrix::identity(m.dims[i - 1], m.p);
    r[i][i] = m.dims[i - 1];
    for (std::size_t j = i + 1; j <= count; ++j) {
      c = m.steps[j - 2] * c;
      r[i][j] = rank(c);
    }
  }
  PersistenceDiagram d;
  const double inf = std::numeric_limits<double>::infinity();
  auto checked = [](long mu) {
    if (mu < 0)
      throw std::logic_error(
          "negative multiplicity: transitions are not functorial");
    return static_cast<std::size_t>(mu);
  };
  for (std::size_t i = 1; i <= count; ++i) {
    for (std::size_t j = i + 1; j <= count; ++j) {
      long mu = static_cast<long>(r[i][j - 1]) - static_cast<long>(r[i][j]) -
                static_cast<long>(r[i - 1][j - 1]) +
                static_cast<long>(r[i - 1][j]);
      if (checked(mu) > 0)
        d.points.push_back({m.scales[i - 1], m.scales[j - 1],
                            static_cast<std::size_t>(mu)});
    }
    long mu = static_cast<long>(r[i][count]) - static_cast<long>(r[i - 1][count]);
    if (checked(mu) > 0)
      d.points.push_back({m.scales[i - 1], inf, static_cast<std::size_t>(mu)});
  }
  d.canonicalize();
  return d;
}

PersistenceDiagram variant_diagram(const FilteredHypergraph& f, Variant variant,
                                   int n, std::uint32_t p) {
  return module_diagram(build_persistence_module(f, variant, n, p));
}

void PersistentMap::validate() const {
  source.validate();
  target.validate();
  if (source.scales != target.scales)
    throw std::logic_error("persistent map: scale mismatch");
  if (maps.size() != source.dims.size())
    throw std::logic_error("persistent map: matrix count mismatch");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].rows() != target.dims[i] || maps[i].cols() != source.dims[i])
      throw std::logic_error("persistent map: matrix shape mismatch");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(target.steps[i] * maps[i] - maps[i + 1] * source.steps[i]).is_zero())
      throw std::logic_error("persistent map: ladder does not commute");
}

Submodules submodules(const PersistentMap& f) {
  f.validate();
  std::uint32_t p = f.source.p;
  std::size_t count = f.source.scales.size();
  Submodules out;
  out.ker.p = out.im.p = out.coker.p = p;
  out.ker.scales = out.im.scales = out.coker.scales = f.source.scales;

  std::vector<Subspace> kers, ims;
  std::vector<QuotientMap> quots;
  for (std::size_t i = 0; i < count; ++i) {
    kers.push_back(Subspace::span(kernel_basis(f.maps[i])));
    ims.push_back(Subspace::span(image_basis(f.maps[i])));
    quots.push_back(
        quotient_map(Subspace::full(f.target.dims[i], p), ims.back()));
    out.ker.dims.push_back(kers.back().dim());
    out.im.dims.push_back(ims.back().dim());
    out.coker.dims.push_back(quots.back().dim);
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    out.ker.steps.push_back(
        solve(kers[i + 1].basis, f.source.steps[i] * kers[i].basis));
    out.im.steps.push_back(
        solve(ims[i + 1].basis, f.target.steps[i] * ims[i].basis));
    out.coker.steps.push_back(quots[i + 1].projection * f.target.steps[i] *
                              quots[i].section);
  }
  out.ker.validate();
  out.im.validate();
  out.coker.validate();
  for (std::size_t i = 0; i < count; ++i) {
    out.ker_basis.push_back(kers[i].basis);
    out.im_basis.push_back(ims[i].basis);
  }
  out.coker_quotient = std::move(quots);
  return out;
}

DiagramTriple map_diagram_triple(const PersistentMap& f) {
  Submodules s = submodules(f);
  return {module_diagram(s.ker), module_diagram(s.im), module_diagram(s.coker)};
}

namespace {

struct TransportedFiltrations {
  FilteredHypergraph fs, ft;  // source-side and target-side filtrations
};

TransportedFiltrations transported(const HypergraphMorphism& m,
                                   const FilteredHypergraph& f,
                                   Direction dir) {
  if (dir == Direction::pushforward) {
    if (f.base() != m.domain())
      throw std::invalid_argument(
          "push-forward expects a filtration on the morphism's domain");
    return {f, pushforward_filtration(m, f)};
  }
  if (f.base() != m.codomain())
    throw std::invalid_argument(
        "pull-back expects a filtration on the morphism's codomain");
  return {pullback_filtration(m, f), f};
}

std::vector<double> merged_scales(const FilteredHypergraph& a,
                                  const FilteredHypergraph& b) {
  std::vector<double> s = critical_values(a);
  for (double t : critical_values(b)) s.push_back(t);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// A named family of chain nodes across scales with homology and module.
struct Family {
  std::vector<ChainNode> nodes;
  std::vector<HomologySpace> hom;
  PersistenceModule module;
};

Family make_family(std::vector<ChainNode> nodes,
                   const std::vector<double>& scales, int n, std::uint32_t p) {
  Family fam;
  fam.nodes = std::move(nodes);
  for (const auto& nd : fam.nodes) fam.hom.push_back(homology(nd.cx, n));
  fam.module = assemble_module(scales, fam.nodes, fam.hom, n, p);
  return fam;
}

PersistentMap make_arrow(const Family& a, const Family& b,
                         const std::vector<Matrix>* amb, int n) {
  PersistentMap pm;
  pm.source = a.module;
  pm.target = b.module;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    auto chain = node_chain_map(a.nodes[i], b.nodes[i], amb);
    pm.maps.push_back(induced_homology_map(chain[n], a.hom[i], b.hom[i]));
  }
  pm.validate();
  return pm;
}

}  // namespace

PersistentMap build_persistent_map(const HypergraphMorphism& m,
                                   const FilteredHypergraph& f,
                                   Direction direction, Variant variant, int n,
                                   std::uint32_t p) {
  TransportedFiltrations tf = transported(m, f, direction);
  std::vector<double> scales = merged_scales(tf.fs, tf.ft);
  SimplicialChainBasis src_amb = ambient_for(tf.fs.base(), p, n);
  SimplicialChainBasis tgt_amb = ambient_for(tf.ft.base(), p, n);
  std::vector<Matrix> amb =
      ambient_morphism_map(src_amb, tgt_amb, m.vertex_map());
  FamilyBuild fs = build_family(src_amb, tf.fs, scales, variant, n, false);
  FamilyBuild ft = build_family(tgt_amb, tf.ft, scales, variant, n, false);
  Family src = make_family(std::move(fs.nodes), scales, n, p);
  Family tgt = make_family(std::move(ft.nodes), scales, n, p);
  return make_arrow(src, tgt, &amb, n);
}

const PersistentMap& MorphismPersistence::arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return a.map;
  throw std::invalid_argument("unknown arrow: " + name);
}

MorphismPersistence build_morphism_persistence(const HypergraphMorphism& m,
                                               const FilteredHypergraph& f,
                                               Direction direction, int n,
                                               std::uint32_t p) {
  if (n < 0) throw std::invalid_argument("homology degree must be nonnegative");
  TransportedFiltrations tf = transported(m, f, direction);
  std::vector<double> scales = merged_scales(tf.fs, tf.ft);
  SimplicialChainBasis src_amb = ambient_for(tf.fs.base(), p, n);
  SimplicialChainBasis tgt_amb = ambient_for(tf.ft.base(), p, n);
  std::vector<Matrix> amb =
      ambient_morphism_map(src_amb, tgt_amb, m.vertex_map());
  int top = n + 1;

  // Row order delta, sup, inf, lower.
  struct Row {
    std::string name;
    std::vector<ChainNode> src, tgt;
    std::vector<std::vector<Matrix>> hmaps;  // per scale, per degree
    std::vector<ChainNode> ker, coker;
  };
  std::vector<Row> table(4);
  table[0].name = "delta";
  table[1].name = "sup";
  table[2].name = "inf";
  table[3].name = "lower";

  for (double t : scales) {
    Hypergraph hs = sublevel(tf.fs, t);
    Hypergraph ht = sublevel(tf.ft, t);
    table[0].src.push_back(
        coordinate_node(src_amb, associated_complex(hs), top));
    table[0].tgt.push_back(
        coordinate_node(tgt_amb, associated_complex(ht), top));
    table[1].src.push_back(supremum_complex(src_amb, hs, top));
    table[1].tgt.push_back(supremum_complex(tgt_amb, ht, top));
    table[2].src.push_back(infimum_complex(src_amb, hs, top));
    table[2].tgt.push_back(infimum_complex(tgt_amb, ht, top));
    table[3].src.push_back(
        coordinate_node(src_amb, lower_associated_complex(hs), top));
    table[3].tgt.push_back(
        coordinate_node(tgt_amb, lower_associated_complex(ht), top));
  }

  for (auto& row : table) {
    for (std::size_t i = 0; i < scales.size(); ++i) {
      row.hmaps.push_back(node_chain_map(row.src[i], row.tgt[i], &amb));
      // Kernel of the row map, realized inside the source ambient.
      std::vector<Matrix> kc;
      for (int d = 0; d <= top; ++d)
        kc.push_back(Subspace::span(row.src[i].carrier[d] *
                                    kernel_basis(row.hmaps[i][d]))
                         .basis);
      row.ker.push_back(subspace_node(src_amb, std::move(kc)));
      // Cokernel as a quotient of the target row node.
      std::vector<Subspace> w;
      for (int d = 0; d <= top; ++d)
        w.push_back(Subspace::span(image_basis(row.hmaps[i][d])));
      row.coker.push_back(quotient_node(row.tgt[i], w));
    }
  }

  MorphismPersistence out;
  out.p = p;
  out.degree = n;
  out.direction = direction;
  out.scales = scales;

  std::map<std::string, Family> fams;
  for (auto& row : table) {
    fams[row.name + ".src"] = make_family(std::move(row.src), scales, n, p);
    fams[row.name + ".tgt"] = make_family(std::move(row.tgt), scales, n, p);
    fams[row.name + ".ker"] = make_family(std::move(row.ker), scales, n, p);
    fams[row.name + ".coker"] = make_family(std::move(row.coker), scales, n, p);
  }
  for (const auto& [name, fam] : fams) out.modules[name] = fam.module;

  auto add = [&](const std::string& name, const std::string& a,
                 const std::string& b, const std::vector<Matrix>* ambient) {
    out.arrows.push_back({name, make_arrow(fams.at(a), fams.at(b), ambient, n)});
  };

  for (const auto& row : {"delta", "sup", "inf", "lower"}) {
    std::string r = row;
    add(r + ".h", r + ".src", r + ".tgt", &amb);
    add(r + ".ker_incl", r + ".ker", r + ".src", nullptr);
    add(r + ".coker_proj", r + ".tgt", r + ".coker", nullptr);
  }
  add("ker.lower_to_inf", "lower.ker", "inf.ker", nullptr);
  add("ker.inf_to_sup", "inf.ker", "sup.ker", nullptr);
  add("ker.sup_to_delta", "sup.ker", "delta.ker", nullptr);
  add("coker.lower_to_inf", "lower.coker", "inf.coker", nullptr);
  add("coker.inf_to_sup", "inf.coker", "sup.coker", nullptr);
  add("coker.sup_to_delta", "sup.coker", "delta.coker", nullptr);
  add("src.lower_to_emb", "lower.src", "inf.src", nullptr);
  add("src.emb_to_delta", "inf.src", "delta.src", nullptr);
  add("tgt.lower_to_emb", "lower.tgt", "inf.tgt", nullptr);
  add("tgt.emb_to_delta", "inf.tgt", "delta.tgt", nullptr);
  add("src.iota", "inf.src", "sup.src", nullptr);
  add("tgt.iota", "inf.tgt", "sup.tgt", nullptr);
  return out;
}

std::vector<std::pair<std::string, DiagramTriple>> commutative_diagram_triples(
    const MorphismPersistence& mp) {
  std::vector<std::pair<std::string, DiagramTriple>> out;
  for (const auto& a : mp.arrows)
    out.emplace_back(a.name, map_diagram_triple(a.map));
  return out;
}

const std::vector<std::string>& surfaced_arrows() {
  static const std::vector<std::string> names = {
      "delta.h", "sup.h", "inf.h", "lower.h", "src.iota", "tgt.iota"};
  return names;
}

InterleavingReport verify_strong_interleaving(const PersistenceModule& P,
                                              const PersistenceModule& Q,
                                              double eps, const ShiftFn& phi,
                                              const ShiftFn& psi,
                                              const std::vector<double>& samples) {
  std::vector<double> ts = samples;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (double t : ts) {
    for (double s : ts) {
      if (s < t) continue;
      Matrix a_lhs = psi(s) * Q.transition_at(t, s) * phi(t - eps);
      if (!(a_lhs == P.transition_at(t - eps, s + eps)))
        return {false, 'a', t, s};
      Matrix b_lhs = P.transition_at(t + eps, s + eps) * psi(t);
      if (!(b_lhs == psi(s) * Q.transition_at(t, s))) return {false, 'b', t, s};
      Matrix c_lhs = phi(s) * P.transition_at(t, s) * psi(t - eps);
      if (!(c_lhs == Q.transition_at(t - eps, s + eps)))
        return {false, 'c', t, s};
      Matrix d_lhs = Q.transition_at(t + eps, s + eps) * phi(t);
      if (!(d_lhs == phi(s) * P.transition_at(t, s))) return {false, 'd', t, s};
    }
  }
  return {};
}

InclusionInterleaving build_inclusion_interleaving(const FilteredHypergraph& f,
                                                   const FilteredHypergraph& g,
                                                   Variant variant, int n,
                                                   std::uint32_t p, double eps) {
  if (f.base() != g.base())
    throw std::invalid_argument("interleaving needs a common hypergraph");
  double dist = linf_distance(f, g);
  if (eps < 0) eps = dist;
  if (eps < dist)
    throw std::invalid_argument(
        "interleaving parameter below the function distance");

  auto ambient = std::make_shared<SimplicialChainBasis>(
      ambient_for(f.base(), p, n));
  auto scales_f = critical_values(f);
  auto scales_g = critical_values(g);
  auto fam_f = std::make_shared<FamilyBuild>(
      build_family(*ambient, f, scales_f, variant, n, false));
  auto fam_g = std::make_shared<FamilyBuild>(
      build_family(*ambient, g, scales_g, variant, n, false));

  InclusionInterleaving out;
  out.eps = eps;
  out.P = assemble_module(scales_f, fam_f->nodes, fam_f->hom, n, p);
  out.Q = assemble_module(scales_g, fam_g->nodes, fam_g->hom, n, p);

  auto make_shift = [n, p](std::shared_ptr<FamilyBuild> from,
                           PersistenceModule pm,
                           std::shared_ptr<FamilyBuild> to,
                           PersistenceModule qm, double shift_eps) -> ShiftFn {
    auto cache = std::make_shared<
        std::map<std::pair<std::size_t, std::size_t>, Matrix>>();
    return [=](double t) -> Matrix {
      std::size_t i = pm.index_at(t);
      std::size_t j = qm.index_at(t + shift_eps);
      auto key = std::make_pair(i, j);
      auto it = cache->find(key);
      if (it != cache->end()) return it->second;
      Matrix result(qm.dim_of_index(j), pm.dim_of_index(i), p);
      if (i > 0 && j > 0) {
        auto chain =
            node_chain_map(from->nodes[i - 1], to->nodes[j - 1], nullptr);
        result = induced_homology_map(chain[n], from->hom[i - 1],
                                      to->hom[j - 1]);
      }
      cache->emplace(key, result);
      return result;
    };
  };
  out.phi = make_shift(fam_f, out.P, fam_g, out.Q, eps);
  out.psi = make_shift(fam_g, out.Q, fam_f, out.P, eps);

  std::set<double> samples;
  std::vector<double> merged = scales_f;
  merged.insert(merged.end(), scales_g.begin(), scales_g.end());
  for (double t : merged) {
    samples.insert(t);
    samples.insert(t - eps);
    samples.insert(t + eps);
  }
  if (!merged.empty()) {
    double lo = *samples.begin();
    samples.insert(lo - 1 - eps);
    std::vector<double> base(samples.begin(), samples.end());
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
      samples.insert((base[i] + base[i + 1]) / 2);
  }
  out.samples.assign(samples.begin(), samples.end());
  return out;
}

}  // namespace hyperph
