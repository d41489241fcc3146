#include "hyperph/chain_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hyperph {

Matrix ChainMap::map_at(int n) const {
  if (n >= 0 && n < static_cast<int>(maps.size())) return maps[n];
  return Matrix(target.dim(n), source.dim(n), source.p);
}

void ChainMap::validate() const {
  int top = std::max(source.top(), target.top());
  if (static_cast<int>(maps.size()) != top + 1)
    throw std::logic_error("chain map: missing degrees");
  for (int n = 0; n <= top; ++n) {
    if (maps[n].rows() != target.dim(n) || maps[n].cols() != source.dim(n))
      throw std::logic_error("chain map: shape mismatch");
    if (!(target.boundary_at(n) * maps[n] - map_at(n - 1) * source.boundary_at(n))
             .is_zero())
      throw std::logic_error("chain map does not commute with boundaries");
  }
}

// Sorts vertices, returning the sign of the permutation, or 0 on collapse.
static int normalize_simplex(Hyperedge& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<Matrix> ambient_morphism_map(const SimplicialChainBasis& source,
                                         const SimplicialChainBasis& target,
                                         const std::vector<int>& vertex_map) {
  std::uint32_t p = source.complex.p;
  Fp f(p);
  int top = source.complex.top();
  std::vector<Matrix> maps;
  for (int n = 0; n <= top; ++n) {
    Matrix m(target.dim(n), source.dim(n), p);
    for (std::size_t j = 0; j < source.dim(n); ++j) {
      Hyperedge img;
      for (int v : source.simplices[n][j]) img.push_back(vertex_map[v]);
      int sign = normalize_simplex(img);
      if (sign == 0) continue;  // collapsed simplices map to zero
      long row = target.index_of(img);
      if (row < 0)
        throw std::invalid_argument(
            "morphism image simplex missing from the target ambient");
      m(static_cast<std::size_t>(row), j) = sign > 0 ? 1 : f.neg(1);
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

std::vector<Matrix> node_chain_map(const ChainNode& a, const ChainNode& b,
                                   const std::vector<Matrix>* ambient) {
  int top = std::max(a.cx.top(), b.cx.top());
  std::vector<Matrix> maps;
  for (int n = 0; n <= top; ++n) {
    if (n > a.cx.top() || n > b.cx.top()) {
      maps.push_back(Matrix(b.cx.dim(n), a.cx.dim(n), a.cx.p));
      continue;
    }
    Matrix moved =
        ambient ? (*ambient)[n] * a.carrier[n] : Matrix(a.carrier[n]);
    Matrix in_b(b.carrier[n].cols(), moved.cols(), a.cx.p);
    try {
      in_b = solve(b.carrier[n], moved);
    } catch (const std::domain_error&) {
      throw std::invalid_argument(
          "chain map does not land in the target subspace");
    }
    maps.push_back(b.proj[n] * in_b * a.sect[n]);
  }
  return maps;
}

ChainMap node_map_as_chain_map(const ChainNode& a, const ChainNode& b,
                               const std::vector<Matrix>* ambient) {
  ChainMap f{a.cx, b.cx, node_chain_map(a, b, ambient)};
  f.validate();
  return f;
}

MorphismChainMaps morphism_chain_maps(const HypergraphMorphism& m,
                                      std::uint32_t p) {
  Hypergraph src = m.domain();
  Hypergraph tgt = m.codomain();
  int top = std::max({src.max_degree(), tgt.max_degree(), 0});
  MorphismChainMaps out;
  out.source_ambient =
      simplicial_chain_basis(associated_complex(src), p, top + 1);
  out.target_ambient =
      simplicial_chain_basis(associated_complex(tgt), p, top + 1);
  std::vector<Matrix> amb = ambient_morphism_map(
      out.source_ambient, out.target_ambient, m.vertex_map());

  out.src_delta = coordinate_node(out.source_ambient, associated_complex(src), top);
  out.src_lower = coordinate_node(out.source_ambient, lower_associated_complex(src), top);
  out.src_inf = infimum_complex(out.source_ambient, src, top);
  out.src_sup = supremum_complex(out.source_ambient, src, top);
  out.tgt_delta = coordinate_node(out.target_ambient, associated_complex(tgt), top);
  out.tgt_lower = coordinate_node(out.target_ambient, lower_associated_complex(tgt), top);
  out.tgt_inf = infimum_complex(out.target_ambient, tgt, top);
  out.tgt_sup = supremum_complex(out.target_ambient, tgt, top);

  out.delta_map = node_map_as_chain_map(out.src_delta, out.tgt_delta, &amb);
  out.sup_map = node_map_as_chain_map(out.src_sup, out.tgt_sup, &amb);
  out.inf_map = node_map_as_chain_map(out.src_inf, out.tgt_inf, &amb);
  out.lower_map = node_map_as_chain_map(out.src_lower, out.tgt_lower, &amb);

  out.src_lower_incl = node_map_as_chain_map(out.src_lower, out.src_inf, nullptr);
  out.src_iota = node_map_as_chain_map(out.src_inf, out.src_sup, nullptr);
  out.src_sup_incl = node_map_as_chain_map(out.src_sup, out.src_delta, nullptr);
  out.tgt_lower_incl = node_map_as_chain_map(out.tgt_lower, out.tgt_inf, nullptr);
  out.tgt_iota = node_map_as_chain_map(out.tgt_inf, out.tgt_sup, nullptr);
  out.tgt_sup_incl = node_map_as_chain_map(out.tgt_sup, out.tgt_delta, nullptr);

  // The inclusion ladder must commute with the horizontal maps.
  auto check_square = [](const ChainMap& left, const ChainMap& bottom,
                         const ChainMap& top_map, const ChainMap& right) {
    for (std::size_t n = 0; n < left.maps.size(); ++n)
      if (!(right.maps[n] * top_map.maps[n] - bottom.maps[n] * left.maps[n])
               .is_zero())
        throw std::logic_error("morphism inclusion square does not commute");
  };
  check_square(out.src_lower_incl, out.inf_map, out.lower_map, out.tgt_lower_incl);
  check_square(out.src_iota, out.sup_map, out.inf_map, out.tgt_iota);
  check_square(out.src_sup_incl, out.delta_map, out.sup_map, out.tgt_sup_incl);
  return out;
}

ChainComplex kernel_complex(const ChainMap& f) {
  f.validate();
  std::uint32_t p = f.source.p;
  int top = f.source.top();
  ChainComplex k;
  k.p = p;
  std::vector<Matrix> bases;
  for (int n = 0; n <= top; ++n) {
    bases.push_back(Subspace::span(kernel_basis(f.map_at(n))).basis);
    k.dims.push_back(bases[n].cols());
  }
  for (int n = 0; n <= top; ++n) {
    std::size_t prev = n == 0 ? 0 : k.dims[n - 1];
    Matrix d(prev, k.dims[n], p);
    if (n > 0) d = solve(bases[n - 1], f.source.boundary[n] * bases[n]);
    k.boundary.push_back(std::move(d));
  }
  k.validate();
  return k;
}

ChainComplex cokernel_complex(const ChainMap& f) {
  f.validate();
  std::uint32_t p = f.target.p;
  int top = f.target.top();
  ChainComplex c;
  c.p = p;
  std::vector<QuotientMap> q;
  for (int n = 0; n <= top; ++n) {
    Subspace image = Subspace::span(image_basis(f.map_at(n)));
    q.push_back(quotient_map(Subspace::full(f.target.dim(n), p), image));
    c.dims.push_back(q[n].dim);
  }
  for (int n = 0; n <= top; ++n) {
    std::size_t prev = n == 0 ? 0 : c.dims[n - 1];
    Matrix d(prev, c.dims[n], p);
    if (n > 0) d = q[n - 1].projection * f.target.boundary[n] * q[n].section;
    c.boundary.push_back(std::move(d));
  }
  c.validate();
  return c;
}

Matrix induced_homology_map(const Matrix& f_n, const HomologySpace& hs,
                            const HomologySpace& ht) {
  return ht.reduce(f_n * hs.representatives);
}

Matrix induced_homology_map(const ChainMap& f, int n) {
  return induced_homology_map(f.map_at(n), homology(f.source, n),
                              homology(f.target, n));
}

}  // namespace hyperph
