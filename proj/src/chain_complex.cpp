#include "hyperph/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperph {

Matrix ChainComplex::boundary_at(int n) const {
  if (n >= 0 && n <= top()) return boundary[n];
  return Matrix(dim(n - 1), dim(n), p);
}

void ChainComplex::validate() const {
  if (boundary.size() != dims.size())
    throw std::logic_error("chain complex: boundary count mismatch");
  for (int n = 0; n <= top(); ++n) {
    std::size_t prev = n == 0 ? 0 : dims[n - 1];
    if (boundary[n].rows() != prev || boundary[n].cols() != dims[n])
      throw std::logic_error("chain complex: boundary shape mismatch");
    if (boundary[n].modulus() != p)
      throw std::logic_error("chain complex: mixed moduli");
  }
  for (int n = 1; n <= top(); ++n)
    if (!(boundary[n - 1] * boundary[n]).is_zero())
      throw std::logic_error("chain complex: boundary of boundary is nonzero");
}

long SimplicialChainBasis::index_of(const Hyperedge& s) const {
  int n = static_cast<int>(s.size()) - 1;
  if (n < 0 || n >= static_cast<int>(simplices.size())) return -1;
  const auto& list = simplices[n];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return it - list.begin();
}

SimplicialChainBasis simplicial_chain_basis(const Hypergraph& k,
                                            std::uint32_t p, int top_degree) {
  if (!is_simplicial(k))
    throw std::invalid_argument("chain basis requires a simplicial complex");
  SimplicialChainBasis b;
  int top = std::max(top_degree, 0);
  b.simplices.resize(top + 1);
  for (const auto& e : k.edges()) {
    int n = static_cast<int>(e.size()) - 1;
    if (n <= top) b.simplices[n].push_back(e);
  }
  // Hypergraph edges are sorted; per-degree sublists inherit the order.
  b.complex.p = p;
  b.complex.dims.resize(top + 1);
  for (int n = 0; n <= top; ++n) b.complex.dims[n] = b.simplices[n].size();
  Fp f(p);
  for (int n = 0; n <= top; ++n) {
    std::size_t prev = n == 0 ? 0 : b.complex.dims[n - 1];
    Matrix d(prev, b.complex.dims[n], p);
    if (n > 0) {
      for (std::size_t j = 0; j < b.simplices[n].size(); ++j) {
        const Hyperedge& s = b.simplices[n][j];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          Hyperedge face;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) face.push_back(s[i]);
          long row = b.index_of(face);
          if (row < 0) throw std::logic_error("face missing from closure");
          d(static_cast<std::size_t>(row), j) = (skip % 2 == 0) ? 1 : f.neg(1);
        }
      }
    }
    b.complex.boundary.push_back(std::move(d));
  }
  b.complex.validate();
  return b;
}

ChainComplex simplicial_chain_complex(const Hypergraph& k, std::uint32_t p) {
  return simplicial_chain_basis(k, p, std::max(k.max_degree(), 0)).complex;
}

ChainNode subspace_node(const SimplicialChainBasis& ambient,
                        std::vector<Matrix> carriers) {
  std::uint32_t p = ambient.complex.p;
  int top = static_cast<int>(carriers.size()) - 1;
  ChainNode node;
  node.cx.p = p;
  node.carrier = std::move(carriers);
  for (int n = 0; n <= top; ++n) {
    if (node.carrier[n].rows() != ambient.dim(n))
      throw std::invalid_argument("carrier ambient dimension mismatch");
    node.cx.dims.push_back(node.carrier[n].cols());
  }
  for (int n = 0; n <= top; ++n) {
    std::size_t prev = n == 0 ? 0 : node.cx.dims[n - 1];
    Matrix image = ambient.complex.boundary_at(n) * node.carrier[n];
    Matrix d(prev, node.cx.dims[n], p);
    if (n > 0) {
      try {
        d = solve(node.carrier[n - 1], image);
      } catch (const std::domain_error&) {
        throw std::invalid_argument(
            "subspace is not closed under the boundary");
      }
    } else if (!image.is_zero()) {
      throw std::invalid_argument("subspace is not closed under the boundary");
    }
    node.cx.boundary.push_back(std::move(d));
    node.proj.push_back(Matrix::identity(node.cx.dims[n], p));
    node.sect.push_back(Matrix::identity(node.cx.dims[n], p));
  }
  node.cx.validate();
  return node;
}

// Span of the cardinality-(n+1) edges of `sub` as ambient coordinate columns.
static Matrix edge_span(const SimplicialChainBasis& ambient,
                        const Hypergraph& sub, int n) {
  std::vector<long> idx;
  std::size_t card = static_cast<std::size_t>(n) + 1;
  for (const auto& e : sub.edges()) {
    if (e.size() != card) continue;
    long i = ambient.index_of(e);
    if (i < 0)
      throw std::invalid_argument("hyperedge missing from the ambient complex");
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  Matrix m(ambient.dim(n), idx.size(), ambient.complex.p);
  for (std::size_t j = 0; j < idx.size(); ++j)
    m(static_cast<std::size_t>(idx[j]), j) = 1;
  return m;
}

ChainNode coordinate_node(const SimplicialChainBasis& ambient,
                          const Hypergraph& sub, int top_degree) {
  std::vector<Matrix> carriers;
  for (int n = 0; n <= top_degree; ++n)
    carriers.push_back(edge_span(ambient, sub, n));
  return subspace_node(ambient, std::move(carriers));
}

ChainNode quotient_node(const ChainNode& parent,
                        const std::vector<Subspace>& w) {
  std::uint32_t p = parent.cx.p;
  int top = parent.cx.top();
  if (static_cast<int>(w.size()) != top + 1)
    throw std::invalid_argument("quotient data degree mismatch");
  ChainNode node;
  node.cx.p = p;
  node.carrier = parent.carrier;
  std::vector<QuotientMap> q;
  for (int n = 0; n <= top; ++n) {
    q.push_back(quotient_map(Subspace::full(parent.cx.dims[n], p), w[n]));
    node.cx.dims.push_back(q[n].dim);
  }
  for (int n = 0; n <= top; ++n) {
    std::size_t prev = n == 0 ? 0 : node.cx.dims[n - 1];
    Matrix d(prev, node.cx.dims[n], p);
    if (n > 0) d = q[n - 1].projection * parent.cx.boundary[n] * q[n].section;
    node.cx.boundary.push_back(std::move(d));
    node.proj.push_back(q[n].projection * parent.proj[n]);
    node.sect.push_back(parent.sect[n] * q[n].section);
  }
  node.cx.validate();
  return node;
}

ChainNode infimum_complex(const SimplicialChainBasis& ambient,
                          const Hypergraph& h, int top_degree) {
  std::uint32_t p = ambient.complex.p;
  std::vector<Matrix> carriers;
  for (int n = 0; n <= top_degree; ++n) {
    Matrix r = edge_span(ambient, h, n);
    Subspace r_prev =
        n == 0 ? Subspace::zero(0, p)
               : Subspace::span(edge_span(ambient, h, n - 1));
    Matrix restricted = ambient.complex.boundary_at(n) * r;
    Subspace inside = preimage_subspace(restricted, r_prev);
    carriers.push_back(Subspace::span(r * inside.basis).basis);
  }
  return subspace_node(ambient, std::move(carriers));
}

ChainNode supremum_complex(const SimplicialChainBasis& ambient,
                           const Hypergraph& h, int top_degree) {
  std::vector<Matrix> carriers;
  for (int n = 0; n <= top_degree; ++n) {
    Subspace r = Subspace::span(edge_span(ambient, h, n));
    Matrix above = edge_span(ambient, h, n + 1);
    Subspace bd = Subspace::span(ambient.complex.boundary_at(n + 1) * above);
    carriers.push_back(subspace_sum(r, bd).basis);
  }
  return subspace_node(ambient, std::move(carriers));
}

Matrix HomologySpace::reduce(const Matrix& chains) const {
  Matrix coords = solve(cycles, chains);  // throws when not a cycle
  return projection * coords;
}

HomologySpace homology(const ChainComplex& c, int n) {
  Subspace zs = Subspace::span(kernel_basis(c.boundary_at(n)));
  Subspace bs = Subspace::span(image_basis(c.boundary_at(n + 1)));
  QuotientMap q = quotient_map(zs, bs);
  return {q.dim, zs.basis * q.section, zs.basis, q.projection};
}

HomologySpace embedded_homology(const Hypergraph& h, int n, std::uint32_t p) {
  SimplicialChainBasis ambient =
      simplicial_chain_basis(associated_complex(h), p, n + 2);
  ChainNode inf = infimum_complex(ambient, h, n + 1);
  ChainNode sup = supremum_complex(ambient, h, n + 1);
  HomologySpace hi = homology(inf.cx, n);
  HomologySpace hs = homology(sup.cx, n);
  if (hi.dim != hs.dim)
    throw std::logic_error(
        "infimum/supremum homology dimensions disagree (bug)");
  return hi;
}

}  // namespace hyperph
