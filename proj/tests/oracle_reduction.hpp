#pragma once

// Independent persistence oracle: standard simplexwise column reduction of
// the boundary matrix over F_p. Shares no code with the library's rank
// formula; used to cross-check diagrams on simplicial filtrations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "hyperph/filtration.hpp"
#include "hyperph/persistence.hpp"

namespace oracle {

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// Diagram of degree-n persistent homology of a face-monotone filtration of a
// simplicial complex, by the classic reduction: order simplices by (weight,
// cardinality), reduce each boundary column against earlier columns with the
// same lowest row, pair low(j) with j.
inline hyperph::PersistenceDiagram reduction_diagram(
    const hyperph::FilteredHypergraph& f, int degree, std::uint32_t p) {
  const auto& edges = f.base().edges();
  std::size_t n = edges.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     double wa = f.weights()[a], wb = f.weights()[b];
                     if (wa != wb) return wa < wb;
                     if (edges[a].size() != edges[b].size())
                       return edges[a].size() < edges[b].size();
                     return edges[a] < edges[b];
                   });
  std::map<hyperph::Hyperedge, std::size_t> pos;
  for (std::size_t j = 0; j < n; ++j) pos[edges[order[j]]] = j;

  // Dense columns over F_p in filtration order.
  std::vector<std::vector<std::uint32_t>> col(n,
                                              std::vector<std::uint32_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& e = edges[order[j]];
    if (e.size() < 2) continue;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      hyperph::Hyperedge face;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) face.push_back(e[i]);
      std::uint32_t sign = (skip % 2 == 0) ? 1 : p - 1;
      col[j][pos.at(face)] = sign % p;
    }
  }

  auto low = [&](std::size_t j) -> long {
    for (long i = static_cast<long>(n) - 1; i >= 0; --i)
      if (col[j][static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  };

  std::vector<long> low_owner(n, -1);  // pivot row -> column owning it
  std::vector<long> killer(n, -1);     // birth column -> killing column
  for (std::size_t j = 0; j < n; ++j) {
    long l = low(j);
    while (l >= 0 && low_owner[static_cast<std::size_t>(l)] >= 0) {
      std::size_t k =
          static_cast<std::size_t>(low_owner[static_cast<std::size_t>(l)]);
      std::uint32_t factor =
          static_cast<std::uint32_t>(
              static_cast<std::uint64_t>(col[j][static_cast<std::size_t>(l)]) *
              inv_mod(col[k][static_cast<std::size_t>(l)], p) % p);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sub =
            static_cast<std::uint64_t>(factor) * col[k][i] % p;
        col[j][i] = static_cast<std::uint32_t>(
            (col[j][i] + p - static_cast<std::uint32_t>(sub)) % p);
      }
      l = low(j);
    }
    if (l >= 0) {
      low_owner[static_cast<std::size_t>(l)] = static_cast<long>(j);
      killer[static_cast<std::size_t>(l)] = static_cast<long>(j);
    }
  }

  hyperph::PersistenceDiagram d;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    if (low(j) >= 0) continue;  // negative column: creates nothing
    const auto& e = edges[order[j]];
    if (static_cast<int>(e.size()) != degree + 1) continue;
    double birth = f.weights()[order[j]];
    if (killer[j] >= 0) {
      double death = f.weights()[order[static_cast<std::size_t>(killer[j])]];
      if (death > birth) d.points.push_back({birth, death, 1});
    } else {
      d.points.push_back({birth, inf, 1});
    }
  }
  d.canonicalize();
  return d;
}

}  // namespace oracle
