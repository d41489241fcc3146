#include "hyperph/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace hyperph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SplitDiagram {
  std::vector<std::pair<double, double>> finite;  // expanded by multiplicity
  std::vector<double> essential;                  // births of points dying at +inf
};

SplitDiagram split(const PersistenceDiagram& d) {
  SplitDiagram s;
  for (const auto& pt : d.points) {
    for (std::size_t k = 0; k < pt.multiplicity; ++k) {
      if (std::isinf(pt.death))
        s.essential.push_back(pt.birth);
      else
        s.finite.emplace_back(pt.birth, pt.death);
    }
  }
  std::sort(s.essential.begin(), s.essential.end());
  return s;
}

double linf_cost(const std::pair<double, double>& a,
                 const std::pair<double, double>& b) {
  return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

double diagonal_cost(const std::pair<double, double>& a) {
  return (a.second - a.first) / 2;
}

bool try_kuhn(std::size_t v, const std::vector<std::vector<std::size_t>>& adj,
              std::vector<char>& used, std::vector<long>& match_r) {
  for (std::size_t to : adj[v]) {
    if (used[to]) continue;
    used[to] = 1;
    if (match_r[to] < 0 ||
        try_kuhn(static_cast<std::size_t>(match_r[to]), adj, used, match_r)) {
      match_r[to] = static_cast<long>(v);
      return true;
    }
  }
  return false;
}

// Perfect matching in the augmented bipartite graph at threshold c. Left side
// is P plus one diagonal slot per point of Q; right side is Q plus one slot
// per point of P. Diagonal slots pair with their own projection or with each
// other for free.
bool feasible(const std::vector<std::pair<double, double>>& pf,
              const std::vector<std::pair<double, double>>& qf, double c) {
  std::size_t n = pf.size(), m = qf.size();
  std::vector<std::vector<std::size_t>> adj(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (linf_cost(pf[i], qf[j]) <= c) adj[i].push_back(j);
    if (diagonal_cost(pf[i]) <= c) adj[i].push_back(m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (diagonal_cost(qf[j]) <= c) adj[n + j].push_back(j);
    for (std::size_t i = 0; i < n; ++i) adj[n + j].push_back(m + i);
  }
  std::vector<long> match_r(m + n, -1);
  std::size_t matched = 0;
  for (std::size_t v = 0; v < n + m; ++v) {
    std::vector<char> used(m + n, 0);
    if (try_kuhn(v, adj, used, match_r)) ++matched;
  }
  return matched == n + m;
}

// Classical O(n^3) assignment via potentials; costs must be finite.
double hungarian(const std::vector<std::vector<double>>& cost) {
  std::size_t n = cost.size();
  if (n == 0) return 0.0;
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
  return total;
}

double pow_cost(double x, double p) {
  if (p == 1) return x;
  if (p == 2) return x * x;
  return std::pow(x, p);
}

}  // namespace

double bottleneck_infinity(const PersistenceDiagram& a,
                           const PersistenceDiagram& b) {
  SplitDiagram pa = split(a), qb = split(b);
  if (pa.essential.size() != qb.essential.size()) return kInf;
  double best = 0;
  for (std::size_t i = 0; i < pa.essential.size(); ++i)
    best = std::max(best, std::abs(pa.essential[i] - qb.essential[i]));
  const auto& pf = pa.finite;
  const auto& qf = qb.finite;
  if (pf.empty() && qf.empty()) return best;

  std::set<double> candidates{0.0};
  for (const auto& p : pf) candidates.insert(diagonal_cost(p));
  for (const auto& q : qf) candidates.insert(diagonal_cost(q));
  for (const auto& p : pf)
    for (const auto& q : qf) candidates.insert(linf_cost(p, q));
  std::vector<double> cs(candidates.begin(), candidates.end());
  std::size_t lo = 0, hi = cs.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(pf, qf, cs[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  if (!feasible(pf, qf, cs[lo]))
    throw std::logic_error("bottleneck search found no feasible matching");
  return std::max(best, cs[lo]);
}

double bottleneck_p(const PersistenceDiagram& a, const PersistenceDiagram& b,
                    double p) {
  if (!(p >= 1) || std::isinf(p))
    throw std::invalid_argument("matching exponent must be finite and >= 1");
  SplitDiagram pa = split(a), qb = split(b);
  if (pa.essential.size() != qb.essential.size()) return kInf;
  double total = 0;
  for (std::size_t i = 0; i < pa.essential.size(); ++i)
    total += pow_cost(std::abs(pa.essential[i] - qb.essential[i]), p);
  const auto& pf = pa.finite;
  const auto& qf = qb.finite;
  std::size_t n = pf.size(), m = qf.size();
  if (n + m > 0) {
    std::vector<std::vector<double>> cost(n + m,
                                          std::vector<double>(n + m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        cost[i][j] = pow_cost(linf_cost(pf[i], qf[j]), p);
      for (std::size_t j = m; j < n + m; ++j)
        cost[i][j] = pow_cost(diagonal_cost(pf[i]), p);
    }
    for (std::size_t i = n; i < n + m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        cost[i][j] = pow_cost(diagonal_cost(qf[j]), p);
    total += hungarian(cost);
  }
  if (p == 1) return total;
  if (p == 2) return std::sqrt(total);
  return std::pow(total, 1.0 / p);
}

double diagram_distance(const PersistenceDiagram& a,
                        const PersistenceDiagram& b, double p) {
  if (std::isinf(p)) return bottleneck_infinity(a, b);
  return bottleneck_p(a, b, p);
}

double hypergraph_distance(const FilteredHypergraph& f,
                           const FilteredHypergraph& g, int n, double p,
                           std::uint32_t field) {
  if (f.base() != g.base())
    throw std::invalid_argument("hypergraph distance needs a common hypergraph");
  double best = 0;
  for (Variant v :
       {Variant::embedded, Variant::delta_upper, Variant::delta_lower}) {
    double d = diagram_distance(variant_diagram(f, v, n, field),
                                variant_diagram(g, v, n, field), p);
    best = std::max(best, d);
  }
  return best;
}

double map_distance(const DiagramTriple& a, const DiagramTriple& b) {
  return std::max({bottleneck_infinity(a.ker, b.ker),
                   bottleneck_infinity(a.im, b.im),
                   bottleneck_infinity(a.coker, b.coker)});
}

double map_distance_p(const DiagramTriple& a, const DiagramTriple& b,
                      double p) {
  if (std::isinf(p)) return map_distance(a, b);
  return std::max({bottleneck_p(a.ker, b.ker, p), bottleneck_p(a.im, b.im, p),
                   bottleneck_p(a.coker, b.coker, p)});
}

}  // namespace hyperph
