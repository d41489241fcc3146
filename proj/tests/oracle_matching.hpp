#pragma once

// Brute-force diagram matching oracle: enumerates every bijection of the
// diagonal-augmented point sets (and every pairing of essential points).
// Only usable for small diagrams; validates the library's matchers exactly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "hyperph/persistence.hpp"

namespace oracle {

// p == infinity selects the max-cost (bottleneck) objective.
inline double brute_distance(const hyperph::PersistenceDiagram& a,
                             const hyperph::PersistenceDiagram& b, double p) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> pf, qf;
  std::vector<double> pe, qe;
  for (const auto& pt : a.points)
    for (std::size_t k = 0; k < pt.multiplicity; ++k)
      (std::isinf(pt.death) ? pe.push_back(pt.birth)
                            : (void)pf.emplace_back(pt.birth, pt.death));
  for (const auto& pt : b.points)
    for (std::size_t k = 0; k < pt.multiplicity; ++k)
      (std::isinf(pt.death) ? qe.push_back(pt.birth)
                            : (void)qf.emplace_back(pt.birth, pt.death));
  if (pe.size() != qe.size()) return inf;

  auto powp = [&](double c) {
    if (p == 1) return c;
    if (p == 2) return c * c;
    return std::pow(c, p);
  };
  auto combine = [&](double acc, double c) {
    return std::isinf(p) ? std::max(acc, c) : acc + powp(c);
  };

  // Essential part: minimize over all pairings of births.
  double ess_best = pe.empty() ? 0 : inf;
  if (!pe.empty()) {
    std::vector<std::size_t> perm(pe.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double acc = 0;
      for (std::size_t i = 0; i < pe.size(); ++i)
        acc = combine(acc, std::abs(pe[i] - qe[perm[i]]));
      ess_best = std::min(ess_best, acc);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Finite part: square assignment over points plus diagonal slots.
  std::size_t n = pf.size(), m = qf.size(), N = n + m;
  double fin_best = 0;
  if (N > 0) {
    auto cost = [&](std::size_t i, std::size_t j) {
      if (i < n && j < m)
        return std::max(std::abs(pf[i].first - qf[j].first),
                        std::abs(pf[i].second - qf[j].second));
      if (i < n) return (pf[i].second - pf[i].first) / 2;
      if (j < m) return (qf[j].second - qf[j].first) / 2;
      return 0.0;
    };
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    fin_best = inf;
    do {
      double acc = 0;
      for (std::size_t i = 0; i < N; ++i) acc = combine(acc, cost(i, perm[i]));
      fin_best = std::min(fin_best, acc);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  if (std::isinf(p)) return std::max(ess_best, fin_best);
  double total = ess_best + fin_best;
  if (p == 1) return total;
  if (p == 2) return std::sqrt(total);
  return std::pow(total, 1.0 / p);
}

}  // namespace oracle
