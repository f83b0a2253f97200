#include "stabsel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stabsel/rng.hpp"

namespace stabsel {

Instance gen_cyclic(int m, double eps) {
  if (m < 2) throw std::invalid_argument("cyclic family needs m >= 2");
  if (!(eps > 0.0 && eps < 2.0))
    throw std::invalid_argument("cyclic family needs eps in (0, 2)");

  BudgetModel model;
  model.utilities.assign(m, std::vector<double>(m));
  for (int v = 0; v < m; ++v)
    for (int c = 0; c < m; ++c)
      model.utilities[v][c] = m - ((c - v) % m + m) % m;

  AdditiveWeights weights;
  weights.s.assign(m, 1.0);
  return Instance(m, m, 2.0 - eps / 2.0, std::move(weights), std::move(model));
}

Instance gen_ranking_grid(int r, int l) {
  if (r < 2) throw std::invalid_argument("grid family needs r >= 2");
  if (l < 1) throw std::invalid_argument("grid family needs ell >= 1");

  const int m = r * l;
  RankingModel model;
  model.orders.assign(m, std::vector<int>(m));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < l; ++j) {
      std::vector<int>& order = model.orders[i * l + j];
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const std::pair<int, int> ka{((a / l - i) % r + r) % r,
                                     ((a % l - j) % l + l) % l};
        const std::pair<int, int> kb{((b / l - i) % r + r) % r,
                                     ((b % l - j) % l + l) % l};
        return ka < kb;
      });
    }
  }

  AdditiveWeights weights;
  weights.s.assign(m, 1.0);
  return Instance(m, m, static_cast<double>(r - 1), std::move(weights),
                  std::move(model));
}

Instance gen_random(ModelKind kind, int m, int n, double K,
                    const RandomParams& params, std::uint64_t seed) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("need at least one candidate and one voter");
  if (!(K > 0.0)) throw std::invalid_argument("budget must be positive");
  if (!(params.density >= 0.0 && params.density <= 1.0))
    throw std::invalid_argument("approval density must lie in [0,1]");

  Rng rng(seed);
  AdditiveWeights unit;
  unit.s.assign(m, 1.0);

  switch (kind) {
    case ModelKind::Approval: {
      ApprovalModel model;
      model.sets.resize(n);
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c)
          if (rng.bernoulli(params.density)) model.sets[v].push_back(c);
      return Instance(m, n, K, std::move(unit), std::move(model));
    }
    case ModelKind::Ranking: {
      RankingModel model;
      model.orders.assign(n, std::vector<int>(m));
      for (int v = 0; v < n; ++v) {
        std::iota(model.orders[v].begin(), model.orders[v].end(), 0);
        for (int i = m - 1; i > 0; --i)
          std::swap(model.orders[v][i],
                    model.orders[v][rng.uniform_int(0, i)]);
      }
      return Instance(m, n, K, std::move(unit), std::move(model));
    }
    case ModelKind::Budget: {
      AdditiveWeights weights;
      weights.s.resize(m);
      for (int c = 0; c < m; ++c) weights.s[c] = rng.uniform(0.5, 1.5);
      BudgetModel model;
      model.utilities.assign(n, std::vector<double>(m));
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c)
          model.utilities[v][c] = rng.uniform(0.0, 1.0);
      return Instance(m, n, K, std::move(weights), std::move(model));
    }
    case ModelKind::Facility: {
      std::vector<std::pair<double, double>> cand(m), voter(n);
      for (int c = 0; c < m; ++c)
        cand[c] = {rng.uniform01(), rng.uniform01()};
      for (int v = 0; v < n; ++v)
        voter[v] = {rng.uniform01(), rng.uniform01()};
      FacilityModel model;
      model.distances.assign(n, std::vector<double>(m));
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c)
          model.distances[v][c] = std::hypot(voter[v].first - cand[c].first,
                                             voter[v].second - cand[c].second);
      return Instance(m, n, K, std::move(unit), std::move(model));
    }
  }
  throw std::invalid_argument("unknown model kind");
}

}  // namespace stabsel
