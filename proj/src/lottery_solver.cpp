#include "stabsel/lottery_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "stabsel/game.hpp"
#include "stabsel/preferences.hpp"

namespace stabsel {

void FractionalVector::validate() const {
  if (values.size() != weights.size())
    throw std::invalid_argument(
        "fractional vector values and weights differ in length");
  if (!(cap >= 0.0) || !std::isfinite(cap))
    throw std::invalid_argument("fractional vector cap must be nonnegative");
  double dot = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0))
      throw std::invalid_argument("fractional value outside [0,1] at index " +
                                  std::to_string(i));
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
      throw std::invalid_argument("negative or non-finite weight at index " +
                                  std::to_string(i));
    dot += values[i] * weights[i];
  }
  if (!approx_le(dot, cap))
    throw std::invalid_argument("weighted marginal mass " +
                                std::to_string(dot) + " exceeds the cap " +
                                std::to_string(cap));
}

std::vector<double> dependent_round(const FractionalVector& p, Rng& rng) {
  p.validate();
  std::vector<double> x = p.values;

  // Zero-weight entries carry no budget and are rounded independently;
  // independence keeps E[prod(1-X_i)] <= prod(1-p_i) intact.
  std::vector<int> frac;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0 || x[i] == 1.0) continue;
    if (p.weights[i] == 0.0) {
      x[i] = rng.bernoulli(x[i]) ? 1.0 : 0.0;
    } else {
      frac.push_back(static_cast<int>(i));
    }
  }

  auto snap = [](double& v) {
    if (std::abs(v) <= 1e-12) v = 0.0;
    if (std::abs(v - 1.0) <= 1e-12) v = 1.0;
  };

  std::size_t guard = 0;
  while (frac.size() >= 2) {
    if (++guard > 2 * x.size() + 16)
      throw std::logic_error("pipage rounding failed to terminate");
    const int i = frac[0];
    const int j = frac[1];
    const double wi = p.weights[i], wj = p.weights[j];

    // Raising x_i by d lowers x_j by d*wi/wj, keeping wi*x_i + wj*x_j fixed.
    const double up = std::min(1.0 - x[i], x[j] * wj / wi);
    const double down = std::min(x[i], (1.0 - x[j]) * wj / wi);
    if (up + down <= 0.0)
      throw std::logic_error("pipage rounding met a degenerate pair");

    if (rng.uniform01() < down / (up + down)) {
      const bool i_binds = 1.0 - x[i] <= x[j] * wj / wi;  // up == 1 - x[i]
      x[i] += up;
      x[j] -= up * wi / wj;
      if (i_binds)
        x[i] = 1.0;
      else
        x[j] = 0.0;
    } else {
      const bool i_binds = x[i] <= (1.0 - x[j]) * wj / wi;  // down == x[i]
      x[i] -= down;
      x[j] += down * wi / wj;
      if (i_binds)
        x[i] = 0.0;
      else
        x[j] = 1.0;
    }
    snap(x[i]);
    snap(x[j]);

    // Drop entries that became integral; the binding one always did.
    frac.erase(std::remove_if(frac.begin(), frac.end(),
                              [&](int k) { return x[k] == 0.0 || x[k] == 1.0; }),
               frac.end());
  }
  return x;
}

std::vector<double> dependent_round(const FractionalVector& p,
                                    std::uint64_t seed) {
  Rng rng(seed);
  return dependent_round(p, rng);
}

Committee defender_response(const Instance& inst,
                            const WeightedCommittees& attacker_mix, double K,
                            Rng& rng) {
  if (!(K > 0.0))
    throw std::invalid_argument("defender budget must be positive");

  struct Item {
    const Committee* c;
    double alpha;
    double w;
  };
  std::vector<Item> items;
  double total_alpha = 0.0;
  for (const auto& [c, alpha] : attacker_mix) {
    if (alpha <= 0.0) continue;
    const double w = inst.weight(c);
    if (!approx_le(w, K / 2.0)) continue;  // heavy attacks lose on their own
    items.push_back({&c, alpha, w});
    total_alpha += alpha;
  }
  if (items.empty()) return Committee{};
  if (total_alpha <= 0.0)
    throw std::domain_error("attacker mix has no positive-probability entry");

  double beta = 0.0;
  for (const Item& it : items) beta += (it.alpha / total_alpha) * it.w;
  beta /= K;
  if (beta <= 0.0)
    throw std::domain_error(
        "surviving attacker mix has zero total weight; nothing to match");

  FractionalVector fv;
  fv.cap = K / 2.0;
  fv.values.reserve(items.size());
  fv.weights.reserve(items.size());
  for (const Item& it : items) {
    fv.values.push_back(std::min(1.0, (it.alpha / total_alpha) / (2.0 * beta)));
    fv.weights.push_back(it.w);
  }

  // Rounded-up mass fits in K/2 and at most one fractional entry survives;
  // including it too costs at most another K/2 (heavy attacks were dropped),
  // so the union stays within K. Inclusion probabilities only grow, which
  // can only help the defender under monotone preferences.
  const std::vector<double> x = dependent_round(fv, rng);
  Committee out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (x[i] > 0.0) out = out.united(*items[i].c);
  return out;
}

Committee extend_feasible(const Instance& inst, const Committee& c,
                          double budget) {
  Committee cur = c;
  for (int cand = 0; cand < inst.m(); ++cand) {
    if (cur.contains(cand)) continue;
    Committee next = cur.united(Committee::of({cand}));
    if (approx_le(inst.weight(next), budget)) cur = std::move(next);
  }
  return cur;
}

namespace {

struct MwuAttempt {
  Lottery lottery;
  double measured_c = 0.0;
};

}  // namespace

MwuResult mwu_lottery(const Instance& inst, const VoterSet& voters, double K,
                      const MwuOptions& opt) {
  if (voters.empty())
    throw std::invalid_argument("cannot solve for an empty voter set");
  if (!(opt.eps > 0.0))
    throw std::invalid_argument("eps must be positive");
  if (opt.L < 1) throw std::invalid_argument("attack size bound must be >= 1");
  if (!(K > 0.0)) throw std::invalid_argument("budget must be positive");

  const auto& model = inst.preference();
  const int nv = static_cast<int>(voters.size());
  const double target = 2.0 + opt.eps;
  const EnumerationBound verify_bound = UpToSize{opt.L};

  // Attack space: size <= L, weight in (0, K/2]. Heavier attacks cannot
  // reach ratio 2 even with every voter behind them.
  std::vector<Committee> attacks;
  std::vector<double> aw;
  for (Committee& c : enumerate_attackers(inst, UpToSize{opt.L})) {
    const double w = inst.weight(c);
    if (approx_le(w, K / 2.0)) {
      attacks.push_back(std::move(c));
      aw.push_back(w);
    }
  }
  const int A = static_cast<int>(attacks.size());
  if (A > 200'000 || static_cast<long long>(A) * nv > 40'000'000)
    throw std::invalid_argument(
        "attack space too large for the multiplicative-weights solver; "
        "lower the size bound");

  Rng rng(opt.seed);

  if (A == 0) {
    Lottery lot =
        Lottery::make(K, {{extend_feasible(inst, Committee{}, K), 1.0}});
    auto [blocker, ratio] =
        worst_lottery_blocker(inst, voters, K, lot, verify_bound);
    (void)blocker;
    if (ratio >= target - kTol)
      throw ConvergenceError("a heavy attack unexpectedly reached ratio " +
                                 std::to_string(ratio),
                             lot, ratio);
    return {std::move(lot), ratio, 0};
  }

  std::vector<std::vector<double>> att_score(A, std::vector<double>(nv));
  for (int a = 0; a < A; ++a)
    for (int i = 0; i < nv; ++i)
      att_score[a][i] = committee_score(model, voters[i], attacks[a]);

  const double eta = opt.eps / 8.0;
  int rounds = opt.max_rounds > 0
                   ? opt.max_rounds
                   : std::max(32, static_cast<int>(std::ceil(
                                      64.0 * std::log(std::max(A, 2)) /
                                      (opt.eps * opt.eps))));

  std::map<Committee, Committee> extension_cache;
  auto extend = [&](const Committee& c) -> const Committee& {
    auto it = extension_cache.find(c);
    if (it == extension_cache.end())
      it = extension_cache.emplace(c, extend_feasible(inst, c, K)).first;
    return it->second;
  };

  auto run_rounds = [&](int T) -> MwuAttempt {
    std::vector<double> logw(A, 0.0);
    std::vector<double> prob(A);
    WeightedCommittees mix(A);
    for (int a = 0; a < A; ++a) mix[a].first = attacks[a];
    std::vector<double> def_score(nv);
    std::map<Committee, int> counts;

    for (int t = 0; t < T; ++t) {
      // Softmax in log space; the drift over tens of thousands of rounds
      // would overflow plain products.
      const double mx = *std::max_element(logw.begin(), logw.end());
      double tot = 0.0;
      for (int a = 0; a < A; ++a) {
        prob[a] = std::exp(logw[a] - mx);
        tot += prob[a];
      }
      for (int a = 0; a < A; ++a) mix[a].second = prob[a] / tot;

      const Committee sd = defender_response(inst, mix, K, rng);
      for (int i = 0; i < nv; ++i)
        def_score[i] = committee_score(model, voters[i], sd);
      for (int a = 0; a < A; ++a) {
        int won = 0;
        for (int i = 0; i < nv; ++i)
          if (att_score[a][i] > def_score[i]) ++won;
        const double payoff = (won - 2.0 * aw[a] / K * nv) / nv;  // in [-1,1]
        logw[a] += eta * payoff;
      }
      ++counts[sd];
    }

    std::vector<std::pair<Committee, double>> entries;
    entries.reserve(counts.size());
    for (const auto& [c, cnt] : counts)
      entries.emplace_back(extend(c), static_cast<double>(cnt) / T);
    MwuAttempt attempt;
    attempt.lottery = Lottery::make(K, std::move(entries));
    attempt.measured_c =
        worst_lottery_blocker(inst, voters, K, attempt.lottery, verify_bound)
            .second;
    return attempt;
  };

  MwuAttempt best;
  best.measured_c = std::numeric_limits<double>::infinity();
  for (int attempt = 0;; ++attempt) {
    MwuAttempt cur = run_rounds(rounds);
    if (cur.measured_c < target - kTol)
      return {std::move(cur.lottery), cur.measured_c, rounds};
    if (cur.measured_c < best.measured_c) best = std::move(cur);
    if (attempt >= opt.retries)
      throw ConvergenceError(
          "multiplicative weights missed the stability target " +
              std::to_string(target) + "; best measured constant " +
              std::to_string(best.measured_c),
          best.lottery, best.measured_c);
    rounds *= 2;
  }
}

GameSolution exact_game(const Instance& inst, const VoterSet& voters, double K,
                        double c, const EnumerationBound& defender_bound,
                        const EnumerationBound& attacker_bound) {
  if (voters.empty())
    throw std::invalid_argument("cannot solve for an empty voter set");
  const std::vector<Committee> defenders =
      enumerate_feasible(inst, K, defender_bound);
  const std::vector<Committee> attackers =
      enumerate_attackers(inst, attacker_bound);
  if (attackers.empty())
    throw std::invalid_argument(
        "no positive-weight committee exists within the attacker bound; "
        "every committee is trivially stable");
  const int D = static_cast<int>(defenders.size());
  const int A = static_cast<int>(attackers.size());
  if (D > kMaxGameStrategies || A > kMaxGameStrategies)
    throw std::invalid_argument(
        "stability game exceeds the strategy-count guard of " +
        std::to_string(kMaxGameStrategies));

  const auto& model = inst.preference();
  const int nv = static_cast<int>(voters.size());
  std::vector<std::vector<double>> def_score(D, std::vector<double>(nv));
  for (int d = 0; d < D; ++d)
    for (int i = 0; i < nv; ++i)
      def_score[d][i] = committee_score(model, voters[i], defenders[d]);
  std::vector<std::vector<double>> att_score(A, std::vector<double>(nv));
  std::vector<double> att_penalty(A);
  for (int a = 0; a < A; ++a) {
    for (int i = 0; i < nv; ++i)
      att_score[a][i] = committee_score(model, voters[i], attackers[a]);
    att_penalty[a] = c * inst.weight(attackers[a]) / K * nv;
  }

  std::vector<std::vector<double>> payoff(D, std::vector<double>(A));
  for (int d = 0; d < D; ++d)
    for (int a = 0; a < A; ++a) {
      int won = 0;
      for (int i = 0; i < nv; ++i)
        if (att_score[a][i] > def_score[d][i]) ++won;
      payoff[d][a] = won - att_penalty[a];
    }

  const MatrixGameResult res = solve_matrix_game(payoff, 1e-7);

  GameSolution sol;
  sol.value = res.value;
  sol.iterations = res.iterations;
  sol.certified = res.certified;
  for (int a = 0; a < A; ++a)
    if (res.col_mix[a] > 1e-15)
      sol.attacker_mix.emplace_back(attackers[a], res.col_mix[a]);
  std::vector<std::pair<Committee, double>> support;
  for (int d = 0; d < D; ++d)
    if (res.row_mix[d] > 1e-15)
      support.emplace_back(defenders[d], res.row_mix[d]);
  sol.defender_lottery = Lottery::make(K, std::move(support));
  return sol;
}

GameSolution exact_game(const Instance& inst, double c,
                        const EnumerationBound& attacker_bound) {
  return exact_game(inst, all_voters(inst), inst.limit(), c, AllCommittees{},
                    attacker_bound);
}

}  // namespace stabsel
