#include "stabsel/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "stabsel/committee.hpp"
#include "stabsel/enumerate.hpp"

namespace stabsel {

namespace {

/// Dense tableau simplex (Bland's rule) for the standard game transform:
/// shift payoffs to be >= 1, then  max 1'u  s.t.  G''u <= 1, u >= 0.
/// The minimizer's mix is u / sum(u); the maximizer's comes from the slack
/// reduced costs, which carry the dual solution.
struct RestrictedEquilibrium {
  double value = 0.0;
  std::vector<double> row_mix;  // over the restricted rows
  std::vector<double> col_mix;  // over the restricted columns
  int pivots = 0;
};

std::vector<double> normalized(std::vector<double> v) {
  double total = 0.0;
  for (double x : v) total += x;
  if (total <= 0.0)
    throw std::runtime_error("degenerate mix in matrix game solution");
  for (double& x : v) x /= total;
  return v;
}

RestrictedEquilibrium solve_dense(const std::vector<std::vector<double>>& g) {
  const int rows = static_cast<int>(g.size());
  const int cols = static_cast<int>(g[0].size());

  double lo = g[0][0];
  for (const auto& row : g)
    for (double x : row) lo = std::min(lo, x);
  const double shift = 1.0 - lo;  // every shifted entry >= 1

  // Tableau: one constraint row per maximizer strategy j,
  //   sum_i (g[i][j] + shift) u_i + slack_j = 1,
  // objective row maximizes sum(u).
  const int width = rows + cols + 1;
  std::vector<std::vector<double>> tab(cols + 1,
                                       std::vector<double>(width, 0.0));
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) tab[j][i] = g[i][j] + shift;
    tab[j][rows + j] = 1.0;
    tab[j][width - 1] = 1.0;
  }
  for (int i = 0; i < rows; ++i) tab[cols][i] = -1.0;

  std::vector<int> basis(cols);
  for (int j = 0; j < cols; ++j) basis[j] = rows + j;

  RestrictedEquilibrium out;
  const int max_pivots = 20'000 + 50 * (rows + cols);
  while (true) {
    int enter = -1;  // Bland's rule: smallest index with negative cost
    for (int c = 0; c < width - 1; ++c) {
      if (tab[cols][c] < -1e-12) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;  // minimum ratio, ties to the smallest basic index
    double best_ratio = 0.0;
    for (int r = 0; r < cols; ++r) {
      if (tab[r][enter] <= 1e-12) continue;
      const double ratio = tab[r][width - 1] / tab[r][enter];
      if (leave < 0 || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw std::runtime_error(
          "matrix game transform produced an unbounded program");

    const double pivot = tab[leave][enter];
    for (int c = 0; c < width; ++c) tab[leave][c] /= pivot;
    for (int r = 0; r <= cols; ++r) {
      if (r == leave) continue;
      const double factor = tab[r][enter];
      if (factor == 0.0) continue;
      for (int c = 0; c < width; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
    if (++out.pivots > max_pivots)
      throw std::runtime_error("matrix game solver exceeded " +
                               std::to_string(max_pivots) + " pivots");
  }

  const double lp_value = tab[cols][width - 1];
  if (lp_value <= 0.0)
    throw std::runtime_error(
        "matrix game solver reached a non-positive program value");

  std::vector<double> primal(rows, 0.0);
  for (int r = 0; r < cols; ++r)
    if (basis[r] < rows) primal[basis[r]] = std::max(0.0, tab[r][width - 1]);
  std::vector<double> dual(cols, 0.0);
  for (int j = 0; j < cols; ++j)
    dual[j] = std::max(0.0, tab[cols][rows + j]);

  out.value = 1.0 / lp_value - shift;
  out.row_mix = normalized(std::move(primal));
  out.col_mix = normalized(std::move(dual));
  return out;
}

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

}  // namespace

MatrixGameResult solve_matrix_game(
    const std::vector<std::vector<double>>& payoff, double tol) {
  if (payoff.empty() || payoff[0].empty())
    throw std::invalid_argument(
        "matrix game must have at least one strategy per player");
  const int rows = static_cast<int>(payoff.size());
  const int cols = static_cast<int>(payoff[0].size());
  for (const auto& row : payoff) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix game payoffs must be rectangular");
    for (double x : row)
      if (!std::isfinite(x))
        throw std::invalid_argument("matrix game payoffs must be finite");
  }
  if (rows > kMaxGameStrategies || cols > kMaxGameStrategies)
    throw std::invalid_argument(
        "matrix game exceeds the strategy-count guard of " +
        std::to_string(kMaxGameStrategies));

  // Double oracle: keep restricted strategy sets, solve the restricted game
  // exactly, then let each player best-respond over the full matrix. A
  // best response already inside the restricted set cannot beat the
  // restricted value, so every non-terminal iteration grows a side.
  std::vector<int> rset = {0}, cset = {0};
  std::vector<char> in_r(rows, 0), in_c(cols, 0);
  in_r[0] = in_c[0] = 1;

  MatrixGameResult res;
  const int max_outer = rows + cols + 2;
  while (true) {
    ++res.iterations;
    std::vector<std::vector<double>> sub(rset.size(),
                                         std::vector<double>(cset.size()));
    for (std::size_t i = 0; i < rset.size(); ++i)
      for (std::size_t j = 0; j < cset.size(); ++j)
        sub[i][j] = payoff[rset[i]][cset[j]];
    const RestrictedEquilibrium eq = solve_dense(sub);

    res.value = eq.value;
    res.row_mix.assign(rows, 0.0);
    for (std::size_t i = 0; i < rset.size(); ++i)
      res.row_mix[rset[i]] = eq.row_mix[i];
    res.col_mix.assign(cols, 0.0);
    for (std::size_t j = 0; j < cset.size(); ++j)
      res.col_mix[cset[j]] = eq.col_mix[j];

    // Full-space best responses against the restricted equilibrium.
    double best_col = -std::numeric_limits<double>::infinity();
    int grow_col = -1;
    double grow_col_val = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rset.size(); ++i)
        s += eq.row_mix[i] * payoff[rset[i]][j];
      best_col = std::max(best_col, s);
      if (!in_c[j] && s > grow_col_val + 1e-15) {
        grow_col_val = s;
        grow_col = j;
      }
    }
    double best_row = std::numeric_limits<double>::infinity();
    int grow_row = -1;
    double grow_row_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cset.size(); ++j)
        s += eq.col_mix[j] * payoff[i][cset[j]];
      best_row = std::min(best_row, s);
      if (!in_r[i] && s < grow_row_val - 1e-15) {
        grow_row_val = s;
        grow_row = i;
      }
    }

    res.row_regret = std::max(0.0, best_col - eq.value);
    res.col_regret = std::max(0.0, eq.value - best_row);
    if (res.row_regret <= tol && res.col_regret <= tol) {
      res.certified = true;
      return res;
    }

    bool grew = false;
    if (res.row_regret > tol && grow_col >= 0 &&
        grow_col_val > eq.value + 1e-12) {
      insert_sorted(cset, grow_col);
      in_c[grow_col] = 1;
      grew = true;
    }
    if (res.col_regret > tol && grow_row >= 0 &&
        grow_row_val < eq.value - 1e-12) {
      insert_sorted(rset, grow_row);
      in_r[grow_row] = 1;
      grew = true;
    }
    if (!grew || res.iterations >= max_outer) return res;  // uncertified
  }
}

}  // namespace stabsel
