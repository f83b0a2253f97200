#pragma once

#include <vector>

namespace stabsel {

/// Mixed equilibrium of a finite zero-sum matrix game. `payoff[r][c]` is
/// paid by the row player to the column player: rows minimize, columns
/// maximize. Regrets are each player's best-response gap against the
/// returned mixes over the FULL strategy spaces.
struct MatrixGameResult {
  double value = 0.0;
  std::vector<double> row_mix;
  std::vector<double> col_mix;
  int iterations = 0;
  double row_regret = 0.0;
  double col_regret = 0.0;
  bool certified = false;
};

/// Double-oracle solver: grows row/column strategy subsets by iterated best
/// responses against the current restricted equilibrium (found exactly by a
/// dense tableau simplex) and stops when both full-space regrets drop below
/// `tol`. Self-contained; no external optimizer.
MatrixGameResult solve_matrix_game(const std::vector<std::vector<double>>& payoff,
                                   double tol = 1e-7);

}  // namespace stabsel
