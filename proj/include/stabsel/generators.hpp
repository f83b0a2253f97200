#pragma once

#include <cstdint>

#include "stabsel/core.hpp"

namespace stabsel {

enum class ModelKind { Approval, Ranking, Budget, Facility };

struct RandomParams {
  double density = 0.5;  // approval inclusion probability
};

/// Cyclic one-dimensional instance: n = m unit-weight candidates,
/// K = 2 - eps/2, additive utilities u[v][c] = m - ((c - v) mod m), so voter
/// v ranks candidates v, v+1, ..., v-1 cyclically. No deterministic
/// committee does better than (m-1)/m * K here: each singleton's worst
/// blocker is its cyclic predecessor, preferred by m-1 voters.
Instance gen_cyclic(int m, double eps);

/// r x l grid of unit-weight candidates, n = m = r*l voters, K = r - 1,
/// ranking preferences: voter (i,j) orders candidates by cyclic row
/// distance from i, then cyclic column distance from j. Every feasible
/// committee leaves a row empty with at most one candidate in the next row,
/// so some next-row singleton is preferred by at least 2l - 2 voters,
/// forcing min deterministic c >= (2l-2)(r-1)/(l r).
Instance gen_ranking_grid(int r, int l);

/// Seeded random instance of the requested model kind. Approval/ranking/
/// facility use unit weights; budget draws weights uniform in [0.5, 1.5]
/// and utilities uniform in [0, 1]; facility places voters and candidates
/// uniformly in the unit square with Euclidean distances. Identical seeds
/// give byte-identical serialized instances.
Instance gen_random(ModelKind kind, int m, int n, double K,
                    const RandomParams& params, std::uint64_t seed);

}  // namespace stabsel
