#pragma once

#include <cstdint>

#include "netrate/strategy.hpp"

namespace netrate {

/// Discretization of the strategy space for exhaustive search: bribes
/// are multiples of `step` in [0,1], so each customer has 1/step + 1
/// candidate levels.
struct GridSpec {
    Rational step;
    long levels; // 1/step

    static GridSpec of_step(const Rational& step);
};

struct OracleResult {
    Strategy best_strategy;
    Rational best_revenue;
    std::uint64_t strategies_examined = 0;
};

struct OracleOptions {
    /// Hard bound on (levels+1)^n; exceeding it is an error, never a
    /// silent sample.
    std::uint64_t enumeration_cap = 50'000'000;
    /// 0 = OpenMP runtime default.
    int threads = 0;
};

/// Fill voters to the cap in ascending index order until
/// min(u0_O, total slack) is spent. Weakly dominant under the
/// objective system.
Strategy o_greedy(const RatedInstance& instance);

/// Bribe customers with influence weight above 1, heaviest first (ties
/// by ascending index), each up to min(1 - eval, remaining budget u0_P).
/// Requires every customer to vote; with non-voters present the
/// exhaustive oracle is the only optimizer.
Strategy p_greedy(const RatedInstance& instance);

/// Exhaustive maximum-revenue search over all budget-balanced grid
/// strategies. Ties go to the lexicographically smallest bribe vector.
/// OpenMP-parallel over bribe-vector prefixes; the serial variant is the
/// reference implementation and returns bit-identical results.
OracleResult brute_force_best(const RatedInstance& instance, RatingSystem system,
                              const GridSpec& grid, const OracleOptions& options = {});
OracleResult brute_force_best_serial(const RatedInstance& instance, RatingSystem system,
                                     const GridSpec& grid, const OracleOptions& options = {});

/// True iff doing nothing is optimal over the grid (best revenue 0).
bool is_bribery_proof(const RatedInstance& instance, RatingSystem system,
                      const GridSpec& grid, const OracleOptions& options = {});

enum class Dominance { Strict, Weak, None };

/// Pairwise utility comparison of two budget-balanced strategies.
Dominance dominates(const RatedInstance& instance, const Strategy& a, const Strategy& b,
                    RatingSystem system);

} // namespace netrate
