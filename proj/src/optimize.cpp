#include "netrate/optimize.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "netrate/errors.hpp"
#include "revenue_kernel.hpp"

namespace netrate {

GridSpec GridSpec::of_step(const Rational& step) {
    if (step.sign() <= 0 || step > Rational::one()) {
        throw ValidationError("grid step must lie in (0,1]");
    }
    if (step.numerator_str() != "1") {
        throw ValidationError("grid step " + step.str() + " must divide 1");
    }
    return GridSpec{step, step.denominator_long()};
}

Strategy o_greedy(const RatedInstance& instance) {
    Rational remaining = initial_utility(instance, RatingSystem::Objective);
    std::vector<Rational> bribes(instance.size());
    for (int c : instance.profile().voters()) {
        if (remaining.is_zero()) break;
        Rational slack = Rational::one() - instance.profile()[c].get();
        Rational give = std::min(slack, remaining);
        bribes[c] = give;
        remaining -= give;
    }
    return Strategy(std::move(bribes));
}

Strategy p_greedy(const RatedInstance& instance) {
    if (!instance.all_vote()) {
        throw PreconditionError("the greedy personalised strategy requires every customer to vote;"
                                " run the exhaustive oracle when non-voters are present");
    }
    auto weights = influence_weights(instance);
    std::vector<int> order(instance.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (weights[a] != weights[b]) return weights[b] < weights[a];
        return a < b;
    });

    Rational budget = initial_utility(instance, RatingSystem::Personalised);
    std::vector<Rational> bribes(instance.size());
    for (int c : order) {
        if (budget.is_zero()) break;
        if (weights[c] > Rational::one()) {
            Rational amount = std::min(Rational::one() - instance.profile()[c].get(), budget);
            bribes[c] = amount;
            budget -= amount;
        }
    }
    return Strategy(std::move(bribes));
}

namespace {

void check_enumeration_cap(int n, long levels, std::uint64_t cap) {
    std::uint64_t space = 1;
    const auto per_customer = static_cast<std::uint64_t>(levels) + 1;
    for (int i = 0; i < n; ++i) {
        if (space > cap / per_customer) {
            throw EnumerationCapError("grid search space (" + std::to_string(levels + 1) + "^" +
                                      std::to_string(n) + ") exceeds the enumeration cap " +
                                      std::to_string(cap));
        }
        space *= per_customer;
    }
}

long budget_units(const RatedInstance& instance, RatingSystem system, long levels) {
    Rational u0 = initial_utility(instance, system);
    long cap = static_cast<long>(instance.size()) * levels;
    return std::min(u0.floor_scaled(levels), cap);
}

std::vector<Rational> grid_value_table(long levels) {
    std::vector<Rational> values(levels + 1);
    for (long k = 0; k <= levels; ++k) values[k] = Rational(k, levels);
    return values;
}

Strategy strategy_from_units(const std::vector<int>& units, const std::vector<Rational>& grid) {
    std::vector<Rational> bribes(units.size());
    for (size_t c = 0; c < units.size(); ++c) bribes[c] = grid[units[c]];
    return Strategy(std::move(bribes));
}

/// Scratch-buffer revenue evaluation of grid strategies; one instance
/// per worker thread.
class GridEvaluator {
public:
    GridEvaluator(const RatedInstance& instance, RatingSystem system, Rational u0,
                  const std::vector<Rational>& grid)
        : net_(instance.network()),
          system_(system),
          u0_(std::move(u0)),
          grid_(grid),
          scratch_(instance.size()),
          base_value_(instance.size()),
          base_votes_(instance.size(), 0) {
        for (int c = 0; c < instance.size(); ++c) {
            if (instance.profile().is_voter(c)) {
                base_votes_[c] = 1;
                base_value_[c] = instance.profile()[c].get();
            }
        }
    }

    Rational revenue_of(const std::vector<int>& units) {
        const int n = net_.size();
        Rational cost;
        for (int c = 0; c < n; ++c) {
            const int k = units[c];
            if (base_votes_[c]) {
                scratch_.votes[c] = 1;
                if (k == 0) {
                    scratch_.value[c] = base_value_[c];
                } else {
                    Rational v = base_value_[c] + grid_[k];
                    if (v > one_) v = one_;
                    scratch_.value[c] = v;
                    cost += grid_[k];
                }
            } else if (k != 0) {
                scratch_.votes[c] = 1;
                scratch_.value[c] = grid_[k];
                cost += grid_[k];
            } else {
                scratch_.votes[c] = 0;
            }
        }
        return detail::gross_utility(net_, scratch_, system_) - cost - u0_;
    }

private:
    const CustomersNetwork& net_;
    RatingSystem system_;
    Rational u0_;
    const std::vector<Rational>& grid_;
    detail::EvalScratch scratch_;
    std::vector<Rational> base_value_;
    std::vector<char> base_votes_;
    Rational one_ = Rational::one();
};

struct LocalBest {
    bool any = false;
    Rational revenue;
    std::vector<int> units;
    std::uint64_t examined = 0;
};

/// Lexicographic enumeration of suffixes under a total-bribe bound.
/// Keeping only strictly better revenues makes the first maximum found
/// the lexicographically smallest one.
void enumerate_suffix(GridEvaluator& eval, std::vector<int>& units, int pos, long levels,
                      long remaining, LocalBest& best) {
    const int n = static_cast<int>(units.size());
    if (pos == n) {
        Rational rev = eval.revenue_of(units);
        ++best.examined;
        if (!best.any || rev > best.revenue) {
            best.any = true;
            best.revenue = std::move(rev);
            best.units = units;
        }
        return;
    }
    const long top = std::min(levels, remaining);
    for (long v = 0; v <= top; ++v) {
        units[pos] = static_cast<int>(v);
        enumerate_suffix(eval, units, pos + 1, levels, remaining - v, best);
    }
}

} // namespace

OracleResult brute_force_best_serial(const RatedInstance& instance, RatingSystem system,
                                     const GridSpec& grid, const OracleOptions& options) {
    const int n = instance.size();
    const long m = grid.levels;
    check_enumeration_cap(n, m, options.enumeration_cap);

    const auto gv = grid_value_table(m);
    const long budget = budget_units(instance, system, m);

    OracleResult out{Strategy::zero(n), Rational::zero(), 0};
    bool any = false;

    // Reference path: walks the same lexicographic order as the parallel
    // kernel but scores each candidate through the public revenue().
    std::vector<int> units(n, 0);
    auto walk = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == n) {
            RevenueReport report = revenue(instance, strategy_from_units(units, gv), system);
            ++out.strategies_examined;
            if (!any || report.revenue > out.best_revenue) {
                any = true;
                out.best_revenue = report.revenue;
                out.best_strategy = strategy_from_units(units, gv);
            }
            return;
        }
        const long top = std::min(m, remaining);
        for (long v = 0; v <= top; ++v) {
            units[pos] = static_cast<int>(v);
            self(self, pos + 1, remaining - v);
        }
    };
    walk(walk, 0, budget);
    return out;
}

OracleResult brute_force_best(const RatedInstance& instance, RatingSystem system,
                              const GridSpec& grid, const OracleOptions& options) {
    const int n = instance.size();
    const long m = grid.levels;
    check_enumeration_cap(n, m, options.enumeration_cap);

    const auto gv = grid_value_table(m);
    const long budget = budget_units(instance, system, m);
    const Rational u0 = initial_utility(instance, system);

    // Partition by the first one or two bribe coordinates; tasks are
    // merged in lexicographic prefix order so the result is independent
    // of scheduling.
    const int prefix_len = n >= 2 ? 2 : 1;
    struct Prefix {
        int k0, k1;
        long used;
    };
    std::vector<Prefix> prefixes;
    for (long k0 = 0; k0 <= std::min(m, budget); ++k0) {
        if (prefix_len == 1) {
            prefixes.push_back({static_cast<int>(k0), 0, k0});
        } else {
            for (long k1 = 0; k1 <= std::min(m, budget - k0); ++k1) {
                prefixes.push_back({static_cast<int>(k0), static_cast<int>(k1), k0 + k1});
            }
        }
    }

    std::vector<LocalBest> locals(prefixes.size());
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        GridEvaluator eval(instance, system, u0, gv);
        std::vector<int> units(n, 0);
#pragma omp for schedule(dynamic)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(prefixes.size()); ++t) {
            units[0] = prefixes[t].k0;
            if (prefix_len == 2) units[1] = prefixes[t].k1;
            enumerate_suffix(eval, units, prefix_len, m, budget - prefixes[t].used, locals[t]);
        }
    }

    OracleResult out{Strategy::zero(n), Rational::zero(), 0};
    bool any = false;
    std::vector<int> best_units;
    for (const auto& loc : locals) {
        out.strategies_examined += loc.examined;
        if (loc.any && (!any || loc.revenue > out.best_revenue)) {
            any = true;
            out.best_revenue = loc.revenue;
            best_units = loc.units;
        }
    }
    out.best_strategy = strategy_from_units(best_units, gv);
    return out;
}

bool is_bribery_proof(const RatedInstance& instance, RatingSystem system, const GridSpec& grid,
                      const OracleOptions& options) {
    return brute_force_best(instance, system, grid, options).best_revenue.is_zero();
}

Dominance dominates(const RatedInstance& instance, const Strategy& a, const Strategy& b,
                    RatingSystem system) {
    if (!is_budget_balanced(instance, a, system) || !is_budget_balanced(instance, b, system)) {
        throw PreconditionError("dominance comparison requires budget-balanced strategies");
    }
    Rational ua = utility_after(instance, a, system);
    Rational ub = utility_after(instance, b, system);
    if (ua > ub) return Dominance::Strict;
    if (ua == ub) return Dominance::Weak;
    return Dominance::None;
}

} // namespace netrate
