#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netrate/strategy.hpp"

namespace netrate {

/// A known network shape with unknown customer positions: the named
/// customers (profile and strategy indices) can sit on the anonymous
/// shape nodes in any of the n! ways.
///
/// Construction validates that every placement yields a well-defined
/// instance (equivalently: every node's closed neighborhood is larger
/// than the number of non-voters) and that the strategy is budget
/// balanced on the canonical identity placement.
class PlacementScenario {
public:
    PlacementScenario(CustomersNetwork shape, EvaluationProfile profile, Strategy sigma,
                      RatingSystem system);

    const CustomersNetwork& shape() const { return shape_; }
    const EvaluationProfile& profile() const { return profile_; }
    const Strategy& sigma() const { return sigma_; }
    RatingSystem system() const { return system_; }
    int size() const { return shape_.size(); }

    /// The instance with customer c sitting on node c.
    RatedInstance canonical_instance() const;

private:
    CustomersNetwork shape_;
    EvaluationProfile profile_;
    Strategy sigma_;
    RatingSystem system_;
};

struct ExpectationResult {
    /// True when `value` is the exact enumeration mean; false when it is
    /// a Monte Carlo sample mean with `standard_error` attached.
    bool exact = false;
    Rational value;
    double standard_error = 0.0;
    std::uint64_t placements_evaluated = 0;
    /// Distinct per-placement revenues with multiplicities, ascending.
    /// Filled by the exact path only.
    std::vector<std::pair<Rational, std::uint64_t>> per_placement_revenues;
};

struct ExpectationOptions {
    /// Exact enumeration refuses above this size (n! placements).
    int exact_cap = 9;
    /// 0 = OpenMP runtime default.
    int threads = 0;
};

/// Revenue of the scenario's strategy on the instance induced by one
/// placement (placement[customer] = node).
Rational per_placement_revenue(const PlacementScenario& scenario, std::span<const int> placement);

/// Exact expected revenue: the mean over all n! placements.
/// OpenMP-parallel over placement-rank blocks; the serial variant is the
/// reference implementation and returns bit-identical results.
ExpectationResult expected_revenue_exact(const PlacementScenario& scenario,
                                         const ExpectationOptions& options = {});
ExpectationResult expected_revenue_exact_serial(const PlacementScenario& scenario,
                                                const ExpectationOptions& options = {});

/// Seeded Monte Carlo estimate over uniform random placements. Samples
/// are drawn in fixed-size blocks with per-block derived seeds, so the
/// estimate depends only on (seed, samples), not on the worker count.
ExpectationResult expected_revenue_mc(const PlacementScenario& scenario, std::uint64_t samples,
                                      std::uint64_t seed, const ExpectationOptions& options = {});
ExpectationResult expected_revenue_mc_serial(const PlacementScenario& scenario,
                                             std::uint64_t samples, std::uint64_t seed,
                                             const ExpectationOptions& options = {});

} // namespace netrate
