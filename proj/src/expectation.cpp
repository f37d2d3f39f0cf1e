#include "netrate/expectation.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "netrate/errors.hpp"
#include "revenue_kernel.hpp"

namespace netrate {

PlacementScenario::PlacementScenario(CustomersNetwork shape, EvaluationProfile profile,
                                     Strategy sigma, RatingSystem system)
    : shape_(std::move(shape)),
      profile_(std::move(profile)),
      sigma_(std::move(sigma)),
      system_(system) {
    if (profile_.size() != shape_.size() || sigma_.size() != shape_.size()) {
        throw ValidationError("scenario profile/strategy sizes must match the shape size");
    }
    // Every placement yields a well-defined instance iff no closed
    // neighborhood can be covered by non-voters alone.
    const int non_voters = shape_.size() - static_cast<int>(profile_.voters().size());
    for (int x = 0; x < shape_.size(); ++x) {
        if (shape_.degree(x) <= non_voters) {
            throw ValidationError("invalid scenario: placing the " + std::to_string(non_voters) +
                                  " non-voters over N(" + std::to_string(x) +
                                  ") strands a customer without a visible voter");
        }
    }
    RatedInstance canonical(shape_, profile_);
    if (!is_budget_balanced(canonical, sigma_, system_)) {
        throw ValidationError("strategy is not budget balanced on the canonical placement: total " +
                              sigma_.total().str() + " exceeds u0 " +
                              initial_utility(canonical, system_).str());
    }
}

RatedInstance PlacementScenario::canonical_instance() const {
    return RatedInstance(shape_, profile_);
}

namespace {

/// Scratch-buffer revenue evaluation of placements; one instance per
/// worker thread. Revenue is u_rho(sigma) - u_rho(0) on the instance
/// obtained by seating customer c on node placement[c]; no budget check
/// is applied per placement (the scenario checked the canonical one).
class PlacementEvaluator {
public:
    explicit PlacementEvaluator(const PlacementScenario& scenario)
        : shape_(scenario.shape()),
          system_(scenario.system()),
          before_(scenario.size()),
          after_(scenario.size()),
          base_value_(scenario.size()),
          base_votes_(scenario.size(), 0),
          bribe_(scenario.size()) {
        for (int c = 0; c < scenario.size(); ++c) {
            if (scenario.profile().is_voter(c)) {
                base_votes_[c] = 1;
                base_value_[c] = scenario.profile()[c].get();
            }
            bribe_[c] = scenario.sigma()[c];
            cost_ += bribe_[c];
        }
    }

    Rational revenue_of(std::span<const int> placement) {
        const int n = shape_.size();
        for (int c = 0; c < n; ++c) {
            const int x = placement[c];
            before_.votes[x] = base_votes_[c];
            if (base_votes_[c]) {
                before_.value[x] = base_value_[c];
                after_.votes[x] = 1;
                Rational v = base_value_[c] + bribe_[c];
                if (v > one_) v = one_;
                after_.value[x] = v;
            } else if (!bribe_[c].is_zero()) {
                after_.votes[x] = 1;
                after_.value[x] = bribe_[c];
            } else {
                after_.votes[x] = 0;
            }
        }
        Rational u0 = detail::gross_utility(shape_, before_, system_);
        Rational u = detail::gross_utility(shape_, after_, system_) - cost_;
        return u - u0;
    }

private:
    const CustomersNetwork& shape_;
    RatingSystem system_;
    detail::EvalScratch before_, after_;
    std::vector<Rational> base_value_;
    std::vector<char> base_votes_;
    std::vector<Rational> bribe_;
    Rational cost_;
    Rational one_ = Rational::one();
};

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// rank-th permutation of 0..n-1 in lexicographic order.
std::vector<int> unrank_permutation(std::uint64_t rank, int n) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> perm(n);
    std::uint64_t f = factorial(n - 1);
    for (int i = 0; i < n; ++i) {
        const auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        perm[i] = pool[idx];
        pool.erase(pool.begin() + static_cast<long>(idx));
        if (i + 1 < n) f /= static_cast<std::uint64_t>(n - 1 - i);
    }
    return perm;
}

using Histogram = std::map<Rational, std::uint64_t>;

struct ExactPartial {
    Rational sum;
    Histogram histogram;
};

void check_exact_cap(int n, int cap) {
    if (n > cap || n > 20) {
        throw EnumerationCapError("exact expectation over " + std::to_string(n) +
                                  "! placements exceeds the cap (" + std::to_string(cap) +
                                  "); use Monte Carlo sampling instead");
    }
}

ExpectationResult finish_exact(const std::vector<ExactPartial>& partials, std::uint64_t total) {
    Rational sum;
    Histogram histogram;
    for (const auto& p : partials) {
        sum += p.sum;
        for (const auto& [rev, count] : p.histogram) histogram[rev] += count;
    }
    ExpectationResult result;
    result.exact = true;
    result.value = sum / Rational(static_cast<long>(total));
    result.placements_evaluated = total;
    result.per_placement_revenues.assign(histogram.begin(), histogram.end());
    return result;
}

constexpr std::uint64_t kExactBlock = 5040;
constexpr std::uint64_t kMcBlock = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and the stream
    // independent of the standard library's distribution internals.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    return r % bound;
}

void uniform_placement(std::mt19937_64& rng, std::vector<int>& perm) {
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size() - 1; i > 0; --i) {
        std::swap(perm[i], perm[rand_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
}

struct McPartial {
    Rational sum;
    Rational sum_squares;
};

void mc_block(const PlacementScenario& scenario, PlacementEvaluator& eval, std::uint64_t seed,
              std::uint64_t block, std::uint64_t samples_in_block, McPartial& out) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(block)));
    std::vector<int> perm(scenario.size());
    for (std::uint64_t s = 0; s < samples_in_block; ++s) {
        uniform_placement(rng, perm);
        Rational r = eval.revenue_of(perm);
        out.sum += r;
        out.sum_squares += r * r;
    }
}

ExpectationResult finish_mc(const std::vector<McPartial>& partials, std::uint64_t samples) {
    Rational sum, sum_squares;
    for (const auto& p : partials) {
        sum += p.sum;
        sum_squares += p.sum_squares;
    }
    ExpectationResult result;
    result.exact = false;
    const Rational k(static_cast<long>(samples));
    result.value = sum / k;
    result.placements_evaluated = samples;
    if (samples >= 2) {
        Rational variance = (sum_squares - sum * sum / k) / Rational(static_cast<long>(samples - 1));
        result.standard_error = std::sqrt(std::max(0.0, variance.to_double() / static_cast<double>(samples)));
    }
    return result;
}

} // namespace

Rational per_placement_revenue(const PlacementScenario& scenario, std::span<const int> placement) {
    const int n = scenario.size();
    if (static_cast<int>(placement.size()) != n) {
        throw PreconditionError("placement size does not match the scenario size");
    }
    std::vector<char> seen(n, 0);
    for (int x : placement) {
        if (x < 0 || x >= n || seen[x]) {
            throw PreconditionError("placement is not a bijection onto network positions");
        }
        seen[x] = 1;
    }
    // Surfaces the stranded-customer error for hand-built placements on
    // profiles that never went through scenario validation.
    std::vector<Value> placed(n, Value::no_opinion());
    for (int c = 0; c < n; ++c) placed[placement[c]] = scenario.profile()[c];
    RatedInstance placed_instance(scenario.shape(), EvaluationProfile(std::move(placed)));

    PlacementEvaluator eval(scenario);
    return eval.revenue_of(placement);
}

ExpectationResult expected_revenue_exact_serial(const PlacementScenario& scenario,
                                                const ExpectationOptions& options) {
    check_exact_cap(scenario.size(), options.exact_cap);
    const std::uint64_t total = factorial(scenario.size());

    PlacementEvaluator eval(scenario);
    std::vector<int> perm(scenario.size());
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<ExactPartial> partials(1);
    do {
        Rational r = eval.revenue_of(perm);
        partials[0].sum += r;
        ++partials[0].histogram[r];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return finish_exact(partials, total);
}

ExpectationResult expected_revenue_exact(const PlacementScenario& scenario,
                                         const ExpectationOptions& options) {
    check_exact_cap(scenario.size(), options.exact_cap);
    const std::uint64_t total = factorial(scenario.size());
    const std::uint64_t blocks = (total + kExactBlock - 1) / kExactBlock;

    std::vector<ExactPartial> partials(blocks);
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        PlacementEvaluator eval(scenario);
#pragma omp for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            const std::uint64_t lo = static_cast<std::uint64_t>(b) * kExactBlock;
            const std::uint64_t hi = std::min(total, lo + kExactBlock);
            std::vector<int> perm = unrank_permutation(lo, scenario.size());
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                Rational r = eval.revenue_of(perm);
                partials[b].sum += r;
                ++partials[b].histogram[r];
                std::next_permutation(perm.begin(), perm.end());
            }
        }
    }
    return finish_exact(partials, total);
}

ExpectationResult expected_revenue_mc_serial(const PlacementScenario& scenario,
                                             std::uint64_t samples, std::uint64_t seed,
                                             const ExpectationOptions&) {
    if (samples == 0) {
        throw PreconditionError("Monte Carlo estimation needs at least one sample");
    }
    const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
    std::vector<McPartial> partials(blocks);
    PlacementEvaluator eval(scenario);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = b * kMcBlock;
        const std::uint64_t count = std::min(samples, lo + kMcBlock) - lo;
        mc_block(scenario, eval, seed, b, count, partials[b]);
    }
    return finish_mc(partials, samples);
}

ExpectationResult expected_revenue_mc(const PlacementScenario& scenario, std::uint64_t samples,
                                      std::uint64_t seed, const ExpectationOptions& options) {
    if (samples == 0) {
        throw PreconditionError("Monte Carlo estimation needs at least one sample");
    }
    const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
    std::vector<McPartial> partials(blocks);
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        PlacementEvaluator eval(scenario);
#pragma omp for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            const std::uint64_t lo = static_cast<std::uint64_t>(b) * kMcBlock;
            const std::uint64_t count = std::min(samples, lo + kMcBlock) - lo;
            mc_block(scenario, eval, seed, static_cast<std::uint64_t>(b), count, partials[b]);
        }
    }
    return finish_mc(partials, samples);
}

} // namespace netrate
