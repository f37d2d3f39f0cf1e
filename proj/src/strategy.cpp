#include "netrate/strategy.hpp"

#include <algorithm>
#include <string>

#include "netrate/errors.hpp"

namespace netrate {

Strategy::Strategy(std::vector<Rational> bribes) : bribes_(std::move(bribes)) {
    for (const auto& b : bribes_) {
        if (b.sign() < 0 || b > Rational::one()) {
            throw ValidationError("bribe " + b.str() + " outside [0,1]");
        }
    }
}

Strategy Strategy::zero(int n) {
    return Strategy(std::vector<Rational>(n));
}

Strategy Strategy::single(int n, int c, const Rational& amount) {
    std::vector<Rational> bribes(n);
    bribes.at(c) = amount;
    return Strategy(std::move(bribes));
}

std::vector<int> Strategy::bribed() const {
    std::vector<int> out;
    for (int c = 0; c < size(); ++c) {
        if (!bribes_[c].is_zero()) out.push_back(c);
    }
    return out;
}

Rational Strategy::total() const {
    Rational sum;
    for (const auto& b : bribes_) sum += b;
    return sum;
}

bool Strategy::is_zero() const {
    return std::all_of(bribes_.begin(), bribes_.end(),
                       [](const Rational& b) { return b.is_zero(); });
}

bool lex_less(const Strategy& a, const Strategy& b) {
    return std::lexicographical_compare(a.bribes().begin(), a.bribes().end(),
                                        b.bribes().begin(), b.bribes().end());
}

namespace {

void require_same_size(const RatedInstance& instance, const Strategy& sigma) {
    if (sigma.size() != instance.size()) {
        throw PreconditionError("strategy size " + std::to_string(sigma.size()) +
                                " does not match instance size " + std::to_string(instance.size()));
    }
}

} // namespace

EvaluationProfile apply_strategy(const RatedInstance& instance, const Strategy& sigma) {
    require_same_size(instance, sigma);
    const auto& profile = instance.profile();
    std::vector<Value> after;
    after.reserve(instance.size());
    for (int c = 0; c < instance.size(); ++c) {
        if (profile.is_voter(c)) {
            after.push_back(Value::rating(std::min(Rational::one(), profile[c].get() + sigma[c])));
        } else if (!sigma[c].is_zero()) {
            after.push_back(Value::rating(sigma[c]));
        } else {
            after.push_back(Value::no_opinion());
        }
    }
    return EvaluationProfile(std::move(after));
}

bool is_budget_balanced(const RatedInstance& instance, const Strategy& sigma, RatingSystem system) {
    require_same_size(instance, sigma);
    return sigma.total() <= initial_utility(instance, system);
}

bool is_efficient(const RatedInstance& instance, const Strategy& sigma) {
    require_same_size(instance, sigma);
    const auto& profile = instance.profile();
    for (int c = 0; c < instance.size(); ++c) {
        Rational eval = profile.is_voter(c) ? profile[c].get() : Rational::zero();
        if (sigma[c] + eval > Rational::one()) return false;
    }
    return true;
}

Rational utility_after(const RatedInstance& instance, const Strategy& sigma, RatingSystem system) {
    if (!is_budget_balanced(instance, sigma, system)) {
        throw PreconditionError("strategy is not budget balanced: total " + sigma.total().str() +
                                " exceeds u0 " + initial_utility(instance, system).str());
    }
    EvaluationProfile after = apply_strategy(instance, sigma);
    Rational gross;
    if (system == RatingSystem::Objective) {
        gross = Rational(static_cast<long>(instance.size())) * o_rating(after);
    } else {
        for (int c = 0; c < instance.size(); ++c) {
            gross += p_rating(instance.network(), after, c);
        }
    }
    return gross - sigma.total();
}

RevenueReport revenue(const RatedInstance& instance, const Strategy& sigma, RatingSystem system) {
    RevenueReport report;
    report.system = system;
    report.initial_utility = initial_utility(instance, system);
    report.utility_after = utility_after(instance, sigma, system);
    report.revenue = report.utility_after - report.initial_utility;
    report.bribed = sigma.bribed();
    report.total_spent = sigma.total();
    return report;
}

Strategy compose(const Strategy& a, const Strategy& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("cannot compose strategies of different sizes");
    }
    std::vector<Rational> sum(a.size());
    for (int c = 0; c < a.size(); ++c) {
        if (!a[c].is_zero() && !b[c].is_zero()) {
            throw PreconditionError("cannot compose strategies with overlapping bribed sets"
                                    " (customer " + std::to_string(c) + ")");
        }
        sum[c] = a[c] + b[c];
    }
    return Strategy(std::move(sum));
}

Strategy greedy_restriction(const RatedInstance& instance, const Strategy& sigma, int cbar) {
    require_same_size(instance, sigma);
    if (cbar < 0 || cbar >= instance.size()) {
        throw std::out_of_range("customer index " + std::to_string(cbar) + " out of range");
    }
    const auto& profile = instance.profile();
    if (profile.is_voter(cbar)) {
        throw PreconditionError("greedy restriction requires a non-voter, but customer " +
                                std::to_string(cbar) + " votes");
    }
    if (sigma[cbar].is_zero()) {
        throw PreconditionError("greedy restriction requires a bribed customer, but customer " +
                                std::to_string(cbar) + " is not bribed");
    }

    std::vector<Rational> bribes = sigma.bribes();
    Rational freed = bribes[cbar];
    bribes[cbar] = Rational::zero();

    // Recipients are the remaining post-bribe voters, filled ascending.
    for (int c = 0; c < instance.size() && !freed.is_zero(); ++c) {
        if (c == cbar) continue;
        bool votes_after = profile.is_voter(c) || !bribes[c].is_zero();
        if (!votes_after) continue;
        Rational eval = profile.is_voter(c) ? profile[c].get() : Rational::zero();
        Rational slack = Rational::one() - eval - bribes[c];
        if (slack.sign() <= 0) continue;
        Rational add = std::min(slack, freed);
        bribes[c] += add;
        freed -= add;
    }
    return Strategy(std::move(bribes));
}

Rational revenue_formula_p(const RatedInstance& instance, const Strategy& sigma) {
    require_same_size(instance, sigma);
    const auto& profile = instance.profile();
    for (int c : sigma.bribed()) {
        if (!profile.is_voter(c)) {
            throw PreconditionError("closed-form revenue applies to voter-only strategies, but customer " +
                                    std::to_string(c) + " is a bribed non-voter");
        }
    }
    if (!is_efficient(instance, sigma)) {
        throw PreconditionError("closed-form revenue applies to efficient strategies only");
    }
    auto weights = influence_weights(instance);
    Rational sum;
    for (int c : profile.voters()) {
        if (!sigma[c].is_zero()) {
            sum += (weights[c] - Rational::one()) * sigma[c];
        }
    }
    return sum;
}

int single_bribe_bound(const RatedInstance& instance, int cbar) {
    return instance.network().degree(cbar);
}

} // namespace netrate
