#pragma once

#include <vector>

#include "netrate/rating.hpp"

namespace netrate {

/// A bribing strategy: a transfer in [0,1] per customer, 0 meaning not
/// bribed. Budget balance is not intrinsic; it is checked against an
/// (instance, system) pair because the available budget u0 depends on
/// the rating system.
class Strategy {
public:
    explicit Strategy(std::vector<Rational> bribes);

    static Strategy zero(int n);
    static Strategy single(int n, int c, const Rational& amount);

    int size() const { return static_cast<int>(bribes_.size()); }
    const Rational& operator[](int c) const { return bribes_[c]; }
    const std::vector<Rational>& bribes() const { return bribes_; }

    /// B(σ): customers with a non-zero bribe, ascending.
    std::vector<int> bribed() const;
    Rational total() const;
    bool is_zero() const;

    friend bool operator==(const Strategy& a, const Strategy& b) { return a.bribes_ == b.bribes_; }

private:
    std::vector<Rational> bribes_;
};

/// Lexicographic order on bribe vectors; the tie-break used by the
/// exhaustive oracle.
bool lex_less(const Strategy& a, const Strategy& b);

/// The self-auditing unit of experiment output: both utilities are
/// carried so revenue = utility_after - initial_utility can be checked
/// downstream.
struct RevenueReport {
    RatingSystem system;
    Rational initial_utility;
    Rational utility_after;
    Rational revenue;
    std::vector<int> bribed;
    Rational total_spent;
};

/// Post-bribe evaluation: voters move to min{1, eval + bribe}; a bribed
/// non-voter starts voting at exactly the bribe amount; an unbribed
/// non-voter keeps no opinion.
EvaluationProfile apply_strategy(const RatedInstance& instance, const Strategy& sigma);

/// Total bribes <= u0 under the chosen system (boundary admitted).
bool is_budget_balanced(const RatedInstance& instance, const Strategy& sigma, RatingSystem system);

/// No customer is pushed past the cap: bribe + eval <= 1 everywhere,
/// counting a missing opinion as 0.
bool is_efficient(const RatedInstance& instance, const Strategy& sigma);

/// Utility after executing sigma, net of the amount spent. Uses the
/// post-bribe voter set throughout. Throws PreconditionError if sigma
/// is not budget balanced.
Rational utility_after(const RatedInstance& instance, const Strategy& sigma, RatingSystem system);

RevenueReport revenue(const RatedInstance& instance, const Strategy& sigma, RatingSystem system);

/// Pointwise sum of two strategies with disjoint bribed sets.
Strategy compose(const Strategy& a, const Strategy& b);

/// Un-bribe the non-voter cbar and redistribute the freed amount to the
/// remaining post-bribe voters in ascending index order, capping each at
/// eval + bribe = 1; whatever cannot be placed stays unspent.
Strategy greedy_restriction(const RatedInstance& instance, const Strategy& sigma, int cbar);

/// Closed-form personalised revenue via influence weights,
/// sum over voters of (w_c^V - 1) * sigma(c). Requires an efficient
/// strategy bribing voters only.
Rational revenue_formula_p(const RatedInstance& instance, const Strategy& sigma);

/// |N(cbar)|: the cap on what a single efficient bribe can earn under
/// the personalised system.
int single_bribe_bound(const RatedInstance& instance, int cbar);

} // namespace netrate
