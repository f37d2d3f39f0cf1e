#pragma once

#include <vector>

#include "netrate/evaluation.hpp"

namespace netrate {

enum class RatingSystem { Objective, Personalised };

const char* system_name(RatingSystem s);

/// Average evaluation over all voters.
Rational o_rating(const EvaluationProfile& profile);

/// Average evaluation over the voters in c's neighborhood.
/// Throws PreconditionError if c sees no voter (cannot happen for a
/// profile validated inside a RatedInstance).
Rational p_rating(const CustomersNetwork& net, const EvaluationProfile& profile, int c);
Rational p_rating(const RatedInstance& instance, int c);

/// Influence weight of c against an explicit voter set:
/// the sum over k in N(c) of 1 / |N(k) ∩ voters|.
/// Throws PreconditionError if some neighbor of c sees no voter.
Rational influence_weight(const CustomersNetwork& net, int c, const std::vector<bool>& voters);
Rational influence_weight(const RatedInstance& instance, int c, const std::vector<bool>& voters);

/// Weight against the instance's own voter set.
Rational influence_weight(const RatedInstance& instance, int c);

/// All weights at once; cheaper than n single queries.
std::vector<Rational> influence_weights(const CustomersNetwork& net, const std::vector<bool>& voters);
std::vector<Rational> influence_weights(const RatedInstance& instance);

std::vector<bool> voter_mask(const EvaluationProfile& profile);
std::vector<bool> all_voters_mask(int n);

/// Initial utility u0 of the restaurant under the chosen system:
/// |C| * o_rating for Objective, the sum of all p_ratings for Personalised.
Rational initial_utility(const RatedInstance& instance, RatingSystem system);

} // namespace netrate
