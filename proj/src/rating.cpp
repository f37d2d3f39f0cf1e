#include "netrate/rating.hpp"

#include <string>

#include "netrate/errors.hpp"

namespace netrate {

const char* system_name(RatingSystem s) {
    return s == RatingSystem::Objective ? "O" : "P";
}

Rational o_rating(const EvaluationProfile& profile) {
    Rational sum;
    for (int c : profile.voters()) {
        sum += profile[c].get();
    }
    return sum / Rational(static_cast<long>(profile.voters().size()));
}

Rational p_rating(const CustomersNetwork& net, const EvaluationProfile& profile, int c) {
    Rational sum;
    long count = 0;
    for (int k : net.neighborhood(c)) {
        if (profile.is_voter(k)) {
            sum += profile[k].get();
            ++count;
        }
    }
    if (count == 0) {
        throw PreconditionError("personalised rating undefined: customer " +
                                std::to_string(c) + " sees no voter");
    }
    return sum / Rational(count);
}

Rational p_rating(const RatedInstance& instance, int c) {
    return p_rating(instance.network(), instance.profile(), c);
}

std::vector<bool> voter_mask(const EvaluationProfile& profile) {
    std::vector<bool> mask(profile.size(), false);
    for (int c : profile.voters()) mask[c] = true;
    return mask;
}

std::vector<bool> all_voters_mask(int n) {
    return std::vector<bool>(n, true);
}

namespace {

// |N(k) ∩ voters| for every k.
std::vector<long> visible_voter_counts(const CustomersNetwork& net, const std::vector<bool>& voters) {
    std::vector<long> counts(net.size(), 0);
    for (int k = 0; k < net.size(); ++k) {
        for (int x : net.neighborhood(k)) {
            if (voters[x]) ++counts[k];
        }
    }
    return counts;
}

} // namespace

Rational influence_weight(const CustomersNetwork& net, int c, const std::vector<bool>& voters) {
    if (static_cast<int>(voters.size()) != net.size()) {
        throw PreconditionError("voter mask size does not match network size");
    }
    Rational w;
    for (int k : net.neighborhood(c)) {
        long count = 0;
        for (int x : net.neighborhood(k)) {
            if (voters[x]) ++count;
        }
        if (count == 0) {
            throw PreconditionError("influence weight undefined: neighbor " +
                                    std::to_string(k) + " sees no voter");
        }
        w += Rational(1, count);
    }
    return w;
}

Rational influence_weight(const RatedInstance& instance, int c, const std::vector<bool>& voters) {
    return influence_weight(instance.network(), c, voters);
}

Rational influence_weight(const RatedInstance& instance, int c) {
    return influence_weight(instance.network(), c, voter_mask(instance.profile()));
}

std::vector<Rational> influence_weights(const CustomersNetwork& net, const std::vector<bool>& voters) {
    if (static_cast<int>(voters.size()) != net.size()) {
        throw PreconditionError("voter mask size does not match network size");
    }
    auto counts = visible_voter_counts(net, voters);
    std::vector<Rational> weights(net.size());
    for (int c = 0; c < net.size(); ++c) {
        Rational w;
        for (int k : net.neighborhood(c)) {
            if (counts[k] == 0) {
                throw PreconditionError("influence weight undefined: neighbor " +
                                        std::to_string(k) + " sees no voter");
            }
            w += Rational(1, counts[k]);
        }
        weights[c] = w;
    }
    return weights;
}

std::vector<Rational> influence_weights(const RatedInstance& instance) {
    return influence_weights(instance.network(), voter_mask(instance.profile()));
}

Rational initial_utility(const RatedInstance& instance, RatingSystem system) {
    if (system == RatingSystem::Objective) {
        return Rational(static_cast<long>(instance.size())) * o_rating(instance.profile());
    }
    Rational sum;
    for (int c = 0; c < instance.size(); ++c) {
        sum += p_rating(instance, c);
    }
    return sum;
}

} // namespace netrate
