#pragma once

// Internal scratch-based revenue evaluation shared by the exhaustive
// oracle and the placement-expectation kernels. Not part of the public
// API; callers guarantee validity (every customer sees a voter), so
// these paths never throw and are safe inside OpenMP regions.

#include <cassert>
#include <vector>

#include "netrate/evaluation.hpp"
#include "netrate/rating.hpp"

namespace netrate::detail {

struct EvalScratch {
    std::vector<Rational> value; // meaningful where votes[c] != 0
    std::vector<char> votes;

    explicit EvalScratch(int n) : value(n), votes(n, 0) {}
};

/// Restaurant utility before subtracting the amount spent.
inline Rational gross_utility(const CustomersNetwork& net, const EvalScratch& s,
                              RatingSystem system) {
    const int n = net.size();
    if (system == RatingSystem::Objective) {
        Rational sum;
        long voters = 0;
        for (int c = 0; c < n; ++c) {
            if (s.votes[c]) {
                sum += s.value[c];
                ++voters;
            }
        }
        assert(voters > 0);
        return Rational(static_cast<long>(n)) * (sum / Rational(voters));
    }
    Rational acc;
    for (int c = 0; c < n; ++c) {
        Rational sum;
        long count = 0;
        for (int k : net.neighborhood(c)) {
            if (s.votes[k]) {
                sum += s.value[k];
                ++count;
            }
        }
        assert(count > 0);
        acc += sum / Rational(count);
    }
    return acc;
}

} // namespace netrate::detail
