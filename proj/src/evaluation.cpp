#include "netrate/evaluation.hpp"

#include <string>

#include "netrate/errors.hpp"

namespace netrate {

Value Value::rating(const Rational& r) {
    if (r.sign() < 0 || r > Rational::one()) {
        throw ValidationError("rating " + r.str() + " outside [0,1]");
    }
    Value v;
    v.has_rating_ = true;
    v.rating_ = r;
    return v;
}

const Rational& Value::get() const {
    if (!has_rating_) {
        throw PreconditionError("no-opinion value has no rating");
    }
    return rating_;
}

EvaluationProfile::EvaluationProfile(std::vector<Value> values)
    : values_(std::move(values)) {
    for (int c = 0; c < size(); ++c) {
        if (values_[c].has_rating()) voters_.push_back(c);
    }
    if (voters_.empty()) {
        throw ValidationError("empty voter set: at least one customer must express an evaluation");
    }
}

RatedInstance::RatedInstance(CustomersNetwork network, EvaluationProfile profile)
    : network_(std::move(network)), profile_(std::move(profile)) {
    if (profile_.size() != network_.size()) {
        throw ValidationError("evaluation profile size " + std::to_string(profile_.size()) +
                              " does not match network size " + std::to_string(network_.size()));
    }
    for (int c = 0; c < network_.size(); ++c) {
        bool sees_voter = false;
        for (int k : network_.neighborhood(c)) {
            if (profile_.is_voter(k)) {
                sees_voter = true;
                break;
            }
        }
        if (!sees_voter) {
            throw ValidationError("customer " + std::to_string(c) + " sees no voter");
        }
    }
}

} // namespace netrate
