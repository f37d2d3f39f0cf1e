#pragma once

#include <vector>

#include "netrate/network.hpp"
#include "netrate/rational.hpp"

namespace netrate {

/// A customer's evaluation: either a rating in [0,1] or the
/// distinguished no-opinion token (written "*" in files).
class Value {
public:
    static Value rating(const Rational& r);
    static Value no_opinion() { return Value(); }

    bool has_rating() const { return has_rating_; }
    const Rational& get() const;

    friend bool operator==(const Value& a, const Value& b) {
        if (a.has_rating_ != b.has_rating_) return false;
        return !a.has_rating_ || a.rating_ == b.rating_;
    }

private:
    Value() = default;
    bool has_rating_ = false;
    Rational rating_;
};

/// One evaluation per customer. The voter set (customers with an
/// opinion) is computed at construction and must be non-empty.
class EvaluationProfile {
public:
    explicit EvaluationProfile(std::vector<Value> values);

    int size() const { return static_cast<int>(values_.size()); }
    const Value& operator[](int c) const { return values_[c]; }
    bool is_voter(int c) const { return values_[c].has_rating(); }

    /// V, ascending.
    const std::vector<int>& voters() const { return voters_; }

private:
    std::vector<Value> values_;
    std::vector<int> voters_;
};

/// A network paired with a matching evaluation profile. Validated
/// eagerly: sizes agree and every customer sees at least one voter, so
/// downstream operations can assume both rating systems are defined.
class RatedInstance {
public:
    RatedInstance(CustomersNetwork network, EvaluationProfile profile);

    const CustomersNetwork& network() const { return network_; }
    const EvaluationProfile& profile() const { return profile_; }
    int size() const { return network_.size(); }

    bool all_vote() const { return static_cast<int>(profile_.voters().size()) == size(); }

private:
    CustomersNetwork network_;
    EvaluationProfile profile_;
};

} // namespace netrate
