#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netrate/rational.hpp"

namespace netrate {

/// Undirected network over customers 0..n-1. Neighborhoods are stored
/// with the reflexive closure: c is always a member of its own
/// neighborhood, and deg(c) counts it. Input edge lists need not
/// contain self-loops; they are added on construction.
class CustomersNetwork {
public:
    CustomersNetwork(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }

    /// N(c), sorted ascending, always containing c. Throws std::out_of_range.
    std::span<const int> neighborhood(int c) const;

    /// |N(c)|, self included.
    int degree(int c) const { return static_cast<int>(neighborhood(c).size()); }

    bool adjacent(int a, int b) const;

    /// Edges with a < b (self-loops omitted); used by serialization.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    std::vector<std::vector<int>> adj_;
};

CustomersNetwork make_star(int arms);     // node 0 is the center, n = arms + 1
CustomersNetwork make_path(int n);        // 0-1-...-(n-1)
CustomersNetwork make_cycle(int n);       // path closed into a ring (n >= 3 adds the closing edge)
CustomersNetwork make_complete(int n);

/// G(n,p) with exact rational edge probability, deterministic per seed.
CustomersNetwork make_gnp(int n, const Rational& p, std::uint64_t seed);

bool is_connected(const CustomersNetwork& net);

} // namespace netrate
