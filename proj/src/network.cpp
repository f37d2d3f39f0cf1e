#include "netrate/network.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "netrate/errors.hpp"

namespace netrate {

CustomersNetwork::CustomersNetwork(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 1) {
        throw ValidationError("network needs at least one customer");
    }
    for (int c = 0; c < n_; ++c) {
        adj_[c].push_back(c);
    }
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) {
            throw ValidationError("edge endpoint out of range: (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
        }
        if (a != b) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

std::span<const int> CustomersNetwork::neighborhood(int c) const {
    if (c < 0 || c >= n_) {
        throw std::out_of_range("customer index " + std::to_string(c) + " out of range");
    }
    return adj_[c];
}

bool CustomersNetwork::adjacent(int a, int b) const {
    auto nb = neighborhood(a);
    if (b < 0 || b >= n_) {
        throw std::out_of_range("customer index " + std::to_string(b) + " out of range");
    }
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<int, int>> CustomersNetwork::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        for (int b : adj_[a]) {
            if (a < b) out.emplace_back(a, b);
        }
    }
    return out;
}

CustomersNetwork make_star(int arms) {
    if (arms < 0) throw ValidationError("star needs a non-negative arm count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= arms; ++i) edges.emplace_back(0, i);
    return CustomersNetwork(arms + 1, edges);
}

CustomersNetwork make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return CustomersNetwork(n, edges);
}

CustomersNetwork make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(n - 1, 0);
    return CustomersNetwork(n, edges);
}

CustomersNetwork make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return CustomersNetwork(n, edges);
}

CustomersNetwork make_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (p.sign() < 0 || p > Rational::one()) {
        throw ValidationError("edge probability must lie in [0,1]");
    }
    std::mt19937_64 rng(seed);
    // Exact Bernoulli(p): draw 64 bits r and include the edge iff r/2^64 < p,
    // i.e. r * den(p) < num(p) * 2^64, evaluated in exact integer arithmetic.
    mpz_class two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    mpz_class num(p.raw().get_num()), den(p.raw().get_den());
    mpz_class threshold = num * two64;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::uint64_t r = rng();
            mpz_class mr;
            mpz_import(mr.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
            if (mr * den < threshold) edges.emplace_back(a, b);
        }
    }
    return CustomersNetwork(n, edges);
}

bool is_connected(const CustomersNetwork& net) {
    std::vector<char> seen(net.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int k : net.neighborhood(c)) {
            if (!seen[k]) {
                seen[k] = 1;
                stack.push_back(k);
            }
        }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

} // namespace netrate
