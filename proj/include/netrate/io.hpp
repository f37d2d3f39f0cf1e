#pragma once

#include <string>
#include <vector>

#include "netrate/evaluation.hpp"
#include "netrate/strategy.hpp"

namespace netrate {

/// An instance together with the external customer labels; indices are
/// assigned by order of appearance in the evaluation file.
struct LabeledInstance {
    RatedInstance instance;
    std::vector<std::string> labels;
};

/// Evaluation file: CSV lines "label,value" where value is a decimal, a
/// fraction p/q, or "*" (no opinion). Network file: whitespace-separated
/// edge list "A B", one edge per line, '#' starts a comment; every label
/// must appear in the evaluation file. Parse errors carry file:line.
LabeledInstance load_instance(const std::string& network_path, const std::string& eval_path);

/// Strategy file: CSV "label,amount"; omitted customers get 0.
Strategy load_strategy(const std::string& path, const std::vector<std::string>& labels);

void save_network(const CustomersNetwork& net, const std::vector<std::string>& labels,
                  const std::string& path);
void save_evaluation(const EvaluationProfile& profile, const std::vector<std::string>& labels,
                     const std::string& path);
void save_strategy(const Strategy& sigma, const std::vector<std::string>& labels,
                   const std::string& path);

std::vector<std::string> default_labels(int n); // "c0", "c1", ...

/// FNV-1a 64-bit digest of the file bytes, "fnv1a64:<hex>"; used to make
/// experiment records self-identifying.
std::string file_digest(const std::string& path);

} // namespace netrate
