#include "netrate/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "netrate/errors.hpp"

namespace netrate {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    return in;
}

std::string at_line(const std::string& path, int line) {
    return path + ":" + std::to_string(line) + ": ";
}

/// "label,value" rows; '#' comments and blank lines are skipped.
std::vector<std::pair<std::string, std::string>> read_csv_rows(const std::string& path) {
    auto in = open_or_throw(path);
    std::vector<std::pair<std::string, std::string>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        auto comma = body.find(',');
        if (comma == std::string::npos) {
            throw ParseError(at_line(path, lineno) + "expected 'label,value'");
        }
        std::string label = trim(body.substr(0, comma));
        std::string value = trim(body.substr(comma + 1));
        if (label.empty() || value.empty()) {
            throw ParseError(at_line(path, lineno) + "expected 'label,value'");
        }
        rows.emplace_back(std::move(label), std::move(value));
    }
    return rows;
}

} // namespace

LabeledInstance load_instance(const std::string& network_path, const std::string& eval_path) {
    // The evaluation file defines the customer set and the index order.
    std::vector<std::string> labels;
    std::map<std::string, int> index_of;
    std::vector<Value> values;
    {
        auto in = open_or_throw(eval_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string body = trim(strip_comment(line));
            if (body.empty()) continue;
            auto comma = body.find(',');
            if (comma == std::string::npos) {
                throw ParseError(at_line(eval_path, lineno) + "expected 'label,value'");
            }
            std::string label = trim(body.substr(0, comma));
            std::string text = trim(body.substr(comma + 1));
            if (label.empty() || text.empty()) {
                throw ParseError(at_line(eval_path, lineno) + "expected 'label,value'");
            }
            if (index_of.count(label)) {
                throw ParseError(at_line(eval_path, lineno) + "duplicate customer label '" + label + "'");
            }
            index_of[label] = static_cast<int>(labels.size());
            labels.push_back(label);
            if (text == "*") {
                values.push_back(Value::no_opinion());
            } else {
                Rational r;
                try {
                    r = Rational::parse(text);
                } catch (const ParseError& e) {
                    throw ParseError(at_line(eval_path, lineno) + e.what());
                }
                if (r.sign() < 0 || r > Rational::one()) {
                    throw ParseError(at_line(eval_path, lineno) + "value " + text +
                                     " outside [0,1]");
                }
                values.push_back(Value::rating(r));
            }
        }
    }
    if (labels.empty()) {
        throw ParseError(eval_path + ": no customers defined");
    }

    std::vector<std::pair<int, int>> edges;
    {
        auto in = open_or_throw(network_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string body = trim(strip_comment(line));
            if (body.empty()) continue;
            std::istringstream tokens(body);
            std::string a, b, extra;
            if (!(tokens >> a >> b) || (tokens >> extra)) {
                throw ParseError(at_line(network_path, lineno) + "expected 'labelA labelB'");
            }
            for (const auto& label : {a, b}) {
                if (!index_of.count(label)) {
                    throw ParseError(at_line(network_path, lineno) + "unknown customer label '" +
                                     label + "'");
                }
            }
            edges.emplace_back(index_of[a], index_of[b]);
        }
    }

    CustomersNetwork net(static_cast<int>(labels.size()), edges);
    EvaluationProfile profile{values}; // throws on empty voter set

    // Pre-check visibility with labels so the error names the customer
    // the way the input files do.
    for (int c = 0; c < net.size(); ++c) {
        bool sees_voter = false;
        for (int k : net.neighborhood(c)) {
            if (profile.is_voter(k)) {
                sees_voter = true;
                break;
            }
        }
        if (!sees_voter) {
            throw ValidationError("customer " + labels[c] + " sees no voter");
        }
    }
    return LabeledInstance{RatedInstance(std::move(net), std::move(profile)), std::move(labels)};
}

Strategy load_strategy(const std::string& path, const std::vector<std::string>& labels) {
    std::map<std::string, int> index_of;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) index_of[labels[i]] = i;

    std::vector<Rational> bribes(labels.size());
    std::vector<char> assigned(labels.size(), 0);
    auto rows = read_csv_rows(path);
    int row_no = 0;
    for (const auto& [label, text] : rows) {
        ++row_no;
        auto it = index_of.find(label);
        if (it == index_of.end()) {
            throw ParseError(path + ": unknown customer label '" + label + "'");
        }
        if (assigned[it->second]) {
            throw ParseError(path + ": duplicate customer label '" + label + "'");
        }
        if (text == "*") {
            throw ParseError(path + ": strategy amounts cannot be '*'");
        }
        Rational r;
        try {
            r = Rational::parse(text);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
        if (r.sign() < 0 || r > Rational::one()) {
            throw ParseError(path + ": amount " + text + " outside [0,1]");
        }
        bribes[it->second] = r;
        assigned[it->second] = 1;
    }
    return Strategy(std::move(bribes));
}

namespace {

std::ofstream open_out_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write file '" + path + "'");
    }
    return out;
}

} // namespace

void save_network(const CustomersNetwork& net, const std::vector<std::string>& labels,
                  const std::string& path) {
    auto out = open_out_or_throw(path);
    for (auto [a, b] : net.edges()) {
        out << labels[a] << " " << labels[b] << "\n";
    }
}

void save_evaluation(const EvaluationProfile& profile, const std::vector<std::string>& labels,
                     const std::string& path) {
    auto out = open_out_or_throw(path);
    for (int c = 0; c < profile.size(); ++c) {
        out << labels[c] << ","
            << (profile.is_voter(c) ? profile[c].get().str() : std::string("*")) << "\n";
    }
}

void save_strategy(const Strategy& sigma, const std::vector<std::string>& labels,
                   const std::string& path) {
    auto out = open_out_or_throw(path);
    for (int c : sigma.bribed()) {
        out << labels[c] << "," << sigma[c].str() << "\n";
    }
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "c" + std::to_string(i);
    return labels;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    char buffer[4096];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001B3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + hex;
}

} // namespace netrate
