#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

namespace qwalk {

// Probability mass over measured bitstrings, keyed "v x_{n-1} ... x_0"
// (qubit n leftmost). std::map keeps iteration sorted, which keeps every
// exported artifact byte-stable.
using Distribution = std::map<std::string, double>;
using Counts = std::map<std::string, long long>;

namespace detail {
inline std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}
}  // namespace detail

inline std::string distribution_to_csv(const Distribution& dist) {
    std::string out = "bitstring,probability\n";
    for (const auto& [bits, p] : dist) {
        out += bits;
        out += ',';
        out += detail::format_probability(p);
        out += '\n';
    }
    return out;
}

inline std::string counts_to_csv(const Counts& counts) {
    std::string out = "bitstring,count\n";
    for (const auto& [bits, c] : counts) {
        out += bits;
        out += ',';
        out += std::to_string(c);
        out += '\n';
    }
    return out;
}

inline nlohmann::json distribution_to_json(const Distribution& dist) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [bits, p] : dist) j[bits] = p;
    return j;
}

inline nlohmann::json counts_to_json(const Counts& counts) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [bits, c] : counts) j[bits] = c;
    return j;
}

}  // namespace qwalk
