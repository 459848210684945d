#pragma once

#include <json.hpp>

#include "sum_of_cycles.hpp"

namespace cyclediv {

// JSON form: {"cycles": [[length, multiplicity], ...]} with ascending lengths.

inline void to_json(nlohmann::json& j, const SumOfCycles& v) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& [len, mult] : v.terms())
        cycles.push_back(nlohmann::json::array({len, mult}));
    j = nlohmann::json{{"cycles", std::move(cycles)}};
}

inline void from_json(const nlohmann::json& j, SumOfCycles& v) {
    std::vector<SumOfCycles::Term> raw;
    for (const auto& e : j.at("cycles"))
        raw.emplace_back(e.at(0).get<u64>(), e.at(1).get<u64>());
    v = SumOfCycles::from_terms(raw);
}

} // namespace cyclediv
