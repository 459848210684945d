#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <cyclediv/cyclediv.hpp>

namespace testutil {

using cyclediv::SumOfCycles;
using cyclediv::u64;

// Product oracle that knows nothing about gcd/lcm: build the direct product
// of the two functional digraphs vertex by vertex and read the cycle lengths
// off by walking.
inline SumOfCycles digraph_product_oracle(const SumOfCycles& a, const SumOfCycles& x) {
    std::map<u64, u64> counts;
    for (const auto& [la, ma] : a.terms()) {
        for (const auto& [lx, mx] : x.terms()) {
            // one copy of C_la times one copy of C_lx, then scaled by ma*mx
            std::vector<char> visited(static_cast<std::size_t>(la * lx), 0);
            for (u64 i = 0; i < la; ++i) {
                for (u64 j = 0; j < lx; ++j) {
                    if (visited[i * lx + j]) continue;
                    u64 ci = i, cj = j, len = 0;
                    do {
                        visited[ci * lx + cj] = 1;
                        ci = (ci + 1) % la;
                        cj = (cj + 1) % lx;
                        ++len;
                    } while (ci != i || cj != j);
                    counts[len] += ma * mx;
                }
            }
        }
    }
    std::vector<SumOfCycles::Term> terms(counts.begin(), counts.end());
    return SumOfCycles::from_terms(terms);
}

inline std::vector<u64> one_to(u64 n) {
    std::vector<u64> v(n);
    for (u64 i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

inline std::vector<SumOfCycles> all_values_of_size(u64 n) {
    std::vector<SumOfCycles> out;
    cyclediv::PartitionStream stream(n, one_to(n));
    while (stream.next()) out.push_back(SumOfCycles::from_parts(stream.current()));
    return out;
}

inline std::vector<SumOfCycles> all_values_up_to(u64 n) {
    std::vector<SumOfCycles> out;
    for (u64 s = 1; s <= n; ++s) {
        auto batch = all_values_of_size(s);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

inline SumOfCycles random_value(std::mt19937_64& rng, u64 max_size, u64 max_len = 0) {
    u64 size = std::uniform_int_distribution<u64>(1, max_size)(rng);
    std::vector<u64> parts;
    u64 rest = size;
    while (rest > 0) {
        u64 hi = max_len ? std::min(rest, max_len) : rest;
        u64 p = std::uniform_int_distribution<u64>(1, hi)(rng);
        parts.push_back(p);
        rest -= p;
    }
    return SumOfCycles::from_parts(parts);
}

inline std::set<std::string> texts(const std::vector<SumOfCycles>& xs) {
    std::set<std::string> out;
    for (const auto& x : xs) out.insert(cyclediv::to_string(x));
    return out;
}

inline SumOfCycles soc(const std::string& text) { return cyclediv::parse_sum_of_cycles(text); }

inline cyclediv::Instance inst(const std::string& a, const std::string& b) {
    return cyclediv::Instance(soc(a), soc(b));
}

} // namespace testutil
