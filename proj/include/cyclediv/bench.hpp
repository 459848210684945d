#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "factorization.hpp"
#include "solve.hpp"

namespace cyclediv::bench {

struct Row {
    std::string family;
    u64 param = 0;
    std::string solver;
    std::optional<double> wall_ms; // empty when skipped by guard
    BigInt candidates{0};          // partitions the solver's enumeration examines
    std::optional<BigInt> count;
};

namespace detail_bench {

inline std::vector<u64> one_to(u64 n) {
    std::vector<u64> v(n);
    for (u64 i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

inline Instance family_instance(const std::string& family, u64 param) {
    if (family == "paper-C6") {
        if (param == 0) throw std::domain_error("family parameter must be positive");
        return Instance(SumOfCycles::cycle(6),
                        SumOfCycles::cycle(6, detail::checked_mul(3, param)) +
                            SumOfCycles::cycle(12, detail::checked_mul(8, param)));
    }
    if (family == "primorial") {
        u64 k = 0;
        if (!is_primorial(param, k))
            throw std::domain_error("primorial family parameter must be a primorial");
        return Instance(SumOfCycles::cycle(param), SumOfCycles::cycle(param, param));
    }
    if (family == "prime-antichain") {
        if (param == 0) throw std::domain_error("family parameter must be positive");
        SumOfCycles a = SumOfCycles::cycle(2) + SumOfCycles::cycle(3);
        return Instance(a, a * (SumOfCycles::cycle(1, param) + SumOfCycles::cycle(6)));
    }
    throw std::domain_error("unknown bench family: " + family);
}

} // namespace detail_bench

inline constexpr u64 kBruteGuardSize = 70;          // skip plain brute force beyond this n
inline constexpr u64 kCandidateGuard = 2000000;     // skip support enumeration beyond this
inline constexpr u64 kPrincipalGuard = 200000;      // extensions cost more than checks

/// Benchmark one instance with all four solvers.  Candidate counts are exact
/// and always reported (computed by DP, no enumeration); wall time and the
/// solution count are reported only for solver runs the guards allow.
inline std::vector<Row> bench_instance(const std::string& family, u64 param,
                                       const Instance& inst) {
    std::vector<Row> rows;
    bool integral = inst.b.size() % inst.a.size() == 0;
    u64 n = integral ? inst.b.size() / inst.a.size() : 0;
    auto lab = instance_support(inst);

    { // brute
        Row r{family, param, "brute", std::nullopt, 0, std::nullopt};
        if (integral) r.candidates = count_partitions(n, detail_bench::one_to(n));
        if (integral && n <= kBruteGuardSize) {
            SolutionSet s;
            r.wall_ms = detail_bench::time_ms([&] { s = brute_force_solutions(inst); });
            r.count = s.count;
        }
        rows.push_back(std::move(r));
    }
    { // support
        Row r{family, param, "support", std::nullopt, 0, std::nullopt};
        if (integral) r.candidates = count_partitions(n, lab);
        if (integral && r.candidates <= kCandidateGuard) {
            SolutionSet s;
            r.wall_ms = detail_bench::time_ms([&] { s = support_brute_force_solutions(inst); });
            r.count = s.count;
        }
        rows.push_back(std::move(r));
    }
    { // principal
        Row r{family, param, "principal", std::nullopt, 0, std::nullopt};
        if (integral) {
            auto lp = principal_support(inst);
            BigInt cands = 1; // the empty candidate
            for (u64 m = 1; m <= n && !lp.empty(); ++m)
                cands += count_partitions(m, lp);
            r.candidates = cands;
        }
        if (integral && r.candidates <= kPrincipalGuard) {
            SolutionSet s;
            r.wall_ms =
                detail_bench::time_ms([&] { s = principal_brute_force_solutions(inst); });
            r.count = s.count;
        }
        rows.push_back(std::move(r));
    }
    { // decompose (counting solver)
        Row r{family, param, "decompose", std::nullopt, 0, std::nullopt};
        if (is_consistent(inst)) {
            for (const auto& t : decompose(inst)) {
                Instance ti = t.instance();
                if (ti.b.size() % ti.a.size() != 0) continue;
                r.candidates += count_partitions(ti.b.size() / ti.a.size(),
                                                 instance_support(ti));
            }
        }
        BigInt c;
        r.wall_ms = detail_bench::time_ms([&] { c = count_solutions(inst); });
        r.count = c;
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Run a named family over an inclusive parameter range.  The primorial
/// family visits exactly the primorials inside the range; the others visit
/// every integer parameter.  An empty range yields no rows.
inline std::vector<Row> run(const std::string& family, u64 from, u64 to) {
    std::vector<u64> params;
    if (family == "primorial") {
        for (u64 k = 1;; ++k) {
            u64 p;
            try {
                p = primorial(k);
            } catch (const capacity_error&) {
                break;
            }
            if (p > to) break;
            if (p >= from) params.push_back(p);
        }
    } else {
        for (u64 m = std::max<u64>(from, 1); m <= to && m != 0; ++m) params.push_back(m);
    }
    std::vector<Row> rows;
    for (u64 p : params) {
        Instance inst = detail_bench::family_instance(family, p);
        auto batch = bench_instance(family, p, inst);
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    return rows;
}

inline std::string csv_header() { return "family,param,solver,wall_ms,candidates,count"; }

inline std::string to_csv(const Row& r) {
    std::string line = r.family + "," + std::to_string(r.param) + "," + r.solver + ",";
    if (r.wall_ms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *r.wall_ms);
        line += buf;
    }
    line += "," + r.candidates.str() + ",";
    if (r.count) line += r.count->str();
    return line;
}

} // namespace cyclediv::bench
