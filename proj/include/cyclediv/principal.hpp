#pragma once

#include <optional>
#include <vector>

#include "solvers.hpp"

namespace cyclediv {

/// The principal support: admissible solution lengths that do not already
/// occur in b.  A solution restricted to these lengths determines the rest
/// of the solution uniquely, which is what the greedy extension exploits.
inline std::vector<u64> principal_support(const Instance& inst) {
    std::vector<u64> out;
    for (u64 x : instance_support(inst))
        if (inst.b.multiplicity(x) == 0) out.push_back(x);
    return out;
}

/// Given a candidate restriction x of a solution to the principal support,
/// recover the unique full solution x + y extending it, if one exists.
/// Greedy: subtract a*x from b, then repeatedly peel a * C_l for the
/// smallest remaining length l; any misstep proves no extension exists.
inline std::optional<SumOfCycles> extend_to_full_solution(const Instance& inst,
                                                          const SumOfCycles& x) {
    {
        auto lp = principal_support(inst);
        for (const auto& [len, mult] : x.terms()) {
            (void)mult;
            if (!std::binary_search(lp.begin(), lp.end(), len))
                throw std::invalid_argument(
                    "candidate uses a length outside the principal support");
        }
    }
    SumOfCycles product = inst.a * x;
    if (!is_subgraph(product, inst.b)) return std::nullopt;
    SumOfCycles residue = inst.b - product;
    SumOfCycles y;
    while (!residue.empty()) {
        u64 l = residue.terms().front().first;
        SumOfCycles step = inst.a * SumOfCycles::cycle(l);
        if (!is_subgraph(step, residue)) return std::nullopt;
        residue = residue - step;
        y = y + SumOfCycles::cycle(l);
    }
    return y;
}

/// Enumerate candidate restrictions over the principal support (all
/// partitions of every m <= n, plus the empty candidate) and keep the ones
/// that extend.  Every solution splits uniquely this way, so no
/// deduplication is needed.
inline SolutionSet principal_brute_force_solutions(const Instance& inst) {
    if (inst.b.size() % inst.a.size() != 0)
        return detail::set_from({}, NoSolutionReason::size_not_integral);
    u64 n = inst.b.size() / inst.a.size();
    auto lp = principal_support(inst);

    std::vector<SumOfCycles> sols;
    if (auto y = extend_to_full_solution(inst, SumOfCycles{}))
        sols.push_back(*y);
    if (!lp.empty()) {
        for (u64 m = 1; m <= n; ++m) {
            PartitionStream stream(m, lp);
            while (stream.next()) {
                SumOfCycles x = SumOfCycles::from_parts(stream.current());
                if (auto y = extend_to_full_solution(inst, x))
                    sols.push_back(x + *y);
            }
        }
    }
    return detail::set_from(std::move(sols));
}

/// Fast path for basic instances whose divisor support consists of 1 and
/// primes: the principal support collapses to at most {1}, so the principal
/// enumeration is linear in n.  Returns nothing when not applicable.
inline std::optional<SolutionSet> primes_fast_path(const Instance& inst) {
    for (u64 a : inst.a.support())
        if (a != 1 && !is_prime(a)) return std::nullopt;
    if (!is_basic(inst)) return std::nullopt;
    return principal_brute_force_solutions(inst);
}

/// Fast path for multiplicity-free b (every cycle length occurs once): after
/// decomposition each member is solvable only by C_1 and only when its two
/// halves coincide, so the whole answer is a single recombined solution or
/// nothing.  Returns nothing when some multiplicity exceeds 1.
inline std::optional<SolutionSet> multiplicity_free_fast_path(const Instance& inst) {
    for (const auto& [len, mult] : inst.b.terms()) {
        (void)len;
        if (mult != 1) return std::nullopt;
    }
    NoSolutionReason r = precheck(inst);
    if (r != NoSolutionReason::none) return detail::set_from({}, r);

    SumOfCycles x;
    for (const auto& t : decompose(inst)) {
        if (t.a != t.b) return detail::set_from({});
        x = x + SumOfCycles::cycle(t.scale);
    }
    return detail::set_from({std::move(x)});
}

} // namespace cyclediv
