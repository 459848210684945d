#pragma once

#include "principal.hpp"
#include "solvers.hpp"

namespace cyclediv {

enum class SolverKind { automatic, brute, support, principal, decompose };

struct SolveOptions {
    SolverKind solver = SolverKind::automatic;
    u64 cap = kDefaultSolutionCap;
    bool fast_paths = true;
};

namespace detail {

inline void apply_cap(SolutionSet& s, u64 cap) {
    if (s.count > cap) {
        s.solutions.clear();
        s.truncated = true;
    }
}

} // namespace detail

/// Solve a division instance with the requested strategy.  The automatic
/// strategy tries the structural fast paths first (multiplicity-free b, then
/// a unit length in b, then prime divisor supports) and falls back to the
/// decomposition solver.
inline SolutionSet solve(const Instance& inst, const SolveOptions& opts = {}) {
    switch (opts.solver) {
        case SolverKind::brute: {
            SolutionSet s = brute_force_solutions(inst);
            detail::apply_cap(s, opts.cap);
            return s;
        }
        case SolverKind::support: {
            SolutionSet s = support_brute_force_solutions(inst);
            detail::apply_cap(s, opts.cap);
            return s;
        }
        case SolverKind::principal: {
            SolutionSet s = principal_brute_force_solutions(inst);
            detail::apply_cap(s, opts.cap);
            return s;
        }
        case SolverKind::decompose:
            return enumerate_solutions(inst, opts.cap);
        case SolverKind::automatic:
            break;
    }

    if (opts.fast_paths) {
        if (auto s = multiplicity_free_fast_path(inst)) {
            detail::apply_cap(*s, opts.cap);
            return *s;
        }
        if (inst.b.multiplicity(1) > 0 && is_consistent(inst)) {
            // principal support is empty here, so this costs one extension
            SolutionSet s = principal_brute_force_solutions(inst);
            detail::apply_cap(s, opts.cap);
            return s;
        }
        if (auto s = primes_fast_path(inst)) {
            detail::apply_cap(*s, opts.cap);
            return *s;
        }
    }
    return enumerate_solutions(inst, opts.cap);
}

} // namespace cyclediv
