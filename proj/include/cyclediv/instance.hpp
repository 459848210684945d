#pragma once

#include <string>
#include <vector>

#include "numtheory.hpp"
#include "sum_of_cycles.hpp"

namespace cyclediv {

/// A division problem: find every X with a * X = b.
struct Instance {
    SumOfCycles a;
    SumOfCycles b;

    Instance(SumOfCycles a_, SumOfCycles b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.empty() || b.empty())
            throw std::domain_error("instance parts must be non-empty");
    }

    u64 size() const { return detail::checked_add(a.size(), b.size()); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// The instance support: all x <= |b|/|a| such that lcm(l, x) lies in the
/// support of b for every l in the support of a.  Solutions only ever use
/// these lengths.
inline std::vector<u64> instance_support(const Instance& inst) {
    u64 n = inst.b.size() / inst.a.size();
    auto la = inst.a.support();
    std::vector<u64> out;
    for (u64 x = 1; x <= n; ++x) {
        bool ok = true;
        for (u64 a : la) {
            u64 g = std::gcd(a, x);
            u64 l;
            if (__builtin_mul_overflow(a / g, x, &l) || inst.b.multiplicity(l) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

/// Consistent: the supports cover exactly, i.e. lcm-combining the support of
/// a with the instance support reproduces the support of b.  This is
/// necessary for solvability.
inline bool is_consistent(const Instance& inst) {
    auto la = inst.a.support();
    auto lab = instance_support(inst);
    std::vector<u64> combined;
    for (u64 a : la)
        for (u64 x : lab) {
            u64 g = std::gcd(a, x);
            u64 l;
            if (__builtin_mul_overflow(a / g, x, &l)) continue;
            combined.push_back(l);
        }
    std::sort(combined.begin(), combined.end());
    combined.erase(std::unique(combined.begin(), combined.end()), combined.end());
    return combined == inst.b.support();
}

/// Basic: every length in the support of b divides lcm of the support of a,
/// checked prime by prime so nothing overflows.
inline bool is_basic(const Instance& inst) {
    auto la = inst.a.support();
    for (const auto& [b, mult] : inst.b.terms()) {
        (void)mult;
        for (const auto& [p, e] : factorize(b)) {
            bool covered = false;
            for (u64 a : la) {
                u64 ea = 0, t = a;
                while (t % p == 0) { t /= p; ++ea; }
                if (ea >= e) { covered = true; break; }
            }
            if (!covered) return false;
        }
    }
    return true;
}

/// Compact: the instance support has gcd 1 (nothing left to strip off by a
/// reduction step).
inline bool is_compact(const Instance& inst) {
    auto lab = instance_support(inst);
    if (lab.empty()) throw std::domain_error("empty instance support");
    return gcd_set(lab) == 1;
}

/// Why an instance provably has no solution before any search is run.
enum class NoSolutionReason {
    none,              // no early exit applies
    size_not_integral, // |b| is not a multiple of |a|
    empty_support,     // no admissible solution length exists
    inconsistent,      // support equation fails
};

inline const char* to_string(NoSolutionReason r) {
    switch (r) {
        case NoSolutionReason::size_not_integral: return "size_not_integral";
        case NoSolutionReason::empty_support: return "empty_support";
        case NoSolutionReason::inconsistent: return "inconsistent";
        default: return "";
    }
}

/// Run the early no-solution checks in order.
inline NoSolutionReason precheck(const Instance& inst) {
    if (inst.b.size() % inst.a.size() != 0) return NoSolutionReason::size_not_integral;
    if (instance_support(inst).empty()) return NoSolutionReason::empty_support;
    if (!is_consistent(inst)) return NoSolutionReason::inconsistent;
    return NoSolutionReason::none;
}

} // namespace cyclediv
