#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "partitions.hpp"

namespace cyclediv {

inline constexpr u64 kDefaultSolutionCap = 1000000;

/// Result of a solve: the full solution multiset is a set, listed in
/// canonical order (ascending by text) when materialized.  `count` is always
/// the exact number of solutions; `solutions` is empty and `truncated` set
/// when that number exceeds the enumeration cap.
struct SolutionSet {
    std::vector<SumOfCycles> solutions;
    BigInt count{0};
    bool truncated = false;
    NoSolutionReason reason = NoSolutionReason::none;
};

namespace detail {

inline void sort_canonical(std::vector<SumOfCycles>& xs) {
    std::vector<std::pair<std::string, SumOfCycles>> keyed;
    keyed.reserve(xs.size());
    for (auto& x : xs) keyed.emplace_back(to_string(x), std::move(x));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    xs.clear();
    for (auto& [k, v] : keyed) xs.push_back(std::move(v));
}

inline SolutionSet set_from(std::vector<SumOfCycles> sols,
                            NoSolutionReason reason = NoSolutionReason::none) {
    sort_canonical(sols);
    SolutionSet out;
    out.count = sols.size();
    out.solutions = std::move(sols);
    out.reason = reason;
    return out;
}

} // namespace detail

/// Reference solver: try every partition of n = |b|/|a| as a candidate X.
inline SolutionSet brute_force_solutions(const Instance& inst) {
    if (inst.b.size() % inst.a.size() != 0)
        return detail::set_from({}, NoSolutionReason::size_not_integral);
    u64 n = inst.b.size() / inst.a.size();
    std::vector<u64> all_parts(n);
    for (u64 i = 0; i < n; ++i) all_parts[i] = i + 1;
    std::vector<SumOfCycles> sols;
    PartitionStream stream(n, all_parts);
    while (stream.next()) {
        SumOfCycles x = SumOfCycles::from_parts(stream.current());
        if (inst.a * x == inst.b) sols.push_back(std::move(x));
    }
    return detail::set_from(std::move(sols));
}

/// Same output as the reference solver, enumerating only partitions whose
/// parts lie in the instance support.
inline SolutionSet support_brute_force_solutions(const Instance& inst) {
    if (inst.b.size() % inst.a.size() != 0)
        return detail::set_from({}, NoSolutionReason::size_not_integral);
    u64 n = inst.b.size() / inst.a.size();
    auto lab = instance_support(inst);
    if (lab.empty()) return detail::set_from({}, NoSolutionReason::empty_support);
    std::vector<SumOfCycles> sols;
    PartitionStream stream(n, lab);
    while (stream.next()) {
        SumOfCycles x = SumOfCycles::from_parts(stream.current());
        if (inst.a * x == inst.b) sols.push_back(std::move(x));
    }
    return detail::set_from(std::move(sols));
}

/// Split a compact, consistent, non-basic instance (a, b) into (a, b1) and
/// (a, b2) whose solution sets recombine by disjoint union: pick the
/// smallest length b in the support of b violating basicness, the smallest
/// prime witness p, and put exactly the cycles whose lengths match b's
/// p-adic exponent into b1.
inline std::pair<Instance, Instance> perfect_split(const Instance& inst) {
    auto lab = instance_support(inst);
    if (lab.empty() || gcd_set(lab) != 1)
        throw std::invalid_argument("perfect_split requires a compact instance");
    if (!is_consistent(inst))
        throw std::invalid_argument("perfect_split requires a consistent instance");
    if (is_basic(inst))
        throw std::invalid_argument("perfect_split requires a non-basic instance");

    auto la = inst.a.support();
    u64 witness_b = 0, witness_p = 0;
    for (const auto& [b, mult] : inst.b.terms()) {
        (void)mult;
        for (const auto& [p, e] : factorize(b)) {
            u64 best = 0;
            for (u64 a : la) {
                u64 ea = 0, t = a;
                while (t % p == 0) { t /= p; ++ea; }
                best = std::max(best, ea);
            }
            if (e > best) { witness_b = b; witness_p = p; break; }
        }
        if (witness_b != 0) break;
    }

    u64 target_e = prime_exponent(witness_b, witness_p);
    std::vector<SumOfCycles::Term> part1;
    for (const auto& [len, mult] : inst.b.terms())
        if (prime_exponent(len, witness_p) == target_e) part1.emplace_back(len, mult);
    SumOfCycles b1 = SumOfCycles::from_terms(part1);
    SumOfCycles b2 = inst.b - b1;
    return {Instance(inst.a, b1), Instance(inst.a, std::move(b2))};
}

/// Strip the gcd d of the instance support: solutions of the reduced
/// instance (contract(a, d), cycle_length_divide(b, d)) map onto the
/// original's by multiplying lengths back by d.  Returns the reduced
/// instance and d.
inline std::pair<Instance, u64> reduce_instance(const Instance& inst) {
    if (!is_consistent(inst))
        throw std::invalid_argument("reduce_instance requires a consistent instance");
    auto lab = instance_support(inst);
    if (lab.empty()) throw std::domain_error("empty instance support");
    u64 d = gcd_set(lab);
    return {Instance(contract(inst.a, d), cycle_length_divide(inst.b, d)), d};
}

/// One member of a decomposition: solving (a, b) and multiplying the
/// solutions' cycle lengths by `scale` contributes one independent summand
/// of the original solution set.
struct DecompositionTriple {
    SumOfCycles a;
    SumOfCycles b;
    u64 scale = 1;

    Instance instance() const { return Instance(a, b); }

    friend bool operator==(const DecompositionTriple&, const DecompositionTriple&) = default;
};

/// Decompose a consistent instance into basic, compact, consistent triples:
/// reduce first, then repeatedly split any non-basic member and reduce both
/// halves (scales multiply along the way).  Triples are returned sorted by
/// descending |b| with canonical text as tie break.  When a split half is
/// inconsistent the instance provably has no solution; the dead half is
/// returned as the single (non-conforming) triple.
inline std::vector<DecompositionTriple> decompose(const Instance& inst) {
    if (!is_consistent(inst))
        throw std::invalid_argument("decompose requires a consistent instance");

    auto reduced_triple = [](const Instance& i, u64 outer_scale) {
        auto [r, d] = reduce_instance(i);
        return DecompositionTriple{std::move(r.a), std::move(r.b),
                                   detail::checked_mul(outer_scale, d)};
    };

    std::deque<DecompositionTriple> queue{reduced_triple(inst, 1)};
    std::vector<DecompositionTriple> done;
    while (!queue.empty()) {
        DecompositionTriple t = std::move(queue.front());
        queue.pop_front();
        Instance ti = t.instance();
        if (is_basic(ti)) {
            done.push_back(std::move(t));
            continue;
        }
        auto [left, right] = perfect_split(ti);
        // A split half can come out inconsistent when the instance has no
        // solution at all (any solution of the whole would restrict to one
        // of the half, so none exists).  Hand the dead half back as the sole
        // triple: it is a certificate on which every solver reports zero.
        if (!is_consistent(left) || !is_consistent(right)) {
            Instance& dead = !is_consistent(left) ? left : right;
            return {DecompositionTriple{dead.a, dead.b, t.scale}};
        }
        queue.push_back(reduced_triple(left, t.scale));
        queue.push_back(reduced_triple(right, t.scale));
    }

    std::sort(done.begin(), done.end(),
              [](const DecompositionTriple& l, const DecompositionTriple& r) {
                  u64 ls = l.b.size(), rs = r.b.size();
                  if (ls != rs) return ls > rs;
                  auto lk = std::make_tuple(to_string(l.b), to_string(l.a), l.scale);
                  auto rk = std::make_tuple(to_string(r.b), to_string(r.a), r.scale);
                  return lk < rk;
              });
    return done;
}

namespace detail {

// Exact solution count of one instance without enumerating candidates.
// Each admissible length x contributes a fixed integer vector of
// multiplicities over the support of b (gcd-weighted by a's terms); counting
// solutions is counting the non-negative integer combinations of those
// vectors that hit b's multiplicity vector, done by memoized recursion.
inline BigInt count_by_multiplicity_vectors(const Instance& inst) {
    if (inst.b.size() % inst.a.size() != 0) return 0;
    auto lab = instance_support(inst);
    if (lab.empty()) return 0;

    const auto& bterms = inst.b.terms();
    std::size_t dims = bterms.size();
    std::vector<u64> target(dims);
    std::map<u64, std::size_t> dim_of;
    for (std::size_t j = 0; j < dims; ++j) {
        target[j] = bterms[j].second;
        dim_of[bterms[j].first] = j;
    }

    // pattern[i]: contribution of one copy of the length lab[i] cycle
    std::vector<std::vector<u64>> pattern(lab.size(), std::vector<u64>(dims, 0));
    for (std::size_t i = 0; i < lab.size(); ++i) {
        for (const auto& [a, ma] : inst.a.terms()) {
            u64 g = std::gcd(a, lab[i]);
            u64 l = checked_mul(a / g, lab[i]);
            auto it = dim_of.find(l);
            if (it == dim_of.end()) return 0; // support lied; cannot happen
            pattern[i][it->second] =
                checked_add(pattern[i][it->second], checked_mul(g, ma));
        }
    }
    // larger lengths first: their patterns are heavier, so branching shrinks
    std::reverse(pattern.begin(), pattern.end());

    // coverage[i][j]: some pattern at index >= i touches dimension j
    std::vector<std::vector<char>> coverage(lab.size() + 1, std::vector<char>(dims, 0));
    for (std::size_t i = lab.size(); i-- > 0;) {
        coverage[i] = coverage[i + 1];
        for (std::size_t j = 0; j < dims; ++j)
            if (pattern[i][j] > 0) coverage[i][j] = 1;
    }

    std::vector<std::map<std::vector<u64>, BigInt>> memo(lab.size());
    struct Rec {
        const std::vector<std::vector<u64>>& pattern;
        const std::vector<std::vector<char>>& coverage;
        std::vector<std::map<std::vector<u64>, BigInt>>& memo;
        std::size_t count;

        BigInt run(std::size_t idx, std::vector<u64>& residual) {
            if (idx == count) {
                for (u64 r : residual)
                    if (r != 0) return 0;
                return 1;
            }
            for (std::size_t j = 0; j < residual.size(); ++j)
                if (residual[j] > 0 && !coverage[idx][j]) return 0;
            auto it = memo[idx].find(residual);
            if (it != memo[idx].end()) return it->second;

            const auto& w = pattern[idx];
            u64 kmax = UINT64_MAX;
            for (std::size_t j = 0; j < residual.size(); ++j)
                if (w[j] > 0) kmax = std::min(kmax, residual[j] / w[j]);
            BigInt total = 0;
            std::vector<u64> next(residual);
            for (u64 k = 0; k <= kmax; ++k) {
                total += run(idx + 1, next);
                if (k < kmax)
                    for (std::size_t j = 0; j < next.size(); ++j) next[j] -= w[j];
            }
            memo[idx][residual] = total;
            return total;
        }
    } rec{pattern, coverage, memo, lab.size()};

    std::vector<u64> residual(target);
    return rec.run(0, residual);
}

} // namespace detail

/// Exact number of solutions: zero on any failed precheck, otherwise the
/// product of the per-triple counts over the decomposition.
inline BigInt count_solutions(const Instance& inst) {
    if (precheck(inst) != NoSolutionReason::none) return 0;
    BigInt total = 1;
    for (const auto& t : decompose(inst)) {
        total *= detail::count_by_multiplicity_vectors(t.instance());
        if (total == 0) break;
    }
    return total;
}

/// Materialize the full solution set via the decomposition, recombining the
/// per-triple solutions.  If the exact count exceeds `cap`, no solutions are
/// materialized and the truncation flag is set instead.
inline SolutionSet enumerate_solutions(const Instance& inst, u64 cap = kDefaultSolutionCap) {
    NoSolutionReason r = precheck(inst);
    if (r != NoSolutionReason::none) return detail::set_from({}, r);

    auto triples = decompose(inst);
    BigInt total = 1;
    for (const auto& t : triples) {
        total *= detail::count_by_multiplicity_vectors(t.instance());
        if (total == 0) return detail::set_from({});
    }
    if (total > cap) {
        SolutionSet out;
        out.count = total;
        out.truncated = true;
        return out;
    }

    std::vector<SumOfCycles> acc{SumOfCycles{}};
    for (const auto& t : triples) {
        SolutionSet part = support_brute_force_solutions(t.instance());
        std::vector<SumOfCycles> next;
        next.reserve(acc.size() * part.solutions.size());
        for (const auto& base : acc)
            for (const auto& sol : part.solutions)
                next.push_back(base + cycle_length_multiply(sol, t.scale));
        acc = std::move(next);
    }
    if (BigInt(acc.size()) != total)
        throw std::logic_error("decomposition count mismatch");
    detail::sort_canonical(acc);
    for (std::size_t i = 1; i < acc.size(); ++i)
        if (acc[i - 1] == acc[i])
            throw std::logic_error("duplicate solution after recombination");
    SolutionSet out;
    out.count = total;
    out.solutions = std::move(acc);
    return out;
}

/// Does any X with a * X = b exist?  Short-circuits on the first solution
/// found in each decomposition member.
inline bool divides(const Instance& inst) {
    if (precheck(inst) != NoSolutionReason::none) return false;
    for (const auto& t : decompose(inst)) {
        Instance ti = t.instance();
        if (ti.b.size() % ti.a.size() != 0) return false;
        u64 n = ti.b.size() / ti.a.size();
        auto lab = instance_support(ti);
        if (lab.empty()) return false;
        bool found = false;
        PartitionStream stream(n, lab);
        while (stream.next()) {
            if (ti.a * SumOfCycles::from_parts(stream.current()) == ti.b) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

inline bool divides(const SumOfCycles& a, const SumOfCycles& b) {
    return divides(Instance(a, b));
}

} // namespace cyclediv
