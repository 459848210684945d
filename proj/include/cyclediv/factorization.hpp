#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "solvers.hpp"

namespace cyclediv {

/// Factorizations of n into non-decreasing integer factors >= 2 (n = 1 has
/// exactly the empty factorization).  Ascending lexicographic order.
inline std::vector<std::vector<u64>> multiplicative_partitions(u64 n) {
    if (n == 0) throw std::domain_error("multiplicative partitions of zero");
    std::vector<std::vector<u64>> out;
    std::vector<u64> cur;
    auto rec = [&](auto&& self, u64 rest, u64 min_factor) -> void {
        if (rest == 1) {
            out.push_back(cur);
            return;
        }
        for (u64 d : divisors(rest)) {
            if (d < min_factor || d < 2) continue;
            cur.push_back(d);
            self(self, rest / d, d);
            cur.pop_back();
        }
    };
    rec(rec, n, 2);
    return out;
}

/// Number of multiplicative partitions of n, without materializing them.
inline u64 multiplicative_partition_count(u64 n) {
    if (n == 0) throw std::domain_error("multiplicative partitions of zero");
    std::map<std::pair<u64, u64>, u64> memo;
    auto rec = [&](auto&& self, u64 rest, u64 min_factor) -> u64 {
        if (rest == 1) return 1;
        auto key = std::make_pair(rest, min_factor);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        u64 total = 0;
        for (u64 d : divisors(rest)) {
            if (d < min_factor || d < 2) continue;
            total = detail::checked_add(total, self(self, rest / d, d));
        }
        memo[key] = total;
        return total;
    };
    return rec(rec, n, 2);
}

namespace detail {

// Candidate factors of z with d vertices: partitions of d into parts each
// dividing some cycle length of z (a necessary condition on any factor).
inline std::vector<u64> factor_parts_pool(const SumOfCycles& z, u64 d) {
    std::vector<u64> pool;
    for (u64 x = 1; x <= d; ++x) {
        for (const auto& [len, mult] : z.terms()) {
            (void)mult;
            if (len % x == 0) { pool.push_back(x); break; }
        }
    }
    return pool;
}

} // namespace detail

/// A value is irreducible when it is not C_1 and cannot be written as a
/// product of two values both different from C_1.  Checked by trying every
/// candidate factor with d <= sqrt(|x|) vertices, d dividing |x|.
inline bool is_irreducible(const SumOfCycles& x) {
    if (x.empty()) throw std::domain_error("irreducibility of the empty value");
    if (x.is_one()) return false;
    u64 n = x.size();
    for (u64 d : divisors(n)) {
        if (d < 2 || d * d > n) continue;
        PartitionStream stream(d, detail::factor_parts_pool(x, d));
        while (stream.next()) {
            Instance cand(SumOfCycles::from_parts(stream.current()), x);
            if (divides(cand)) return false;
        }
    }
    return true;
}

/// All multisets of irreducible factors (each != C_1) whose product is x,
/// each multiset listed with factors ascending by canonical text, the list
/// itself in ascending lexicographic order.  Enumeration stops and sets the
/// truncation flag once `cap` multisets have been found.
struct FactorizationList {
    std::vector<std::vector<SumOfCycles>> factorizations;
    bool truncated = false;
};

inline FactorizationList enumerate_irreducible_factorizations(const SumOfCycles& x,
                                                              u64 cap = kDefaultSolutionCap) {
    if (x.empty() || x.is_one())
        throw std::domain_error("factorization needs a value other than C_1");

    FactorizationList out;
    std::map<SumOfCycles, bool> irr_cache;
    auto irreducible = [&](const SumOfCycles& v) {
        auto it = irr_cache.find(v);
        if (it != irr_cache.end()) return it->second;
        bool r = is_irreducible(v);
        irr_cache.emplace(v, r);
        return r;
    };

    std::vector<SumOfCycles> chain;
    // factors are chosen non-decreasing in canonical text order, so each
    // multiset is reached along exactly one chain; walking the candidates
    // smallest first keeps the canonically early chains when capped
    auto rec = [&](auto&& self, const SumOfCycles& z, const std::string& min_text) -> bool {
        u64 n = z.size();
        std::vector<std::pair<std::string, SumOfCycles>> cands;
        for (u64 d : divisors(n)) {
            if (d < 2) continue;
            if (d == n) {
                if (to_string(z) >= min_text && irreducible(z))
                    cands.emplace_back(to_string(z), z);
                continue;
            }
            PartitionStream stream(d, detail::factor_parts_pool(z, d));
            while (stream.next()) {
                SumOfCycles f = SumOfCycles::from_parts(stream.current());
                std::string ftext = to_string(f);
                if (ftext < min_text || !irreducible(f)) continue;
                cands.emplace_back(std::move(ftext), std::move(f));
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (const auto& [ftext, f] : cands) {
            if (f == z) {
                chain.push_back(z);
                out.factorizations.push_back(chain);
                chain.pop_back();
                if (out.factorizations.size() >= cap) {
                    out.truncated = true;
                    return false;
                }
                continue;
            }
            SolutionSet cofactors = support_brute_force_solutions(Instance(f, z));
            for (const auto& w : cofactors.solutions) {
                chain.push_back(f);
                bool keep_going = self(self, w, ftext);
                chain.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    };
    rec(rec, x, std::string());

    std::sort(out.factorizations.begin(), out.factorizations.end(),
              [](const std::vector<SumOfCycles>& l, const std::vector<SumOfCycles>& r) {
                  std::vector<std::string> lt, rt;
                  for (const auto& v : l) lt.push_back(to_string(v));
                  for (const auto& v : r) rt.push_back(to_string(v));
                  return lt < rt;
              });
    return out;
}

/// Number of partitions of n whose parts all divide n: the exact solution
/// count of the instance (C_n, n C_n).
inline BigInt divisor_partition_count(u64 n) {
    if (n == 0) throw std::domain_error("divisor partitions of zero");
    return count_partitions(n, divisors(n));
}

/// For a primorial n = p_1 ... p_k (k >= 2), the family of irreducible
/// solutions C_{p_k} + y of (C_n, n C_n) obtained by letting y range over
/// partitions of n - p_k with parts dividing n / p_k.
inline std::vector<SumOfCycles> irreducible_witness_family(u64 n) {
    u64 k = 0;
    if (!is_primorial(n, k) || k < 2)
        throw std::domain_error("witness family needs a primorial with at least two primes");
    u64 pk = 0;
    for (const auto& [p, e] : factorize(n)) { (void)e; pk = std::max(pk, p); }
    std::vector<SumOfCycles> family;
    PartitionStream stream(n - pk, divisors(n / pk));
    while (stream.next())
        family.push_back(SumOfCycles::cycle(pk) + SumOfCycles::from_parts(stream.current()));
    detail::sort_canonical(family);
    return family;
}

/// For any x other than C_1, produce (a, b) such that x divides a * b but
/// divides neither a nor b: no value is prime in this semiring.
inline std::pair<SumOfCycles, SumOfCycles> prime_counterexample(const SumOfCycles& x) {
    if (x.empty() || x.is_one())
        throw std::domain_error("counterexample needs a value other than C_1");

    u64 l = lcm_set(x.support());
    if (l == 1) {
        // x is a pile of fixed points: split its vertex count
        u64 m = x.size();
        if (is_prime(m))
            return {SumOfCycles::cycle(m), SumOfCycles::cycle(m)};
        u64 a = smallest_prime_factor(m);
        return {SumOfCycles::cycle(1, a), SumOfCycles::cycle(1, m / a)};
    }

    auto fac = factorize(l);
    if (fac.size() == 1) {
        u64 p = fac[0].first;
        if (x.term_count() == 1 && x.terms()[0] == SumOfCycles::Term{l, 1}) {
            // x = C_{p^e}: push one exponent higher
            u64 up = detail::checked_mul(l, p);
            return {SumOfCycles::cycle(up), SumOfCycles::cycle(up)};
        }
        return {SumOfCycles::cycle(l), SumOfCycles::cycle(1, x.size())};
    }

    u64 p1 = fac[0].first;
    u64 q = 1;
    for (u64 i = 0; i < fac[0].second; ++i) q = detail::checked_mul(q, p1);
    return {SumOfCycles::cycle(q, x.size()), SumOfCycles::cycle(l / q)};
}

/// Count irreducible and reducible values with n vertices (exhaustive over
/// the p(n) values; guarded, refuses n > 40).
inline std::pair<BigInt, BigInt> irreducible_census(u64 n) {
    if (n == 0) throw std::domain_error("census of zero");
    if (n > 40) throw capacity_error("census guarded at 40 vertices");
    std::vector<u64> all_parts(n);
    for (u64 i = 0; i < n; ++i) all_parts[i] = i + 1;
    BigInt irred = 0, total = 0;
    PartitionStream stream(n, all_parts);
    while (stream.next()) {
        ++total;
        if (is_irreducible(SumOfCycles::from_parts(stream.current()))) ++irred;
    }
    return {irred, total - irred};
}

} // namespace cyclediv
