#pragma once

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace cyclediv {

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

inline u64 lcm_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm of zero");
    return detail::checked_mul(a / std::gcd(a, b), b);
}

/// gcd of a non-empty set of positive integers.
inline u64 gcd_set(const std::vector<u64>& xs) {
    if (xs.empty()) throw std::domain_error("gcd of empty set");
    u64 g = 0;
    for (u64 x : xs) {
        if (x == 0) throw std::domain_error("gcd of zero");
        g = std::gcd(g, x);
    }
    return g;
}

/// lcm of a non-empty set of positive integers, checked.
inline u64 lcm_set(const std::vector<u64>& xs) {
    if (xs.empty()) throw std::domain_error("lcm of empty set");
    u64 l = 1;
    for (u64 x : xs) l = lcm_u64(l, x);
    return l;
}

/// All divisors of n, ascending.
inline std::vector<u64> divisors(u64 n) {
    if (n == 0) throw std::domain_error("divisors of zero");
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail {

// Smallest-prime-factor sieve, grown lazily and shared.  Lookups beyond the
// sieve cap fall back to trial division.
class spf_sieve {
public:
    static constexpr u64 max_size = u64(1) << 22;

    static u64 query(u64 n) {
        static spf_sieve inst;
        if (n < 2) throw std::domain_error("prime factor of n < 2");
        if (n <= max_size) return inst.lookup(n);
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

private:
    std::vector<std::uint32_t> spf_{0, 0};
    std::mutex mu_;

    u64 lookup(u64 n) {
        std::lock_guard<std::mutex> lock(mu_);
        if (n >= spf_.size()) grow(n);
        return spf_[n];
    }

    void grow(u64 need) {
        u64 sz = std::max<u64>(spf_.size(), 1024);
        while (sz <= need) sz *= 2;
        sz = std::min(sz, max_size + 1);
        // restart the sieve on growth: growth doubles, so this amortizes
        spf_.assign(sz, 0);
        for (u64 i = 2; i < sz; ++i) {
            if (spf_[i] == 0)
                for (u64 j = i; j < sz; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
};

} // namespace detail

inline u64 smallest_prime_factor(u64 n) { return detail::spf_sieve::query(n); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    return smallest_prime_factor(n) == n;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<u64, u64>> factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize zero");
    std::vector<std::pair<u64, u64>> out;
    while (n > 1) {
        u64 p = smallest_prime_factor(n);
        u64 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    return out;
}

/// Exponent of the prime p in n (p must be prime, n >= 1).
inline u64 prime_exponent(u64 n, u64 p) {
    if (n == 0) throw std::domain_error("prime exponent of zero");
    if (!is_prime(p)) throw std::domain_error("prime_exponent: p is not prime");
    u64 e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

/// Product of the first k primes, checked.
inline u64 primorial(u64 k) {
    if (k == 0) throw std::domain_error("primorial of zero");
    u64 out = 1, p = 2;
    for (u64 i = 0; i < k; ++i) {
        out = detail::checked_mul(out, p);
        do { ++p; } while (!is_prime(p));
    }
    return out;
}

/// True iff n = p_1 * p_2 * ... * p_k, the product of the first k primes.
inline bool is_primorial(u64 n, u64& k_out) {
    if (n < 2) return false;
    auto fac = factorize(n);
    u64 p = 2;
    for (const auto& [q, e] : fac) {
        if (e != 1 || q != p) return false;
        do { ++p; } while (!is_prime(p));
    }
    k_out = fac.size();
    return true;
}

/// Upper bound on ln p(n): pi * sqrt(2n/3).
inline double partition_log_bound(u64 n) {
    constexpr double pi = 3.14159265358979323846;
    return pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0);
}

} // namespace cyclediv
