#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace cyclediv {

/// A finite disjoint union of directed cycles, identified by the map from
/// cycle length to multiplicity.  Stored canonically as (length,
/// multiplicity) terms with ascending lengths, positive multiplicities and
/// no repeated length.  Lengths and multiplicities are 64-bit and all
/// arithmetic on them is overflow-checked.
class SumOfCycles {
public:
    using Term = std::pair<u64, u64>; // (length, multiplicity)

    SumOfCycles() = default;

    /// mult copies of the cycle of the given length (mult 0 gives the empty value).
    static SumOfCycles cycle(u64 length, u64 mult = 1) {
        if (length == 0) throw std::domain_error("cycle length must be positive");
        SumOfCycles v;
        if (mult > 0) v.terms_.emplace_back(length, mult);
        return v;
    }

    static SumOfCycles one() { return cycle(1); }

    /// Build from arbitrary (length, multiplicity) pairs; coalesces and sorts.
    static SumOfCycles from_terms(const std::vector<Term>& raw) {
        std::map<u64, u64> acc;
        for (const auto& [len, mult] : raw) {
            if (len == 0) throw std::domain_error("cycle length must be positive");
            if (mult == 0) continue;
            u64& slot = acc[len];
            slot = detail::checked_add(slot, mult);
        }
        SumOfCycles v;
        v.terms_.assign(acc.begin(), acc.end());
        return v;
    }

    /// Build from a multiset of cycle lengths (e.g. a partition).
    static SumOfCycles from_parts(const std::vector<u64>& parts) {
        std::map<u64, u64> acc;
        for (u64 p : parts) {
            if (p == 0) throw std::domain_error("cycle length must be positive");
            u64& slot = acc[p];
            slot = detail::checked_add(slot, 1);
        }
        SumOfCycles v;
        v.terms_.assign(acc.begin(), acc.end());
        return v;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Multiplicity of the cycle of the given length (0 when absent).
    u64 multiplicity(u64 length) const {
        if (length == 0) throw std::domain_error("cycle length must be positive");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), length,
                                   [](const Term& t, u64 l) { return t.first < l; });
        return (it != terms_.end() && it->first == length) ? it->second : 0;
    }

    /// Total number of vertices, checked.
    u64 size() const {
        u64 total = 0;
        for (const auto& [len, mult] : terms_)
            total = detail::checked_add(total, detail::checked_mul(len, mult));
        return total;
    }

    /// Set of cycle lengths present, ascending.
    std::vector<u64> support() const {
        std::vector<u64> out;
        out.reserve(terms_.size());
        for (const auto& [len, mult] : terms_) out.push_back(len);
        return out;
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second == 1;
    }

    friend bool operator==(const SumOfCycles& a, const SumOfCycles& b) = default;

    // structural order, used for internal containers only; user-facing
    // listings are ordered by canonical text instead
    friend auto operator<=>(const SumOfCycles& a, const SumOfCycles& b) {
        return a.terms_ <=> b.terms_;
    }

private:
    std::vector<Term> terms_;

    friend SumOfCycles operator+(const SumOfCycles&, const SumOfCycles&);
    friend SumOfCycles operator-(const SumOfCycles&, const SumOfCycles&);
    friend SumOfCycles operator*(const SumOfCycles&, const SumOfCycles&);
    friend SumOfCycles cycle_length_multiply(const SumOfCycles&, u64);
    friend SumOfCycles cycle_length_divide(const SumOfCycles&, u64);
};

/// Disjoint union.
inline SumOfCycles operator+(const SumOfCycles& a, const SumOfCycles& b) {
    SumOfCycles out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.terms_.push_back(*ib++);
        } else {
            out.terms_.emplace_back(ia->first, detail::checked_add(ia->second, ib->second));
            ++ia; ++ib;
        }
    }
    return out;
}

/// True iff a(l) <= b(l) for every length l.
inline bool is_subgraph(const SumOfCycles& a, const SumOfCycles& b) {
    for (const auto& [len, mult] : a.terms())
        if (b.multiplicity(len) < mult) return false;
    return true;
}

/// Multiset difference; requires is_subgraph(b, a).
inline SumOfCycles operator-(const SumOfCycles& a, const SumOfCycles& b) {
    SumOfCycles out;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end()) {
        if (ib != b.terms_.end() && ib->first < ia->first)
            throw std::domain_error("subtraction underflow at length " +
                                    std::to_string(ib->first));
        if (ib != b.terms_.end() && ib->first == ia->first) {
            if (ib->second > ia->second)
                throw std::domain_error("subtraction underflow at length " +
                                        std::to_string(ia->first));
            if (ia->second > ib->second)
                out.terms_.emplace_back(ia->first, ia->second - ib->second);
            ++ib;
        } else {
            out.terms_.push_back(*ia);
        }
        ++ia;
    }
    if (ib != b.terms_.end())
        throw std::domain_error("subtraction underflow at length " +
                                std::to_string(ib->first));
    return out;
}

/// Semiring product: cycles of lengths a and x combine into gcd(a,x) copies
/// of the cycle of length lcm(a,x).
inline SumOfCycles operator*(const SumOfCycles& a, const SumOfCycles& x) {
    std::map<u64, u64> acc;
    for (const auto& [la, ma] : a.terms_) {
        for (const auto& [lx, mx] : x.terms_) {
            u64 g = std::gcd(la, lx);
            u64 l = detail::checked_mul(la / g, lx);
            u64 c = detail::checked_mul(g, detail::checked_mul(ma, mx));
            u64& slot = acc[l];
            slot = detail::checked_add(slot, c);
        }
    }
    SumOfCycles out;
    out.terms_.assign(acc.begin(), acc.end());
    return out;
}

/// Multiply every cycle length by p (p >= 1).
inline SumOfCycles cycle_length_multiply(const SumOfCycles& a, u64 p) {
    if (p == 0) throw std::domain_error("length factor must be positive");
    SumOfCycles out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& [len, mult] : a.terms_)
        out.terms_.emplace_back(detail::checked_mul(len, p), mult);
    return out;
}

/// Keep the cycles whose length is divisible by p and divide their lengths by p.
inline SumOfCycles cycle_length_divide(const SumOfCycles& a, u64 p) {
    if (p == 0) throw std::domain_error("length divisor must be positive");
    SumOfCycles out;
    for (const auto& [len, mult] : a.terms_)
        if (len % p == 0) out.terms_.emplace_back(len / p, mult);
    return out;
}

/// Contraction by p: a vertex-count preserving rearrangement that maps the
/// product with a length-p-divisible value onto its length-divided image.
/// For prime p the cycle of length l contributes p copies of the length l/p
/// cycle when p | l and survives unchanged otherwise; composite p factors
/// through its primes.
inline SumOfCycles contract(const SumOfCycles& a, u64 p) {
    if (p == 0) throw std::domain_error("contraction factor must be positive");
    if (p == 1) return a;
    u64 q = smallest_prime_factor(p);
    const SumOfCycles& base = (q == p) ? a : contract(a, p / q);
    std::vector<SumOfCycles::Term> raw;
    raw.reserve(base.terms().size());
    for (const auto& [len, mult] : base.terms()) {
        if (len % q == 0) {
            raw.emplace_back(len / q, detail::checked_mul(q, mult));
        } else {
            raw.emplace_back(len, mult);
        }
    }
    return SumOfCycles::from_terms(raw);
}

/// Canonical text: terms ascending by length, multiplicity 1 omitted, e.g.
/// "3C6+8C12".  The empty value prints as "0" (not part of the input grammar).
inline std::string to_string(const SumOfCycles& a) {
    if (a.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [len, mult] : a.terms()) {
        if (!first) out += '+';
        first = false;
        if (mult != 1) out += std::to_string(mult);
        out += 'C';
        out += std::to_string(len);
    }
    return out;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r'))
        ++i;
}

inline u64 parse_number(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    u64 v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        u64 d = static_cast<u64>(s[i] - '0');
        if (v > (UINT64_MAX - d) / 10)
            throw parse_error("number out of range", start);
        v = v * 10 + d;
        ++i;
    }
    if (i == start) throw parse_error("expected a number", i);
    if (v == 0) throw parse_error("zero is not allowed", start);
    return v;
}

} // namespace detail

/// Parse the textual grammar  sum := term ("+" term)*,
/// term := [multiplicity] "C" length  with decimal values >= 1 and
/// whitespace ignored between tokens.  Non-canonical input (unsorted or
/// repeated lengths) is accepted and coalesced.
inline SumOfCycles parse_sum_of_cycles(std::string_view text) {
    std::vector<SumOfCycles::Term> raw;
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i == text.size()) throw parse_error("empty input", i);
    while (true) {
        detail::skip_ws(text, i);
        u64 mult = 1;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            mult = detail::parse_number(text, i);
            detail::skip_ws(text, i);
        }
        if (i >= text.size() || text[i] != 'C')
            throw parse_error("expected 'C'", i);
        ++i;
        detail::skip_ws(text, i);
        u64 len = detail::parse_number(text, i);
        raw.emplace_back(len, mult);
        detail::skip_ws(text, i);
        if (i == text.size()) break;
        if (text[i] != '+') throw parse_error("expected '+'", i);
        ++i;
    }
    return SumOfCycles::from_terms(raw);
}

/// Comparator giving the user-facing canonical order (ascending by text).
inline bool canonical_text_less(const SumOfCycles& a, const SumOfCycles& b) {
    return to_string(a) < to_string(b);
}

} // namespace cyclediv
