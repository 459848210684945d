#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace cyclediv {

using BigInt = boost::multiprecision::cpp_int;

/// Streams the partitions of `target` whose parts are drawn from a fixed set
/// of positive integers, in lexicographically decreasing order of the
/// (non-increasing) part sequences.  Nothing is materialized up front: a
/// feasibility table lets the walk skip dead branches, so the work between
/// two emissions is proportional to the emitted partition's length times the
/// number of distinct parts.
class PartitionStream {
public:
    PartitionStream(u64 target, std::vector<u64> parts)
        : target_(target), parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
        parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
        for (u64 p : parts_)
            if (p == 0) throw std::domain_error("partition part must be positive");
        build_feasible();
    }

    /// Advance to the next partition; returns false when exhausted.  The
    /// current partition (parts non-increasing) stays valid until the next
    /// call.
    bool next() {
        if (done_) return false;
        if (!started_) {
            started_ = true;
            if (target_ == 0) { current_.clear(); return true; }
            if (parts_.empty() || !feasible(parts_.size() - 1, target_)) {
                done_ = true;
                return false;
            }
            remaining_ = target_;
            descend(parts_.size() - 1);
            return true;
        }
        // backtrack: drop trailing parts until one can be replaced by the
        // next smaller feasible candidate
        while (!current_.empty()) {
            ++steps_;
            u64 part = current_.back();
            std::size_t idx = idx_stack_.back();
            current_.pop_back();
            idx_stack_.pop_back();
            remaining_ += part;
            while (idx > 0) {
                ++steps_;
                --idx;
                u64 cand = parts_[idx];
                if (cand <= remaining_ && feasible(idx, remaining_ - cand)) {
                    push(cand, idx);
                    descend(idx);
                    return true;
                }
            }
        }
        done_ = true;
        return false;
    }

    const std::vector<u64>& current() const { return current_; }
    u64 target() const { return target_; }
    const std::vector<u64>& parts() const { return parts_; }

    /// Internal step counter, exposed so the streaming-delay contract can be
    /// checked by tests.
    u64 steps() const { return steps_; }

private:
    u64 target_;
    std::vector<u64> parts_;
    std::vector<std::vector<char>> feas_; // feas_[i][r]: r reachable with parts_[0..i]
    std::vector<u64> current_;
    std::vector<std::size_t> idx_stack_;
    u64 remaining_ = 0;
    u64 steps_ = 0;
    bool started_ = false;
    bool done_ = false;

    void build_feasible() {
        feas_.assign(parts_.size(), std::vector<char>(target_ + 1, 0));
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            feas_[i][0] = 1;
            for (u64 r = 1; r <= target_; ++r) {
                char ok = (i > 0) ? feas_[i - 1][r] : 0;
                if (!ok && parts_[i] <= r) ok = feas_[i][r - parts_[i]];
                feas_[i][r] = ok;
            }
        }
    }

    bool feasible(std::size_t idx, u64 r) const { return feas_[idx][r] != 0; }

    void push(u64 part, std::size_t idx) {
        current_.push_back(part);
        idx_stack_.push_back(idx);
        remaining_ -= part;
    }

    // extend the current prefix greedily with the largest feasible parts
    void descend(std::size_t max_idx) {
        std::size_t idx = max_idx;
        while (remaining_ > 0) {
            ++steps_;
            while (parts_[idx] > remaining_ || !feasible(idx, remaining_ - parts_[idx])) {
                ++steps_;
                --idx;
            }
            push(parts_[idx], idx);
        }
    }
};

/// Number of partitions of n with parts in `parts` (0 has one partition).
inline BigInt count_partitions(u64 n, const std::vector<u64>& parts) {
    std::vector<u64> ps(parts);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (u64 p : ps) {
        if (p == 0) throw std::domain_error("partition part must be positive");
        for (u64 r = p; r <= n; ++r) dp[r] += dp[r - p];
    }
    return dp[n];
}

/// p(0..n) in one pass (unrestricted partition numbers).
inline std::vector<BigInt> partition_numbers(u64 n) {
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (u64 p = 1; p <= n; ++p)
        for (u64 r = p; r <= n; ++r) dp[r] += dp[r - p];
    return dp;
}

} // namespace cyclediv
