#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclediv {

using u64 = std::uint64_t;

/// Input text could not be parsed; `offset` is the byte position of the
/// first offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A checked 64-bit computation overflowed, or an explicit size guard
/// refused to run an exhaustive operation.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw capacity_error("64-bit addition overflow");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw capacity_error("64-bit multiplication overflow");
    return r;
}

} // namespace detail

} // namespace cyclediv
