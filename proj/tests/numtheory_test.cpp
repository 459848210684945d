#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"

using namespace cyclediv;

TEST_CASE("gcd and lcm over sets") {
    CHECK(gcd_set({6, 15}) == 3);
    CHECK(gcd_set({4}) == 4);
    CHECK(lcm_set({4, 6}) == 12);
    CHECK(lcm_set({1, 2, 3, 4, 6, 12}) == 12);
    CHECK_THROWS_AS(gcd_set({}), std::domain_error);
    CHECK_THROWS_AS(lcm_set({}), std::domain_error);
    CHECK_THROWS_AS(lcm_set({0, 3}), std::domain_error);
    // coprime near-2^40 pair overflows 64 bits
    CHECK_THROWS_AS(lcm_set({1ULL << 40, (1ULL << 40) + 1}), capacity_error);
}

TEST_CASE("divisor lists") {
    CHECK(divisors(30) == std::vector<u64>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(49) == std::vector<u64>{1, 7, 49});
    CHECK_THROWS_AS(divisors(0), std::domain_error);
    for (u64 n = 1; n <= 200; ++n) {
        auto d = divisors(n);
        CHECK(std::is_sorted(d.begin(), d.end()));
        CHECK(lcm_set(d) == n);
        for (u64 x : d)
            for (u64 y : d) {
                CHECK(std::gcd(x, y) >= 1);
                CHECK(n % std::gcd(x, y) == 0);
                CHECK(n % std::lcm(x, y) == 0);
            }
    }
}

TEST_CASE("prime machinery") {
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(smallest_prime_factor(2) == 2);
    CHECK(is_prime(2));
    CHECK(is_prime(999983));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(factorize(360) == std::vector<std::pair<u64, u64>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK(prime_exponent(12, 2) == 2);
    CHECK(prime_exponent(12, 3) == 1);
    CHECK(prime_exponent(12, 5) == 0);
    CHECK_THROWS_AS(prime_exponent(12, 4), std::domain_error);
}

TEST_CASE("primorials") {
    CHECK(primorial(1) == 2);
    CHECK(primorial(2) == 6);
    CHECK(primorial(3) == 30);
    CHECK(primorial(9) == 223092870);
    u64 k = 0;
    CHECK(is_primorial(6, k));
    CHECK(k == 2);
    CHECK(is_primorial(30, k));
    CHECK(k == 3);
    CHECK_FALSE(is_primorial(12, k));
    CHECK_FALSE(is_primorial(1, k));
    CHECK_THROWS_AS(primorial(60), capacity_error);
}

TEST_CASE("partition counting") {
    CHECK(count_partitions(4, {1, 2, 4}) == 4);
    CHECK(count_partitions(5, {1, 2, 3, 4, 5}) == 7);
    CHECK(count_partitions(0, {1, 2}) == 1);
    CHECK(count_partitions(3, {2}) == 0);
    CHECK(count_partitions(6, {1, 2, 3, 6}) == count_partitions(6, divisors(6)));
    // unrestricted values
    CHECK(count_partitions(10, testutil::one_to(10)) == 42);
    CHECK(count_partitions(20, testutil::one_to(20)) == 627);
    CHECK(count_partitions(50, testutil::one_to(50)) == 204226);
    CHECK(count_partitions(100, testutil::one_to(100)) == 190569292);
    auto table = partition_numbers(100);
    CHECK(table[0] == 1);
    CHECK(table[100] == 190569292);
}

TEST_CASE("partition stream emits lexicographically decreasing partitions") {
    PartitionStream s(3, {1, 2, 3, 6});
    std::vector<std::vector<u64>> got;
    while (s.next()) got.push_back(s.current());
    CHECK(got == std::vector<std::vector<u64>>{{3}, {2, 1}, {1, 1, 1}});

    PartitionStream t(8, {2, 6});
    got.clear();
    while (t.next()) got.push_back(t.current());
    CHECK(got == std::vector<std::vector<u64>>{{6, 2}, {2, 2, 2, 2}});
}

TEST_CASE("partition stream agrees with the counting table") {
    std::mt19937_64 rng(88001);
    for (int trial = 0; trial < 60; ++trial) {
        u64 n = std::uniform_int_distribution<u64>(1, 25)(rng);
        std::vector<u64> parts;
        for (u64 v = 1; v <= n; ++v)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) parts.push_back(v);
        if (parts.empty()) parts.push_back(1 + n / 2);
        PartitionStream s(n, parts);
        BigInt seen = 0;
        std::vector<u64> prev;
        while (s.next()) {
            const auto& cur = s.current();
            CHECK(std::is_sorted(cur.rbegin(), cur.rend()));
            CHECK(std::accumulate(cur.begin(), cur.end(), u64{0}) == n);
            for (u64 p : cur)
                CHECK(std::binary_search(parts.begin(), parts.end(), p));
            if (seen > 0) CHECK(std::lexicographical_compare(cur.begin(), cur.end(), prev.begin(), prev.end()));
            prev = cur;
            ++seen;
        }
        CHECK(seen == count_partitions(n, parts));
    }
}

TEST_CASE("partition stream works ahead only a bounded amount") {
    // getting the next partition never scans far past the parts it returns,
    // even when the target is large
    PartitionStream s(4000, {1, 2});
    u64 emitted_parts = 0;
    for (int i = 0; i < 50; ++i) {
        REQUIRE(s.next());
        emitted_parts += s.current().size();
    }
    CHECK(s.steps() <= 8 * (emitted_parts + 50));
}

TEST_CASE("asymptotic partition bound") {
    auto table = partition_numbers(200);
    for (u64 n = 10; n <= 200; ++n) {
        double lhs = std::log(table[n].convert_to<double>());
        CHECK(lhs <= partition_log_bound(n));
    }
}
