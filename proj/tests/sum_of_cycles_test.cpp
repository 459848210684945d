#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace cyclediv;
using testutil::digraph_product_oracle;
using testutil::soc;

TEST_CASE("parse and format round canonical text") {
    CHECK(to_string(soc("3C6+8C12")) == "3C6+8C12");
    CHECK(to_string(soc("C6")) == "C6");
    CHECK(to_string(soc(" 2C3 + C1")) == "C1+2C3");
    // repeated lengths coalesce
    CHECK(to_string(soc("C12+3C6+5C6")) == "8C6+C12");
    CHECK(soc("1C4") == SumOfCycles::cycle(4));
    CHECK(to_string(SumOfCycles()) == "0");
}

TEST_CASE("parse rejects malformed text with byte offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            parse_sum_of_cycles(text);
        } catch (const parse_error& e) {
            return static_cast<long long>(e.offset());
        }
        return -1LL;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C0") == 1);
    CHECK(offset_of("0C3") == 0);
    CHECK(offset_of("C") == 1);
    CHECK(offset_of("3") == 1);
    CHECK(offset_of("2+2") == 1);
    CHECK(offset_of("C3+") == 3);
    CHECK(offset_of("C3+x") == 3);
    CHECK(offset_of("C99999999999999999999999") == 1); // length overflows
}

TEST_CASE("parse of formatted value is the identity") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 200; ++i) {
        auto v = testutil::random_value(rng, 40);
        CHECK(parse_sum_of_cycles(to_string(v)) == v);
    }
}

TEST_CASE("vertex count and support") {
    auto b = soc("3C6+8C12");
    CHECK(b.size() == 114);
    CHECK(b.support() == std::vector<u64>{6, 12});
    CHECK(b.multiplicity(6) == 3);
    CHECK(b.multiplicity(5) == 0);
    CHECK(SumOfCycles().size() == 0);
    CHECK(SumOfCycles::one() == SumOfCycles::cycle(1));
    CHECK_THROWS_AS(SumOfCycles::cycle(0), std::domain_error);
    CHECK_THROWS_AS(SumOfCycles::cycle(UINT64_MAX, 3).size(), capacity_error);
}

TEST_CASE("addition and subtraction") {
    CHECK(soc("C2") + soc("C2+C4") == soc("2C2+C4"));
    CHECK(soc("C2+C4") - soc("C2") == soc("C4"));
    CHECK(soc("2C2+C4") - soc("2C2+C4") == SumOfCycles());
    CHECK(is_subgraph(SumOfCycles(), soc("C5")));
    CHECK(is_subgraph(soc("C2+C4"), soc("2C2+C4")));
    CHECK_FALSE(is_subgraph(soc("3C2"), soc("2C2+C4")));
    CHECK_THROWS_WITH(soc("C2") - soc("C4"), Catch::Matchers::ContainsSubstring("length 4"));
    CHECK_THROWS_AS(soc("C2") - soc("2C2"), std::domain_error);
}

TEST_CASE("product of cycles") {
    CHECK(SumOfCycles::cycle(2) * SumOfCycles::cycle(2) == soc("2C2"));
    CHECK(SumOfCycles::cycle(6) * SumOfCycles::cycle(4) == soc("2C12"));
    CHECK(soc("C2+C6") * soc("C4") == soc("2C4+2C12"));
    CHECK(soc("C6") * soc("3C1+4C4") == soc("3C6+8C12"));
    // one copy of C_1 is the multiplicative identity
    auto v = soc("2C3+5C7");
    CHECK(v * SumOfCycles::one() == v);
    CHECK(SumOfCycles::one() * v == v);
    CHECK(v * SumOfCycles() == SumOfCycles());
}

TEST_CASE("product matches the digraph walk on all small pairs") {
    auto values = testutil::all_values_up_to(10);
    for (const auto& a : values)
        for (const auto& x : values)
            REQUIRE(a * x == digraph_product_oracle(a, x));
}

TEST_CASE("semiring laws hold on random triples") {
    std::mt19937_64 rng(77001);
    for (int i = 0; i < 300; ++i) {
        auto a = testutil::random_value(rng, 30);
        auto b = testutil::random_value(rng, 30);
        auto c = testutil::random_value(rng, 30);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).size() == a.size() * b.size());
    }
}

TEST_CASE("product support is the pairwise lcm closure") {
    std::mt19937_64 rng(77002);
    for (int i = 0; i < 200; ++i) {
        auto a = testutil::random_value(rng, 24);
        auto x = testutil::random_value(rng, 24);
        std::set<u64> expected;
        for (u64 la : a.support())
            for (u64 lx : x.support()) expected.insert(lcm_u64(la, lx));
        auto got = (a * x).support();
        CHECK(std::vector<u64>(expected.begin(), expected.end()) == got);
    }
}

TEST_CASE("length scaling") {
    CHECK(cycle_length_multiply(soc("2C1+3C2+5C3"), 3) == soc("2C3+3C6+5C9"));
    CHECK(cycle_length_multiply(soc("4C1"), 4) == soc("4C4"));
    CHECK(cycle_length_divide(soc("2C1+3C3+5C4+7C6"), 3) == soc("3C1+7C2"));
    CHECK(cycle_length_divide(soc("8C12"), 4) == soc("8C3"));
    CHECK(cycle_length_divide(soc("2C1+3C2"), 5) == SumOfCycles());
    CHECK_THROWS_AS(cycle_length_multiply(soc("C2"), 0), std::domain_error);
}

TEST_CASE("length scaling inverts where defined") {
    std::mt19937_64 rng(77003);
    for (int i = 0; i < 200; ++i) {
        auto a = testutil::random_value(rng, 30);
        u64 p = std::uniform_int_distribution<u64>(2, 6)(rng);
        CHECK(cycle_length_divide(cycle_length_multiply(a, p), p) == a);
        auto scaled = cycle_length_multiply(a, p);
        CHECK(cycle_length_multiply(cycle_length_divide(scaled, p), p) == scaled);
    }
}

TEST_CASE("contraction") {
    auto a = soc("2C1+3C3+5C4+7C6");
    CHECK(contract(a, 1) == a);
    CHECK(contract(a, 3) == soc("11C1+21C2+5C4"));
    CHECK(contract(a, 6) == soc("53C1+10C2"));
    CHECK(contract(soc("C6"), 4) == soc("2C3"));
    CHECK_THROWS_AS(contract(a, 0), std::domain_error);
}

TEST_CASE("contraction preserves vertex count and composes multiplicatively") {
    std::mt19937_64 rng(77004);
    for (int i = 0; i < 200; ++i) {
        auto a = testutil::random_value(rng, 40);
        u64 p = std::uniform_int_distribution<u64>(1, 12)(rng);
        u64 q = std::uniform_int_distribution<u64>(1, 12)(rng);
        auto ap = contract(a, p);
        CHECK(ap.size() == a.size());
        CHECK(contract(ap, q) == contract(a, p * q));
        CHECK(contract(contract(a, q), p) == contract(ap, q));
    }
}

TEST_CASE("contracted product agrees with dividing the product") {
    // contract(A, p) * (X / p) == (A * X) / p whenever p divides every
    // cycle length of X
    std::mt19937_64 rng(77005);
    const u64 primes[] = {2, 3, 5};
    for (int i = 0; i < 200; ++i) {
        auto a = testutil::random_value(rng, 24);
        u64 p = primes[std::uniform_int_distribution<int>(0, 2)(rng)];
        auto x = cycle_length_multiply(testutil::random_value(rng, 8), p);
        CHECK(contract(a, p) * cycle_length_divide(x, p) ==
              cycle_length_divide(a * x, p));
    }
}

TEST_CASE("canonical text order") {
    CHECK(canonical_text_less(soc("3C1+4C4"), soc("3C1+C4+C12")));
    CHECK(canonical_text_less(soc("C12"), soc("C2")));
    CHECK_FALSE(canonical_text_less(soc("C2"), soc("C2")));
}

TEST_CASE("json round trip") {
    auto v = soc("3C6+8C12");
    nlohmann::json j = v;
    CHECK(j == nlohmann::json::parse(R"({"cycles":[[6,3],[12,8]]})"));
    CHECK(j.get<SumOfCycles>() == v);
}
