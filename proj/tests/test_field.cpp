#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "baric/field.hpp"
#include "baric/linalg.hpp"

using namespace baric;

TEST_CASE("field spec construction") {
    CHECK(FieldSpec::rationals().is_rationals());
    CHECK(FieldSpec::prime_field(5).prime() == 5);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(0), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field((std::uint64_t{1} << 31) + 11), Error);
    CHECK(FieldSpec::prime_field(2147483647).prime() == 2147483647);  // 2^31 - 1
}

TEST_CASE("scalar parsing and canonical printing") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec gf5 = FieldSpec::prime_field(5);

    CHECK(parse_value("3/2", q).str() == "3/2");
    CHECK(parse_value("-4/6", q).str() == "-2/3");
    CHECK(parse_value("7", gf5).res() == 2);
    CHECK(parse_value("-1", gf5).res() == 4);
    CHECK(parse_value("0", q).is_zero());
    CHECK(parse_value("007", q).str() == "7");

    CHECK_THROWS_AS(parse_value("", q), Error);
    CHECK_THROWS_AS(parse_value("1/0", q), Error);
    CHECK_THROWS_AS(parse_value("3/2", gf5), Error);
    CHECK_THROWS_AS(parse_value("a", q), Error);
    CHECK_THROWS_AS(parse_value("1.5", q), Error);
    CHECK_THROWS_AS(parse_value("+3", q), Error);
    CHECK_THROWS_AS(parse_value("2/-3", q), Error);
    CHECK_THROWS_AS(parse_value(" 1", q), Error);
}

TEST_CASE("basic arithmetic") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec gf5 = FieldSpec::prime_field(5);

    CHECK(parse_value("1/3", q) + parse_value("1/6", q) == parse_value("1/2", q));
    CHECK(parse_value("2", gf5) * parse_value("3", gf5) == parse_value("1", gf5));
    CHECK_THROWS_AS(parse_value("1", q) / parse_value("0", q), Error);
    CHECK_THROWS_AS(FieldValue::zero(gf5).inverse(), Error);
    CHECK_THROWS_AS(parse_value("1", q) + parse_value("1", gf5), Error);

    // residue inverses across the whole field
    for (std::uint64_t r = 1; r < 5; ++r) {
        FieldValue x = FieldValue::residue(r, gf5);
        CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("field enumeration") {
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    std::vector<std::uint64_t> seen;
    for (const FieldValue& x : enumerate_field(gf3)) seen.push_back(x.res());
    CHECK(seen == std::vector<std::uint64_t>{0, 1, 2});

    auto e2 = enumerate_field(FieldSpec::prime_field(2));
    CHECK(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_one());

    CHECK_THROWS_AS(enumerate_field(FieldSpec::rationals()), Error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (const FieldSpec& spec :
         {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(7)}) {
        for (int t = 0; t < 300; ++t) {
            FieldValue a = random_value(rng, spec);
            FieldValue b = random_value(rng, spec);
            FieldValue c = random_value(rng, spec);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("print/parse round-trip") {
    std::mt19937_64 rng(8);
    for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime_field(11)}) {
        for (int t = 0; t < 500; ++t) {
            FieldValue x = random_value(rng, spec);
            CHECK(parse_value(x.str(), spec) == x);
        }
    }
    // a big rational stays exact
    FieldValue big = parse_value("123456789012345678901/98765432109876543", FieldSpec::rationals());
    CHECK(parse_value(big.str(), FieldSpec::rationals()) == big);
}
