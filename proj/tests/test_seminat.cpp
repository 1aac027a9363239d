#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "baric/builtin.hpp"
#include "baric/seminat.hpp"

using namespace baric;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vector ivec(std::initializer_list<long> entries, const FieldSpec& spec) {
    std::vector<FieldValue> v;
    for (long e : entries) v.push_back(FieldValue::from_integer(e, spec));
    return Vector(std::move(v));
}

}  // namespace

TEST_CASE("semi-natural basis from a solution") {
    Algebra a = two_weight_cycle(Q);

    SUBCASE("all-ones solution gives the identity") {
        SemiNaturalBasis b = seminat_from_solution(a, ivec({1, 1, 1}, Q));
        CHECK(b.transition() == Matrix::identity(Q, 3));
        CHECK(b.in_new_basis() == a);
    }
    SUBCASE("sign solution gives the sign diagonal") {
        SemiNaturalBasis b = seminat_from_solution(a, ivec({-1, 1, -1}, Q));
        CHECK(b.transition() == Matrix::diagonal(ivec({-1, 1, -1}, Q)));
        Algebra t = b.in_new_basis();
        CHECK(is_semi_natural(t));
        // e1'^2 = f1^2 = f2 = e2' in the new frame
        CHECK(t.gamma(0, 0, 1).is_one());
    }
    SUBCASE("zero-coordinate solution uses the row-sum construction") {
        Algebra p = unique_weight_product(Q);
        SemiNaturalBasis b = seminat_from_solution(p, ivec({0, 0, 1}, Q));
        CHECK(row_sums(b.transition()) == ivec({0, 0, 1}, Q));
        CHECK(is_semi_natural(b.in_new_basis()));
    }
    SUBCASE("rejects non-solutions with the failing equation") {
        CHECK_THROWS_WITH_AS(seminat_from_solution(a, ivec({1, 2, 3}, Q)),
                             doctest::Contains("not a solution"), Error);
        CHECK_THROWS_AS(seminat_from_solution(a, Vector(Q, 3)), Error);
    }
    SUBCASE("constructor validates arbitrary transition matrices") {
        CHECK_THROWS_AS(SemiNaturalBasis(a, Matrix(Q, 3, 3)), Error);  // singular
        Matrix bad = Matrix::diagonal(ivec({2, 1, 1}, Q));  // row sums (2,1,1): not a solution
        CHECK_THROWS_AS(SemiNaturalBasis(a, bad), Error);
    }
}

TEST_CASE("row-sum biconditional holds on random inputs") {
    std::mt19937_64 rng(41);
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + t % 3;
        Algebra a = random_algebra(rng, n, gf3, t % 2 == 0);
        Matrix m = random_nonsingular_matrix(rng, gf3, n);
        CHECK(row_sum_solution_check(a, m));
    }
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + t % 3;
        Algebra a = random_algebra(rng, n, Q, t % 2 == 0);
        Matrix m = random_integer_nonsingular_matrix(rng, Q, n, -3, 3);
        CHECK(row_sum_solution_check(a, m));
    }
    // both sides hold at the identity on a semi-natural algebra,
    // both fail on the zero algebra
    CHECK(row_sum_solution_check(two_weight_cycle(Q), Matrix::identity(Q, 3)));
    CHECK(row_sum_solution_check(Algebra(Q, 2), Matrix::identity(Q, 2)));
    CHECK_THROWS_AS(row_sum_solution_check(Algebra(Q, 2), Matrix(Q, 2, 2)), Error);
}

TEST_CASE("semi-natural basis enumeration") {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    const FieldSpec gf3 = FieldSpec::prime_field(3);

    SUBCASE("constant product over GF(2): exactly the row-stochastic group") {
        std::vector<Matrix> s = enumerate_seminat(constant_product(2, gf2));
        REQUIRE(s.size() == 2);
        Matrix swap(gf2, 2, 2);
        swap.at(0, 1) = swap.at(1, 0) = FieldValue::one(gf2);
        CHECK(s[0] == swap);  // counting order: the swap precedes the identity
        CHECK(s[1] == Matrix::identity(gf2, 2));
    }
    SUBCASE("two-weight example over GF(3): 864 bases") {
        std::vector<Matrix> s = enumerate_seminat(two_weight_cycle(gf3));
        CHECK(s.size() == 864);
    }
    SUBCASE("zero algebra has none") {
        CHECK(enumerate_seminat(Algebra(gf2, 2)).empty());
    }
    SUBCASE("rationals rejected") {
        CHECK_THROWS_AS(enumerate_seminat(two_weight_cycle(Q)), Error);
    }
}

TEST_CASE("the induced weight homomorphism is the row-sum vector") {
    Algebra a = two_weight_cycle(Q);
    SemiNaturalBasis id(a, Matrix::identity(Q, 3));
    CHECK(seminat_weight(id).coords() == ivec({1, 1, 1}, Q));

    SemiNaturalBasis sign(a, Matrix::diagonal(ivec({-1, 1, -1}, Q)));
    CHECK(seminat_weight(sign).coords() == ivec({-1, 1, -1}, Q));

    // over GF(3), every enumerated basis induces a valid homomorphism
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    Algebra a3 = two_weight_cycle(gf3);
    std::vector<Matrix> s = enumerate_seminat(a3);
    for (std::size_t t = 0; t < s.size(); t += 37) {
        SemiNaturalBasis b(a3, s[t]);
        CHECK(is_weight_homomorphism(a3, seminat_weight(b).coords()));
    }
}

TEST_CASE("coset partition") {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    const FieldSpec gf3 = FieldSpec::prime_field(3);

    SUBCASE("single matrix") {
        CosetPartition p = coset_partition({Matrix::identity(Q, 2)});
        CHECK(p.classes.size() == 1);
    }
    SUBCASE("constant product over GF(2): one class of two") {
        CosetPartition p = coset_partition(enumerate_seminat(constant_product(2, gf2)));
        REQUIRE(p.classes.size() == 1);
        CHECK(p.classes[0].size() == 2);
    }
    SUBCASE("two-weight example over GF(3): two classes of 432") {
        std::vector<Matrix> s = enumerate_seminat(two_weight_cycle(gf3));
        CosetPartition p = coset_partition(s);
        REQUIRE(p.classes.size() == 2);
        CHECK(p.classes[0].size() == 432);
        CHECK(p.classes[1].size() == 432);

        // the defining relation, verified directly on samples: same
        // class iff M'^{-1} M is row stochastic
        Algebra a3 = two_weight_cycle(gf3);
        std::mt19937_64 rng(42);
        for (int t = 0; t < 60; ++t) {
            const auto& c1 = p.classes[rand_below(rng, 2)];
            const auto& c2 = p.classes[rand_below(rng, 2)];
            const Matrix& m1 = c1[rand_below(rng, c1.size())];
            const Matrix& m2 = c2[rand_below(rng, c2.size())];
            bool same = (&c1 == &c2);
            CHECK(is_row_stochastic(invert(m2) * m1) == same);
            // and the induced homomorphisms agree exactly on classes
            CHECK((seminat_weight(SemiNaturalBasis(a3, m1)).coords() ==
                   seminat_weight(SemiNaturalBasis(a3, m2)).coords()) == same);
        }

        // row stochasticity of N is N * ones == ones
        Vector ones(gf3, 3);
        for (std::size_t i = 0; i < 3; ++i) ones[i] = FieldValue::one(gf3);
        for (int t = 0; t < 40; ++t) {
            const Matrix& m1 = s[rand_below(rng, s.size())];
            const Matrix& m2 = s[rand_below(rng, s.size())];
            Matrix n = invert(m2) * m1;
            CHECK(is_row_stochastic(n) == (n * ones == ones));
        }
    }
    SUBCASE("singular member rejected") {
        CHECK_THROWS_AS(coset_partition({Matrix(Q, 2, 2)}), Error);
    }
}

TEST_CASE("transition-matrix uniqueness criterion") {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    const FieldSpec gf3 = FieldSpec::prime_field(3);

    CHECK(certify_unique_via_transitions(constant_product(2, gf2)));
    CHECK(certify_unique_via_transitions(two_weight_cycle(gf2)));   // solutions merge mod 2
    CHECK(!certify_unique_via_transitions(two_weight_cycle(gf3)));  // two solutions
    CHECK_THROWS_WITH_AS(certify_unique_via_transitions(Algebra(gf2, 2)),
                         doctest::Contains("not baric"), Error);

    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 3;
        std::uint64_t p = (t % 2) ? 3 : 2;
        Algebra a = random_algebra(rng, n, FieldSpec::prime_field(p), true);
        CHECK(certify_unique_via_transitions(a) ==
              (certify_unique(a).verdict == Verdict::Unique));
    }
}

TEST_CASE("pullback square closes on the full GL scan") {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    CHECK(verify_pullback(two_weight_cycle(gf2)));
    CHECK(verify_pullback(constant_product(2, gf2)));
    CHECK(verify_pullback(unique_weight_product(gf2)));

    std::mt19937_64 rng(44);
    for (int t = 0; t < 20; ++t) {
        Algebra a = random_algebra(rng, 2, FieldSpec::prime_field(3), true);
        CHECK(verify_pullback(a));
    }
}

TEST_CASE("census reports") {
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    CensusReport r = census(two_weight_cycle(gf3));
    CHECK(r.dim == 3);
    CHECK(r.prime == 3);
    CHECK(r.num_weight_homs == 2);
    CHECK(r.num_seminat_bases == 864);
    CHECK(r.rs_group_order == 432);
    CHECK(r.num_classes == 2);
    CHECK(r.class_sizes == std::vector<std::size_t>{432, 432});
    // |S| = |W| * |RS|, classes partition S evenly
    CHECK(r.num_seminat_bases == r.num_weight_homs * r.rs_group_order);

    CensusReport z = census(Algebra(gf3, 2));
    CHECK(z.num_weight_homs == 0);
    CHECK(z.num_seminat_bases == 0);
    CHECK(z.num_classes == 0);

    CHECK_THROWS_AS(census(two_weight_cycle(Q)), Error);
}

TEST_CASE("class count does not depend on the reference basis") {
    // re-express the algebra in random frames and census again
    std::mt19937_64 rng(45);
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    Algebra a = two_weight_cycle(gf3);
    CensusReport base = census(a);
    for (int t = 0; t < 3; ++t) {
        Matrix p = random_nonsingular_matrix(rng, gf3, 3);
        Algebra b = change_basis(a, BasisChange{p});
        CensusReport r = census(b);
        CHECK(r.num_classes == base.num_classes);
        CHECK(r.num_weight_homs == base.num_weight_homs);
        CHECK(r.num_seminat_bases == base.num_seminat_bases);
        CHECK(r.class_sizes == base.class_sizes);
    }

    std::mt19937_64 rng2(46);
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    Algebra c = constant_product(2, gf2);
    CensusReport cbase = census(c);
    for (int t = 0; t < 3; ++t) {
        Matrix p = random_nonsingular_matrix(rng2, gf2, 2);
        CensusReport r = census(change_basis(c, BasisChange{p}));
        CHECK(r.num_classes == cbase.num_classes);
        CHECK(r.class_sizes == cbase.class_sizes);
    }
}

TEST_CASE("unique verdict with semi-natural frame: bases are exactly the stochastic group") {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    for (const Algebra& a : {constant_product(2, gf2), two_weight_cycle(gf2)}) {
        REQUIRE(is_semi_natural(a));
        REQUIRE(certify_unique(a).verdict == Verdict::Unique);
        std::vector<Matrix> s = enumerate_seminat(a);
        std::vector<Matrix> rs;
        GlScan scan(a.dim(), 2);
        scan.for_each_nonsingular([&](const Matrix& m) {
            if (is_row_stochastic(m)) rs.push_back(m);
        });
        CHECK(s == rs);
    }
}
