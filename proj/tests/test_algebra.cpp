#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "baric/algebra_io.hpp"
#include "baric/builtin.hpp"
#include "baric/solver.hpp"

using namespace baric;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vector ivec(std::initializer_list<long> entries, const FieldSpec& spec) {
    std::vector<FieldValue> v;
    for (long e : entries) v.push_back(FieldValue::from_integer(e, spec));
    return Vector(std::move(v));
}

Vector unit(std::size_t i, std::size_t n, const FieldSpec& spec) {
    Vector v(spec, n);
    v[i] = FieldValue::one(spec);
    return v;
}

// Test-local brute force: all nonzero tuples over GF(p) satisfying the
// product equations, checked with plain field arithmetic.
std::set<Vector> brute_force_solutions(const Algebra& a) {
    const std::uint64_t p = a.spec().prime();
    const std::size_t n = a.dim();
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < n; ++t) count *= p;
    std::set<Vector> out;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t rem = idx;
        Vector v(a.spec(), n);
        for (std::size_t t = n; t-- > 0;) {
            v[t] = FieldValue::residue(rem % p, a.spec());
            rem /= p;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                FieldValue lhs = FieldValue::zero(a.spec());
                for (std::size_t k = 0; k < n; ++k) lhs += a.gamma(i, j, k) * v[k];
                if (lhs != v[i] * v[j]) ok = false;
            }
        if (ok) out.insert(v);
    }
    return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& x) {
    Matrix a(x.spec(), x.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i) a.at(i, j) = basis[j][i];
    return solve_affine(a, x).has_value();
}

}  // namespace

TEST_CASE("coordinate multiplication") {
    Algebra a = two_weight_cycle(Q);
    Vector e1 = unit(0, 3, Q), e2 = unit(1, 3, Q), e3 = unit(2, 3, Q);
    CHECK(multiply(a, e1, e2) == e1);  // e1 e2 = e1
    CHECK(multiply(a, e2, e1) == e3);  // e2 e1 = e3
    CHECK(multiply(a, e1, e1) == e2);  // e1^2 = e2
    CHECK(multiply(a, Vector(Q, 3), e2).is_zero());

    // bilinearity spot check
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        Vector x = random_vector(rng, Q, 3), y = random_vector(rng, Q, 3),
               z = random_vector(rng, Q, 3);
        CHECK(multiply(a, x + y, z) == multiply(a, x, z) + multiply(a, y, z));
        CHECK(multiply(a, x, y + z) == multiply(a, x, y) + multiply(a, x, z));
    }

    CHECK_THROWS_AS(multiply(a, Vector(Q, 2), e1), Error);
}

TEST_CASE("commutativity predicate") {
    CHECK(!is_commutative(two_weight_cycle(Q)));
    CHECK(is_commutative(constant_product(3, Q)));
    CHECK(is_commutative(scalar_line(Q)));

    std::mt19937_64 rng(22);
    Algebra r = random_algebra(rng, 3, Q, false);
    Algebra sym(Q, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                sym.set_gamma(i, j, k, r.gamma(i, j, k) + r.gamma(j, i, k));
    CHECK(is_commutative(sym));
}

TEST_CASE("semi-naturality and constant structure sum") {
    Algebra a = two_weight_cycle(Q);
    CHECK(is_semi_natural(a));
    CHECK(constant_structure_sum(a) == FieldValue::one(Q));

    Algebra zero(Q, 2);
    CHECK(!is_semi_natural(zero));
    CHECK(constant_structure_sum(zero) == FieldValue::zero(Q));

    Algebra p = unique_weight_product(Q);
    CHECK(!is_semi_natural(p));  // the (1,2) slice sums to 2
    CHECK(!constant_structure_sum(p).has_value());
}

TEST_CASE("change of basis") {
    Algebra a = two_weight_cycle(Q);

    SUBCASE("identity leaves the constants alone") {
        CHECK(change_basis(a, BasisChange{Matrix::identity(Q, 3)}) == a);
    }
    SUBCASE("diagonal sign flip") {
        Matrix p = Matrix::diagonal(ivec({-1, 1, -1}, Q));
        Algebra b = change_basis(a, BasisChange{p});
        // new e1' = -e1, so e1' e2' = -(e1 e2) = -e1 = e1'
        CHECK(b.gamma(0, 1, 0) == FieldValue::one(Q));
        CHECK(is_semi_natural(b));  // (-1,1,-1) solves the system, so this frame is semi-natural
    }
    SUBCASE("swapping two basis vectors relabels the tensor") {
        std::mt19937_64 rng(23);
        Algebra r = random_algebra(rng, 3, Q, false);
        Matrix p(Q, 3, 3);
        p.at(0, 1) = p.at(1, 0) = p.at(2, 2) = FieldValue::one(Q);
        Algebra b = change_basis(r, BasisChange{p});
        auto pi = [](std::size_t t) { return t == 0 ? 1 : (t == 1 ? std::size_t{0} : t); };
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    CHECK(b.gamma(i, j, k) == r.gamma(pi(i), pi(j), pi(k)));
    }
    SUBCASE("singular matrix rejected") {
        CHECK_THROWS_AS(change_basis(a, BasisChange{Matrix(Q, 3, 3)}), Error);
    }
    SUBCASE("transforming by P then by P^{-1} restores the tensor") {
        // rows of P^{-1} are the old basis vectors in the new frame
        std::mt19937_64 rng(29);
        for (int t = 0; t < 20; ++t) {
            Matrix p = random_nonsingular_matrix(rng, Q, 3);
            Algebra once = change_basis(a, BasisChange{p});
            CHECK(change_basis(once, BasisChange{invert(p)}) == a);
        }
    }
    SUBCASE("products transported faithfully") {
        // multiplying coordinates in the new frame agrees with mapping
        // back, multiplying, and mapping forward
        std::mt19937_64 rng(24);
        for (int t = 0; t < 30; ++t) {
            Matrix p = random_nonsingular_matrix(rng, Q, 3);
            Algebra b = change_basis(a, BasisChange{p});
            Vector x = random_vector(rng, Q, 3), y = random_vector(rng, Q, 3);
            // coordinates x in the new frame correspond to x^T P in the old
            Matrix pt = p.transpose();
            Vector x_old = pt * x, y_old = pt * y;
            Vector lhs = pt * multiply(b, x, y);
            CHECK(lhs == multiply(a, x_old, y_old));
        }
    }
}

TEST_CASE("weight homomorphism predicate") {
    Algebra a = two_weight_cycle(Q);
    CHECK(is_weight_homomorphism(a, ivec({1, 1, 1}, Q)));
    CHECK(is_weight_homomorphism(a, ivec({-1, 1, -1}, Q)));
    CHECK(!is_weight_homomorphism(a, Vector(Q, 3)));
    CHECK(!is_weight_homomorphism(a, ivec({1, 0, 0}, Q)));

    CHECK_THROWS_AS(WeightHomomorphism(a, ivec({1, 0, 0}, Q)), Error);
    CHECK_THROWS_AS(WeightHomomorphism(a, Vector(Q, 3)), Error);
}

TEST_CASE("kernel basis") {
    Algebra a = two_weight_cycle(Q);
    WeightHomomorphism ones(a, ivec({1, 1, 1}, Q));
    auto basis = kernel_basis(ones);
    REQUIRE(basis.size() == 2);
    for (const Vector& v : basis) CHECK(ones.coords().dot(v).is_zero());
    CHECK(in_span(basis, ivec({1, -1, 0}, Q)));
    CHECK(in_span(basis, ivec({0, 1, -1}, Q)));

    Algebra p = unique_weight_product(Q);
    WeightHomomorphism proj(p, ivec({0, 0, 1}, Q));
    auto pb = kernel_basis(proj);
    REQUIRE(pb.size() == 2);
    CHECK(pb[0] == ivec({1, 0, 0}, Q));
    CHECK(pb[1] == ivec({0, 1, 0}, Q));

    // 2-dim: w = (1,1) has kernel spanned by (1,-1)
    Algebra u = uniform_tensor(2, Q);
    WeightHomomorphism w2(u, ivec({1, 1}, Q));
    auto b2 = kernel_basis(w2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == ivec({1, -1}, Q));
}

TEST_CASE("kernel square zero witness") {
    // all gamma = 1/2 in dimension 2: (x e1 + y e2)^2 = ((x+y)^2/2)(e1+e2)
    Algebra u = uniform_tensor(2, Q);
    WeightHomomorphism ones(u, ivec({1, 1}, Q));
    CHECK(kernel_square_zero(u, ones));

    Algebra p = unique_weight_product(Q);
    WeightHomomorphism proj(p, ivec({0, 0, 1}, Q));
    CHECK(!kernel_square_zero(p, proj));  // (e1,0)^2 = (e1,0) != 0

    Algebra line = scalar_line(Q);
    WeightHomomorphism idw(line, ivec({1}, Q));
    CHECK(kernel_square_zero(line, idw));  // kernel is 0, vacuously
}

TEST_CASE("kernel idempotent witness") {
    Algebra p = unique_weight_product(Q);
    WeightHomomorphism proj(p, ivec({0, 0, 1}, Q));
    CHECK(kernel_idempotent_witness(p, proj) == std::optional<Vector>(ivec({1, 0, 0}, Q)));

    Algebra zero(Q, 2);
    // the zero algebra is not baric; test the search on a direct kernel,
    // here of the product algebra's homomorphism restricted over GF(2)
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    Algebra a2 = two_weight_cycle(gf2);
    WeightHomomorphism ones(a2, ivec({1, 1, 1}, gf2));
    // oracle: enumerate all four kernel vectors directly
    std::optional<Vector> expect;
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
        Vector v(gf2, 3);
        for (std::size_t t = 0; t < 3; ++t)
            v[t] = FieldValue::residue((mask >> t) & 1, gf2);
        if (!ones.coords().dot(v).is_zero()) continue;
        if (multiply(a2, v, v) == v && !expect) expect = v;
    }
    CHECK(kernel_idempotent_witness(a2, ones) == expect);
    CHECK(!expect.has_value());  // computed by the oracle: no idempotent in this kernel

    // zero-square kernel has nothing to find
    Algebra u = uniform_tensor(2, Q);
    WeightHomomorphism uw(u, ivec({1, 1}, Q));
    CHECK(!kernel_idempotent_witness(u, uw).has_value());
}

TEST_CASE("direct product") {
    Algebra prod = unique_weight_product(Q);
    CHECK(prod.dim() == 3);
    Vector e1 = unit(0, 3, Q), e3 = unit(2, 3, Q);
    CHECK(multiply(prod, e1, e3).is_zero());  // cross products vanish
    CHECK(multiply(prod, e3, e3) == e3);
    CHECK(multiply(prod, e1, e1) == e1);

    Algebra zz = direct_product(Algebra(Q, 2), Algebra(Q, 3));
    CHECK(zz.dim() == 5);
    CHECK(zz == Algebra(Q, 5));

    CHECK_THROWS_AS(direct_product(Algebra(Q, 2), Algebra(FieldSpec::prime_field(3), 2)), Error);

    // weight homomorphisms embed from the factors
    std::mt19937_64 rng(25);
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    for (int t = 0; t < 40; ++t) {
        Algebra a = random_algebra(rng, 2, gf3, true);
        Algebra b = random_algebra(rng, 1, gf3, t % 2 == 0);
        Algebra c = direct_product(a, b);
        for (const Vector& w : solve_exhaustive(a).solutions) {
            Vector embedded(gf3, 3);
            for (std::size_t i = 0; i < 2; ++i) embedded[i] = w[i];
            CHECK(is_weight_homomorphism(c, embedded));
        }
        for (const Vector& w : solve_exhaustive(c).solutions) {
            bool upper_zero = w[2].is_zero();
            Vector head(gf3, 2);
            head[0] = w[0];
            head[1] = w[1];
            if (upper_zero) CHECK(is_weight_homomorphism(a, head));
        }
    }
}

TEST_CASE("random algebra generator") {
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    Algebra a = random_algebra(2, gf3, 99, true);
    CHECK(is_semi_natural(a));
    CHECK(random_algebra(2, gf3, 99, true) == a);  // same seed, same tensor
    CHECK(!(random_algebra(2, gf3, 100, true) == a));

    // the guaranteed all-ones solution is found by the solver
    CHECK(solve_exhaustive(a).contains(ivec({1, 1}, gf3)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Algebra b = random_algebra(3, FieldSpec::prime_field(5), seed, true);
        CHECK(is_semi_natural(b));
        CHECK(solve_exhaustive(b).size() >= 1);
    }
}

TEST_CASE("weight homomorphisms equal the brute-force tuple scan") {
    std::mt19937_64 rng(26);
    const std::vector<std::uint64_t> ps = {2, 3, 5};
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 1 + t % 3;
        FieldSpec spec = FieldSpec::prime_field(ps[t % ps.size()]);
        Algebra a = random_algebra(rng, n, spec, t % 2 == 0);

        std::set<Vector> brute = brute_force_solutions(a);
        // route 1: the predicate filter
        std::set<Vector> via_pred;
        std::uint64_t count = 1;
        for (std::size_t s = 0; s < n; ++s) count *= spec.prime();
        for (std::uint64_t idx = 1; idx < count; ++idx) {
            std::uint64_t rem = idx;
            Vector v(spec, n);
            for (std::size_t s = n; s-- > 0;) {
                v[s] = FieldValue::residue(rem % spec.prime(), spec);
                rem /= spec.prime();
            }
            if (is_weight_homomorphism(a, v)) via_pred.insert(v);
        }
        CHECK(via_pred == brute);
        // route 2: the production scanner
        SolutionSet s = solve_exhaustive(a);
        CHECK(std::set<Vector>(s.solutions.begin(), s.solutions.end()) == brute);
    }

    // a few larger fields, up to ~10^5 tuples
    struct Big {
        std::size_t n;
        std::uint64_t p;
    };
    for (const Big& c : {Big{2, 97}, Big{3, 31}, Big{1, 9973}}) {
        Algebra a = random_algebra(rng, c.n, FieldSpec::prime_field(c.p), true);
        std::set<Vector> brute = brute_force_solutions(a);
        SolutionSet s = solve_exhaustive(a, 1'000'000);
        CHECK(std::set<Vector>(s.solutions.begin(), s.solutions.end()) == brute);
        CHECK(!brute.empty());  // semi-natural draw, the all-ones tuple solves
    }
}

TEST_CASE("solution count is invariant under change of basis") {
    std::mt19937_64 rng(27);
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 3;
        Algebra a = random_algebra(rng, n, gf3, t % 2 == 0);
        Matrix p = random_nonsingular_matrix(rng, gf3, n);
        Algebra b = change_basis(a, BasisChange{p});
        CHECK(solve_exhaustive(a).size() == solve_exhaustive(b).size());
    }
    // over Q via the eigenvalue solver
    for (int t = 0; t < 15; ++t) {
        Algebra a = random_algebra(rng, 2, Q, true);
        Matrix p = random_integer_nonsingular_matrix(rng, Q, 2, -3, 3);
        Algebra b = change_basis(a, BasisChange{p});
        CHECK(solve_eigen(a).size() == solve_eigen(b).size());
    }
}

TEST_CASE("algebra JSON round-trip") {
    std::mt19937_64 rng(28);
    for (const FieldSpec& spec : {Q, FieldSpec::prime_field(7)}) {
        for (int t = 0; t < 30; ++t) {
            Algebra a = random_algebra(rng, 1 + t % 4, spec, t % 2 == 0);
            CHECK(algebra_from_json(algebra_to_json(a)) == a);
        }
    }
    Algebra tw = two_weight_cycle(Q);
    CHECK(algebra_from_json(algebra_to_json(tw)) == tw);
}

TEST_CASE("algebra JSON validation") {
    CHECK_THROWS_WITH_AS(algebra_from_json("{"), doctest::Contains("syntax error at line 1"),
                         Error);
    CHECK_THROWS_WITH_AS(algebra_from_json(R"({"field":"Q","dim":2})"),
                         doctest::Contains("missing \"gamma\""), Error);
    CHECK_THROWS_WITH_AS(algebra_from_json(R"({"field":"R","dim":2,"gamma":[]})"),
                         doctest::Contains("field must be"), Error);
    CHECK_THROWS_WITH_AS(algebra_from_json(R"({"field":"Q","dim":0,"gamma":[]})"),
                         doctest::Contains("dim"), Error);
    CHECK_THROWS_WITH_AS(
        algebra_from_json(R"({"field":"Q","dim":2,"gamma":[[1,1,3,"1"]]})"),
        doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(
        algebra_from_json(R"({"field":"Q","dim":2,"gamma":[[1,1,1,"1"],[1,1,1,"2"]]})"),
        doctest::Contains("duplicate triple (1,1,1)"), Error);
    CHECK_THROWS_WITH_AS(
        algebra_from_json(R"({"field":"Q","dim":2,"gamma":[[1,1,1,5]]})"),
        doctest::Contains("scalar must be a string"), Error);
    CHECK_THROWS_WITH_AS(
        algebra_from_json(R"({"field":{"prime":5},"dim":2,"gamma":[[1,1,1,"1/2"]]})"),
        doctest::Contains("integer literals only"), Error);
    CHECK_THROWS_WITH_AS(
        algebra_from_json(R"({"field":{"prime":6},"dim":2,"gamma":[]})"),
        doctest::Contains("not prime"), Error);

    // omitted triples are zero
    Algebra a = algebra_from_json(R"({"field":"Q","dim":2,"gamma":[[1,1,1,"1"]]})");
    CHECK(a.gamma(0, 0, 0).is_one());
    CHECK(a.gamma(1, 1, 1).is_zero());
}
