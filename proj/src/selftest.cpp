#include "baric/selftest.hpp"

#include <chrono>
#include <functional>

#include "baric/algebra_io.hpp"
#include "baric/builtin.hpp"
#include "baric/seminat.hpp"
#include "baric/solver.hpp"

namespace baric {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

CheckResult timed_check(const std::string& name, double budget,
                        const std::function<Outcome()>& body) {
    CheckResult r;
    r.name = name;
    r.budget_seconds = budget;
    auto t0 = Clock::now();
    try {
        Outcome o = body();
        r.pass = o.ok;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.seconds > budget) {
        r.pass = false;
        r.detail += " [over budget]";
    }
    return r;
}

Vector ivec(std::initializer_list<long> entries, const FieldSpec& spec) {
    std::vector<FieldValue> v;
    for (long e : entries) v.push_back(FieldValue::from_integer(e, spec));
    return Vector(std::move(v));
}

std::string count_detail(std::size_t good, std::size_t total) {
    return std::to_string(good) + "/" + std::to_string(total) + " cases hold";
}

const std::vector<std::uint64_t>& primes_to_97() {
    static const std::vector<std::uint64_t> p = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    return p;
}

// --- the individual checks ------------------------------------------------

Outcome check_two_weight_rationals() {
    const FieldSpec q = FieldSpec::rationals();
    SolutionSet s = solve_eigen(two_weight_cycle(q));
    std::vector<Vector> expect = {ivec({-1, 1, -1}, q), ivec({1, 1, 1}, q)};
    bool ok = s.solutions == expect;
    return {ok, "solutions " + std::to_string(s.size()) + " (expected 2, exact set match " +
                    (ok ? "yes" : "NO") + ")"};
}

Outcome check_unique_weight_product() {
    const FieldSpec q = FieldSpec::rationals();
    bool ok = true;
    std::string detail;

    SolutionSet none = solve_eigen(idempotent_pair(q));
    ok &= none.size() == 0;

    Algebra p = unique_weight_product(q);
    UniquenessCertificate cert = certify_unique(p);
    Vector w = ivec({0, 0, 1}, q);
    ok &= cert.verdict == Verdict::Unique && cert.solutions.size() == 1 &&
          cert.solutions.solutions.front() == w;
    ok &= !cert.fast_path.has_value();

    WeightHomomorphism hom(p, w);
    Vector e1 = ivec({1, 0, 0}, q);
    ok &= w.dot(e1).is_zero();                // e1 lies in the kernel
    ok &= multiply(p, e1, e1) == e1;          // and is idempotent,
    ok &= !kernel_square_zero(p, hom);        // so the kernel is not nil
    ok &= kernel_idempotent_witness(p, hom) == std::optional<Vector>(e1);

    detail = "component not baric: " + std::string(none.size() == 0 ? "yes" : "NO") +
             "; product unique with non-nil kernel: " + (ok ? "yes" : "NO");
    return {ok, detail};
}

Outcome check_solver_cross(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0003);
    const auto& p2 = primes_to_97();
    const std::vector<std::uint64_t> p3 = {2, 3, 5, 7, 11, 13, 17, 19};
    const std::size_t total = 1000;
    std::size_t good = 0;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t n = 1 + t % 3;
        std::uint64_t p = (n == 3) ? p3[(t / 3) % p3.size()] : p2[(t / 3) % p2.size()];
        Algebra a = random_algebra(rng, n, FieldSpec::prime_field(p), t % 2 == 0);
        if (solve_eigen(a).solutions == solve_exhaustive(a).solutions) ++good;
    }
    return {good == total, count_detail(good, total)};
}

Outcome check_two_dim_noncommutative(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0004);
    const std::vector<std::uint64_t> ps = {3, 5, 7, 11};
    const std::size_t total = 1000;
    std::size_t good = 0;
    for (std::size_t t = 0; t < total; ++t) {
        FieldSpec spec = FieldSpec::prime_field(ps[t % ps.size()]);
        Algebra a = random_algebra(rng, 2, spec, true);
        int guard = 0;
        while (is_commutative(a)) {
            a = random_algebra(rng, 2, spec, true);
            if (++guard > 1000) return {false, "could not draw a non-commutative algebra"};
        }
        if (solve_exhaustive(a).size() == 1) ++good;
    }
    return {good == total, count_detail(good, total)};
}

Outcome check_transition_criterion(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0005);
    std::vector<Algebra> sample;
    sample.push_back(constant_product(2, FieldSpec::prime_field(2)));
    sample.push_back(two_weight_cycle(FieldSpec::prime_field(2)));
    sample.push_back(two_weight_cycle(FieldSpec::prime_field(3)));
    sample.push_back(unique_weight_product(FieldSpec::prime_field(2)));
    struct Bucket {
        std::size_t n;
        std::uint64_t p;
        std::size_t count;
    };
    for (const Bucket& b : {Bucket{1, 2, 20}, Bucket{1, 3, 20}, Bucket{2, 2, 40},
                            Bucket{2, 3, 40}, Bucket{3, 2, 40}, Bucket{3, 3, 25}}) {
        FieldSpec spec = FieldSpec::prime_field(b.p);
        for (std::size_t t = 0; t < b.count; ++t)
            sample.push_back(random_algebra(rng, b.n, spec, true));
    }
    std::size_t good = 0;
    for (const Algebra& a : sample) {
        bool via = certify_unique_via_transitions(a);
        bool unique = certify_unique(a).verdict == Verdict::Unique;
        if (via == unique) ++good;
    }
    return {good == sample.size(), count_detail(good, sample.size())};
}

Outcome check_coset_census() {
    bool ok = true;

    CensusReport big = census(two_weight_cycle(FieldSpec::prime_field(3)));
    std::size_t gl3 = 0;
    GlScan scan3(3, 3);
    scan3.for_each_nonsingular([&](const Matrix&) { ++gl3; });
    const std::size_t coset_size = gl3 / (27 - 1);
    ok &= big.num_weight_homs == 2 && big.num_seminat_bases == 864 && big.num_classes == 2;
    for (std::size_t s : big.class_sizes) ok &= s == coset_size && s == 432;
    ok &= big.rs_group_order == coset_size;

    CensusReport small = census(constant_product(2, FieldSpec::prime_field(2)));
    ok &= small.num_weight_homs == 1 && small.num_seminat_bases == 2 &&
          small.num_classes == 1 && small.class_sizes == std::vector<std::size_t>{2};

    return {ok, "864 bases in " + std::to_string(big.num_classes) + " classes of " +
                    (big.class_sizes.empty() ? std::string("-")
                                             : std::to_string(big.class_sizes[0])) +
                    "; 2-dim census " + std::to_string(small.num_seminat_bases) + "/" +
                    std::to_string(small.num_classes)};
}

Outcome check_row_sum_constructor(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0007);
    const std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13};
    const std::size_t total = 1000;
    std::size_t good = 0;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t n = 1 + t % 6;
        FieldSpec spec = (t % 2 == 0) ? FieldSpec::rationals()
                                      : FieldSpec::prime_field(ps[(t / 2) % ps.size()]);
        Vector alpha(spec, n);
        if (t % 5 == 0) {
            // all-but-one-zero row sums, the degenerate corner of the construction
            std::size_t pos = (t / 5) % n;
            do {
                alpha[pos] = random_value(rng, spec);
            } while (alpha[pos].is_zero());
        } else {
            alpha = random_nonzero_vector(rng, spec, n);
        }
        Matrix m = matrix_with_row_sums(alpha);
        if (!determinant(m).is_zero() && row_sums(m) == alpha) ++good;
    }
    return {good == total, count_detail(good, total)};
}

Outcome check_stochastic_subgroup(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0008);
    const std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13};
    const std::size_t total = 1000;
    std::size_t good = 0;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t n = 2 + t % 4;
        FieldSpec spec = (t % 2 == 0) ? FieldSpec::rationals()
                                      : FieldSpec::prime_field(ps[(t / 2) % ps.size()]);
        Matrix m = random_row_stochastic_matrix(rng, spec, n);
        Matrix k = random_row_stochastic_matrix(rng, spec, n);
        bool rows_ok = is_row_stochastic(m * k) && is_row_stochastic(invert(m));
        Matrix mt = m.transpose(), kt = k.transpose();
        bool cols_ok = is_column_stochastic(mt * kt) && is_column_stochastic(invert(mt));
        if (rows_ok && cols_ok) ++good;
    }

    bool orders_ok = true;
    std::string orders;
    struct Case {
        std::size_t n;
        std::uint64_t p;
        std::size_t expect;
    };
    for (const Case& c : {Case{2, 2, 2}, Case{2, 3, 6}, Case{3, 2, 24}}) {
        std::size_t gl = 0, rs = 0;
        GlScan scan(c.n, c.p);
        scan.for_each_nonsingular([&](const Matrix& m) {
            ++gl;
            if (is_row_stochastic(m)) ++rs;
        });
        std::uint64_t points = 1;
        for (std::size_t t = 0; t < c.n; ++t) points *= c.p;
        orders_ok &= rs == c.expect && rs == gl / (points - 1);
        orders += (orders.empty() ? "" : ", ") + std::to_string(rs);
    }
    bool ok = good == total && orders_ok;
    return {ok, count_detail(good, total) + "; group orders " + orders};
}

Outcome check_row_sum_biconditional(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eed0009);
    const FieldSpec gf3 = FieldSpec::prime_field(3);
    std::size_t good = 0, total = 1100;
    for (std::size_t t = 0; t < 1000; ++t) {
        std::size_t n = 1 + t % 3;
        Algebra a = random_algebra(rng, n, gf3, t % 2 == 0);
        Matrix m = random_nonsingular_matrix(rng, gf3, n);
        if (row_sum_solution_check(a, m)) ++good;
    }
    const FieldSpec q = FieldSpec::rationals();
    for (std::size_t t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 3;
        Algebra a = random_algebra(rng, n, q, t % 2 == 0);
        Matrix m = random_integer_nonsingular_matrix(rng, q, n, -3, 3);
        if (row_sum_solution_check(a, m)) ++good;
    }
    return {good == total, count_detail(good, total)};
}

Outcome check_two_weight_mod2() {
    const FieldSpec gf2 = FieldSpec::prime_field(2);
    SolutionSet s = solve_exhaustive(two_weight_cycle(gf2));
    bool ok = s.solutions == std::vector<Vector>{ivec({1, 1, 1}, gf2)};
    return {ok, "solutions " + std::to_string(s.size()) + " (expected 1)"};
}

}  // namespace

std::vector<CheckResult> run_builtin_checks(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(timed_check("two-weight example over Q", 0.1, check_two_weight_rationals));
    out.push_back(timed_check("unique weight with non-nil kernel", 0.1,
                              check_unique_weight_product));
    out.push_back(timed_check("solver cross-check on 1000 random algebras", 60.0,
                              [=] { return check_solver_cross(seed); }));
    out.push_back(timed_check("2-dim non-commutative uniqueness x1000", 30.0,
                              [=] { return check_two_dim_noncommutative(seed); }));
    out.push_back(timed_check("transition-matrix uniqueness criterion", 300.0,
                              [=] { return check_transition_criterion(seed); }));
    out.push_back(timed_check("semi-natural coset census", 60.0, check_coset_census));
    out.push_back(timed_check("row-sum constructor x1000", 5.0,
                              [=] { return check_row_sum_constructor(seed); }));
    out.push_back(timed_check("stochastic subgroup closure and orders", 30.0,
                              [=] { return check_stochastic_subgroup(seed); }));
    out.push_back(timed_check("row-sum/semi-natural biconditional", 60.0,
                              [=] { return check_row_sum_biconditional(seed); }));
    out.push_back(timed_check("two-weight example over GF(2)", 0.1, check_two_weight_mod2));
    return out;
}

}  // namespace baric
