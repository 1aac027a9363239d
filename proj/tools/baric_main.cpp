// baric: exact analysis of finite-dimensional algebras given by
// structure constants.  Computes weight homomorphisms, certifies
// uniqueness, builds semi-natural bases, and runs finite-field censuses.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "baric/algebra_io.hpp"
#include "baric/builtin.hpp"
#include "baric/selftest.hpp"
#include "baric/seminat.hpp"
#include "baric/solver.hpp"

namespace {

using namespace baric;
using nlohmann::json;

constexpr std::uint64_t kHardCeiling = 1'000'000'000;  // for --max-scan / --max-cells

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::Unique: return 0;
        case Verdict::Multiple: return 2;
        case Verdict::NotBaric: return 3;
    }
    return 1;
}

json field_json(const FieldSpec& spec) {
    if (spec.is_rationals()) return json("Q");
    return json{{"prime", spec.prime()}};
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i].str());
    return a;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return rows;
}

json solutions_json(const SolutionSet& s) {
    json a = json::array();
    for (const Vector& v : s.solutions) a.push_back(vector_json(v));
    return a;
}

FieldSpec parse_field_flag(const std::string& text) {
    if (text == "Q" || text == "q") return FieldSpec::rationals();
    try {
        std::size_t used = 0;
        unsigned long long p = std::stoull(text, &used);
        if (used == text.size()) return FieldSpec::prime_field(p);
    } catch (const std::exception&) {
    }
    throw Error("bad --field value \"" + text + "\": expected Q or a prime");
}

SolutionSet cli_solve(const Algebra& a, std::uint64_t max_scan) {
    if (a.spec().is_rationals()) return solve_eigen(a);
    std::uint64_t count = 1;
    bool fits = true;
    for (std::size_t t = 0; t < a.dim(); ++t) {
        if (count > max_scan / a.spec().prime()) {
            fits = false;
            break;
        }
        count *= a.spec().prime();
    }
    return fits ? solve_exhaustive(a, max_scan) : solve_eigen(a);
}

void print_solution_report(const Algebra& a, const SolutionSet& s, Verdict verdict) {
    std::cout << "field: " << a.spec().str() << "\n";
    std::cout << "dim: " << a.dim() << "\n";
    std::cout << "solutions (" << s.size() << "):\n";
    for (const Vector& v : s.solutions) std::cout << "  " << v.str() << "\n";
    std::cout << "verdict: " << verdict_name(verdict) << "\n";
}

Verdict verdict_of(const SolutionSet& s) {
    return s.size() == 0 ? Verdict::NotBaric : (s.size() == 1 ? Verdict::Unique : Verdict::Multiple);
}

int cmd_solve(const std::string& file, bool machine, std::uint64_t max_scan) {
    Algebra a = load_algebra_file(file);
    SolutionSet s = cli_solve(a, max_scan);
    Verdict verdict = verdict_of(s);
    if (machine) {
        json out{{"command", "solve"},
                 {"field", field_json(a.spec())},
                 {"dim", a.dim()},
                 {"solutions", solutions_json(s)},
                 {"complete", s.complete},
                 {"verdict", verdict_name(verdict)}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_solution_report(a, s, verdict);
    }
    return verdict_exit_code(verdict);
}

int cmd_certify(const std::string& file, bool machine) {
    Algebra a = load_algebra_file(file);
    UniquenessCertificate cert = certify_unique(a);
    if (machine) {
        json out{{"command", "certify"},
                 {"field", field_json(a.spec())},
                 {"dim", a.dim()},
                 {"solutions", solutions_json(cert.solutions)},
                 {"verdict", verdict_name(cert.verdict)},
                 {"fast_path", cert.fast_path ? json(fast_path_name(*cert.fast_path)) : json()}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_solution_report(a, cert.solutions, cert.verdict);
        std::cout << "fast path: "
                  << (cert.fast_path ? fast_path_name(*cert.fast_path) : "none") << "\n";
    }
    return verdict_exit_code(cert.verdict);
}

int cmd_seminat_check(const std::string& file, bool machine) {
    Algebra a = load_algebra_file(file);
    bool semi = is_semi_natural(a);
    std::optional<FieldValue> sum = constant_structure_sum(a);
    Vector ones(a.spec(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) ones[i] = FieldValue::one(a.spec());
    bool ones_solves = is_weight_homomorphism(a, ones);
    if (machine) {
        json out{{"command", "seminat-check"},
                 {"semi_natural", semi},
                 {"constant_structure_sum", sum ? json(sum->str()) : json()},
                 {"all_ones_is_solution", ones_solves}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "semi-natural: " << (semi ? "yes" : "no") << "\n";
        std::cout << "constant structure sum: " << (sum ? sum->str() : "none") << "\n";
        std::cout << "all-ones tuple is a solution: " << (ones_solves ? "yes" : "no") << "\n";
    }
    return semi ? 0 : 2;
}

int cmd_seminat_make(const std::string& file, const std::string& alpha_text, bool machine) {
    Algebra a = load_algebra_file(file);
    Vector alpha = vector_from_csv(alpha_text, a.spec());
    SemiNaturalBasis basis = seminat_from_solution(a, alpha);
    Matrix m = basis.transition();
    Matrix minv = basis.basis_in_reference();
    Algebra transformed = basis.in_new_basis();
    bool semi = is_semi_natural(transformed);  // re-verified before printing
    if (!semi) throw Error("internal check failed: transformed constants are not semi-natural");
    if (machine) {
        json out{{"command", "seminat-make"},
                 {"alpha", vector_json(alpha)},
                 {"transition", matrix_json(m)},
                 {"inverse", matrix_json(minv)},
                 {"algebra", json::parse(algebra_to_json(transformed))},
                 {"semi_natural", semi}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "alpha: " << alpha.str() << "\n";
        std::cout << "transition matrix (new basis -> reference):\n" << m.str() << "\n";
        std::cout << "inverse (rows = new basis in reference coordinates):\n"
                  << minv.str() << "\n";
        std::cout << "structure constants in the new basis (semi-natural: yes):\n";
        std::cout << algebra_to_json(transformed) << "\n";
    }
    return 0;
}

int cmd_change_basis(const std::string& file, const std::string& matrix_file, bool machine) {
    Algebra a = load_algebra_file(file);
    Matrix p = load_matrix_file(matrix_file, a.spec());
    Algebra out = change_basis(a, BasisChange{p});
    if (machine) {
        json doc{{"command", "change-basis"},
                 {"matrix", matrix_json(p)},
                 {"algebra", json::parse(algebra_to_json(out))}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << algebra_to_json(out) << "\n";
    }
    return 0;
}

int cmd_census(const std::string& file, bool machine, std::uint64_t max_cells) {
    Algebra a = load_algebra_file(file);
    if (a.spec().is_rationals()) throw Error("census requires a finite field");
    CensusReport r = census(a, max_cells);
    if (machine) {
        json out{{"dim", r.dim},
                 {"prime", r.prime},
                 {"num_weight_homs", r.num_weight_homs},
                 {"num_seminat_bases", r.num_seminat_bases},
                 {"rs_group_order", r.rs_group_order},
                 {"num_classes", r.num_classes},
                 {"class_sizes", r.class_sizes}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "dim: " << r.dim << "\n"
                  << "prime: " << r.prime << "\n"
                  << "weight homomorphisms: " << r.num_weight_homs << "\n"
                  << "semi-natural bases: " << r.num_seminat_bases << "\n"
                  << "row-stochastic group order: " << r.rs_group_order << "\n"
                  << "coset classes: " << r.num_classes << "\n";
        std::cout << "class sizes:";
        for (std::size_t s : r.class_sizes) std::cout << " " << s;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, bool machine) {
    std::vector<CheckResult> results = run_builtin_checks(seed);
    bool all = true;
    if (machine) {
        json checks = json::array();
        for (const CheckResult& r : results) {
            all &= r.pass;
            checks.push_back(json{{"name", r.name},
                                  {"pass", r.pass},
                                  {"seconds", r.seconds},
                                  {"budget_seconds", r.budget_seconds},
                                  {"detail", r.detail}});
        }
        std::cout << json{{"command", "verify-paper"}, {"checks", checks}, {"all_pass", all}}
                         .dump(2)
                  << "\n";
    } else {
        for (const CheckResult& r : results) {
            all &= r.pass;
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << std::fixed
                      << std::setprecision(2) << r.seconds << " s / " << r.budget_seconds
                      << " s): " << r.detail << "\n";
        }
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_random(std::size_t dim, const std::string& field, std::uint64_t seed, bool baric_draw) {
    FieldSpec spec = parse_field_flag(field);
    Algebra a = random_algebra(dim, spec, seed, baric_draw);
    std::cout << algebra_to_json(a) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-homomorphism analysis of structure-constant algebras"};
    app.require_subcommand(1);

    bool machine = false;
    std::uint64_t seed = 2025;
    std::uint64_t max_scan = 10'000'000;
    std::uint64_t max_cells = 10'000'000;
    std::string file, matrix_file, alpha_text, field_text = "Q";
    std::size_t dim = 2;
    bool baric_draw = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", machine, "machine-readable output (exact scalars as strings)");
    };

    CLI::App* solve = app.add_subcommand("solve", "find all non-trivial solutions and the verdict");
    solve->add_option("file", file, "algebra file (JSON)")->required();
    solve->add_option("--max-scan", max_scan, "cap on vector scans (hard ceiling 10^9)")
        ->check(CLI::Range(std::uint64_t{1}, kHardCeiling));
    add_common(solve);

    CLI::App* certify = app.add_subcommand("certify", "uniqueness certificate with fast paths");
    certify->add_option("file", file, "algebra file (JSON)")->required();
    add_common(certify);

    CLI::App* sncheck = app.add_subcommand("seminat-check", "is the given basis semi-natural?");
    sncheck->add_option("file", file, "algebra file (JSON)")->required();
    add_common(sncheck);

    CLI::App* snmake =
        app.add_subcommand("seminat-make", "build a semi-natural basis from a solution");
    snmake->add_option("file", file, "algebra file (JSON)")->required();
    snmake->add_option("--alpha", alpha_text, "solution tuple, e.g. -1,1,-1")->required();
    add_common(snmake);

    CLI::App* chbasis = app.add_subcommand("change-basis", "transform the structure constants");
    chbasis->add_option("file", file, "algebra file (JSON)")->required();
    chbasis
        ->add_option("matrix", matrix_file,
                     "matrix file: rows of the NEW basis in CURRENT coordinates, one row per line")
        ->required();
    add_common(chbasis);

    CLI::App* censuscmd =
        app.add_subcommand("census", "finite-field census of semi-natural bases and cosets");
    censuscmd->add_option("file", file, "algebra file (JSON)")->required();
    censuscmd->add_option("--max-cells", max_cells, "cap on GL scans (hard ceiling 10^9)")
        ->check(CLI::Range(std::uint64_t{1}, kHardCeiling));
    add_common(censuscmd);

    CLI::App* verify =
        app.add_subcommand("verify-paper", "run the built-in verification suite");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    add_common(verify);

    CLI::App* random = app.add_subcommand("random", "emit a random algebra file");
    random->add_option("--dim", dim, "dimension")->required()->check(CLI::Range(1, 64));
    random->add_option("--field", field_text, "Q (default) or a prime p");
    random->add_option("--seed", seed, "RNG seed");
    random->add_flag("--baric", baric_draw, "draw slices summing to 1 (semi-natural basis)");
    add_common(random);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, machine, max_scan);
        if (certify->parsed()) return cmd_certify(file, machine);
        if (sncheck->parsed()) return cmd_seminat_check(file, machine);
        if (snmake->parsed()) return cmd_seminat_make(file, alpha_text, machine);
        if (chbasis->parsed()) return cmd_change_basis(file, matrix_file, machine);
        if (censuscmd->parsed()) return cmd_census(file, machine, max_cells);
        if (verify->parsed()) return cmd_verify(seed, machine);
        if (random->parsed()) return cmd_random(dim, field_text, seed, baric_draw);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
