#include "baric/seminat.hpp"

#include <algorithm>
#include <stdexcept>

namespace baric {

SemiNaturalBasis::SemiNaturalBasis(Algebra algebra, Matrix m)
    : algebra_(std::move(algebra)), m_(std::move(m)) {
    const std::size_t n = algebra_.dim();
    if (m_.rows() != n || m_.cols() != n) throw Error("transition matrix size mismatch");
    if (!(m_.spec() == algebra_.spec())) throw Error("transition matrix field mismatch");
    if (!is_semi_natural(in_new_basis()))
        throw Error("transition matrix does not define a semi-natural basis");
}

Algebra SemiNaturalBasis::in_new_basis() const {
    return change_basis(algebra_, BasisChange{invert(m_)});
}

SemiNaturalBasis seminat_from_solution(const Algebra& a, const Vector& alpha) {
    if (alpha.size() != a.dim()) throw Error("solution length does not match dimension");
    if (alpha.is_zero()) throw Error("the zero tuple is not a non-trivial solution");
    if (auto bad = first_weight_violation(a, alpha)) {
        throw Error("alpha is not a solution: product equation (" +
                    std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1) +
                    ") fails for " + alpha.str());
    }
    bool all_nonzero = true;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i].is_zero()) {
            all_nonzero = false;
            break;
        }
    Matrix m = all_nonzero ? Matrix::diagonal(alpha) : matrix_with_row_sums(alpha);
    return SemiNaturalBasis(a, std::move(m));
}

bool row_sum_solution_check(const Algebra& a, const Matrix& m) {
    Algebra transformed = change_basis(a, BasisChange{invert(m)});  // throws on singular m
    bool semi_natural = is_semi_natural(transformed);
    Vector alpha = row_sums(m);
    bool solves = !alpha.is_zero() && !first_weight_violation(a, alpha).has_value();
    return semi_natural == solves;
}

CosetPartition coset_partition(const std::vector<Matrix>& mats) {
    if (mats.empty()) throw Error("cannot partition an empty matrix list");
    const FieldSpec spec = mats[0].spec();

    std::vector<std::vector<Matrix>> classes;
    std::vector<Matrix> rep_inv;  // inverse of each class representative
    for (const Matrix& m : mats) {
        if (!(m.spec() == spec)) throw Error("coset partition needs one common field");
        bool placed = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (is_row_stochastic(rep_inv[c] * m)) {
                classes[c].push_back(m);
                placed = true;
                break;
            }
        }
        if (!placed) {
            rep_inv.push_back(invert(m));  // throws on a singular member
            classes.push_back({m});
        }
    }

    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return CosetPartition{std::move(classes), spec};
}

std::vector<Matrix> enumerate_seminat(const Algebra& a, std::uint64_t max_cells) {
    if (!a.spec().is_prime_field())
        throw Error("semi-natural basis enumeration requires a finite field");
    SolutionSet eth = solve_complete(a);

    std::vector<Matrix> out;
    GlScan scan(a.dim(), a.spec().prime(), max_cells);
    scan.for_each_nonsingular([&](const Matrix& m) {
        if (!eth.contains(row_sums(m))) return;
        // Cross-check the claimed basis really is semi-natural.
        if (!is_semi_natural(change_basis(a, BasisChange{invert(m)})))
            throw std::logic_error("row-sum filter admitted a non-semi-natural basis");
        out.push_back(m);
    });
    return out;
}

WeightHomomorphism seminat_weight(const SemiNaturalBasis& b) {
    return WeightHomomorphism(b.algebra(), row_sums(b.transition()));
}

bool certify_unique_via_transitions(const Algebra& a, std::uint64_t max_cells) {
    std::vector<Matrix> bases = enumerate_seminat(a, max_cells);
    if (bases.empty()) throw Error("algebra is not baric: no semi-natural basis exists");
    return coset_partition(bases).classes.size() == 1;
}

bool verify_pullback(const Algebra& a, std::uint64_t max_cells) {
    if (!a.spec().is_prime_field()) throw Error("pullback check requires a finite field");
    SolutionSet eth = solve_complete(a);
    bool ok = true;
    GlScan scan(a.dim(), a.spec().prime(), max_cells);
    scan.for_each_nonsingular([&](const Matrix& m) {
        if (!ok) return;
        bool via_row_sums = eth.contains(row_sums(m));
        bool via_constants = is_semi_natural(change_basis(a, BasisChange{invert(m)}));
        if (via_row_sums != via_constants) ok = false;
    });
    return ok;
}

CensusReport census(const Algebra& a, std::uint64_t max_cells) {
    if (!a.spec().is_prime_field()) throw Error("census requires a finite field");
    CensusReport r;
    r.dim = a.dim();
    r.prime = a.spec().prime();

    SolutionSet eth = solve_complete(a);
    r.num_weight_homs = eth.size();

    std::vector<Matrix> bases = enumerate_seminat(a, max_cells);
    r.num_seminat_bases = bases.size();

    std::size_t rs = 0;
    GlScan scan(a.dim(), a.spec().prime(), max_cells);
    scan.for_each_nonsingular([&](const Matrix& m) {
        if (is_row_stochastic(m)) ++rs;
    });
    r.rs_group_order = rs;

    if (!bases.empty()) {
        CosetPartition part = coset_partition(bases);
        r.num_classes = part.classes.size();
        for (const auto& cls : part.classes) r.class_sizes.push_back(cls.size());
    }
    return r;
}

}  // namespace baric
