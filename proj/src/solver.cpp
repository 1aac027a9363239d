#include "baric/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace baric {

bool SolutionSet::contains(const Vector& v) const {
    return std::binary_search(solutions.begin(), solutions.end(), v);
}

Matrix slice_matrix(const Algebra& a, std::size_t i) {
    const std::size_t n = a.dim();
    Matrix m(a.spec(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(j, k) = a.gamma(i, j, k);
    return m;
}

SolutionSet solve_exhaustive(const Algebra& a, std::uint64_t max_scan) {
    const FieldSpec spec = a.spec();
    if (!spec.is_prime_field()) throw Error("exhaustive solve requires a finite field");
    const std::size_t n = a.dim();
    const std::uint64_t p = spec.prime();

    std::uint64_t count = 1;
    for (std::size_t t = 0; t < n; ++t) {
        if (count > max_scan / p)
            throw CapExceeded("exhaustive solve too large: " + std::to_string(p) + "^" +
                              std::to_string(n) + " exceeds cap " + std::to_string(max_scan));
        count *= p;
    }

    // Raw residues for the scan; the last coordinate is the fastest
    // counting digit, so results come out in lexicographic order.
    std::vector<std::uint64_t> g(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g[(i * n + j) * n + k] = a.gamma(i, j, k).res();

    SolutionSet out{{}, spec, true};
    std::vector<std::uint64_t> v(n);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t rem = idx;
        for (std::size_t t = n; t-- > 0;) {
            v[t] = rem % p;
            rem /= p;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                std::uint64_t lhs = 0;
                const std::uint64_t* gij = &g[(i * n + j) * n];
                for (std::size_t k = 0; k < n; ++k)
                    lhs = modp::add(lhs, modp::mul(gij[k], v[k], p), p);
                if (lhs != modp::mul(v[i], v[j], p)) ok = false;
            }
        if (ok) {
            Vector sol(spec, n);
            for (std::size_t t = 0; t < n; ++t) sol[t] = FieldValue::residue(v[t], spec);
            out.solutions.push_back(std::move(sol));
        }
    }
    return out;  // counting order == sorted order
}

namespace {

// Row-reduced linear system carried down the search tree.  Rows are
// kept reduced against each other; adding a row reports consistency.
class EchelonState {
public:
    explicit EchelonState(const FieldSpec& spec, std::size_t n) : spec_(spec), n_(n) {}

    bool consistent() const { return consistent_; }
    std::size_t rank() const { return rows_.size(); }

    void add(Vector row, FieldValue rhs) {
        if (!consistent_) return;
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const FieldValue& f = row[pivots_[t]];
            if (f.is_zero()) continue;
            FieldValue c = f;  // row[pivots_[t]] changes below
            row = row - rows_[t].scaled(c);
            rhs = rhs - rhs_[t] * c;
        }
        std::size_t p = n_;
        for (std::size_t j = 0; j < n_; ++j)
            if (!row[j].is_zero()) {
                p = j;
                break;
            }
        if (p == n_) {
            if (!rhs.is_zero()) consistent_ = false;
            return;
        }
        FieldValue inv = row[p].inverse();
        row = row.scaled(inv);
        rhs = rhs * inv;
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const FieldValue& f = rows_[t][p];
            if (f.is_zero()) continue;
            FieldValue c = f;
            rows_[t] = rows_[t] - row.scaled(c);
            rhs_[t] = rhs_[t] - rhs * c;
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
        pivots_.push_back(p);
    }

    // Only valid at full rank.
    Vector point() const {
        Vector x(spec_, n_);
        for (std::size_t t = 0; t < rows_.size(); ++t) x[pivots_[t]] = rhs_[t];
        return x;
    }

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<FieldValue> rhs_;
    std::vector<std::size_t> pivots_;
    bool consistent_ = true;
};

void eigen_descend(const Algebra& a, const std::vector<Matrix>& slices,
                   const std::vector<std::vector<FieldValue>>& roots, std::size_t level,
                   const EchelonState& state, std::set<Vector>& found) {
    const std::size_t n = a.dim();
    const FieldSpec spec = a.spec();
    if (level == n) {
        if (state.rank() != n)
            throw std::logic_error("eigenvalue search reached a non-point leaf");
        Vector x = state.point();
        if (!x.is_zero() && !first_weight_violation(a, x).has_value()) found.insert(std::move(x));
        return;
    }
    for (const FieldValue& lambda : roots[level]) {
        EchelonState branch = state;
        for (std::size_t j = 0; j < n; ++j) {
            // (A_i - lambda I) v = 0, one row at a time
            Vector r = slices[level].row(j);
            r[j] -= lambda;
            branch.add(std::move(r), FieldValue::zero(spec));
            if (!branch.consistent()) break;
        }
        if (branch.consistent()) {
            Vector pin(spec, n);
            pin[level] = FieldValue::one(spec);
            branch.add(std::move(pin), lambda);
        }
        if (branch.consistent()) eigen_descend(a, slices, roots, level + 1, branch, found);
    }
}

}  // namespace

SolutionSet solve_eigen(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> slices;
    std::vector<std::vector<FieldValue>> roots;
    slices.reserve(n);
    roots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        slices.push_back(slice_matrix(a, i));
        roots.push_back(roots_in_field(char_poly(slices.back())));
    }

    std::set<Vector> found;
    EchelonState state(a.spec(), n);
    eigen_descend(a, slices, roots, 0, state, found);

    SolutionSet out{{found.begin(), found.end()}, a.spec(), true};
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NotBaric: return "NotBaric";
        case Verdict::Unique: return "Unique";
        case Verdict::Multiple: return "Multiple";
    }
    return "?";
}

const char* fast_path_name(FastPath f) {
    switch (f) {
        case FastPath::ConstantJColumns: return "ConstantJColumns";
        case FastPath::ZeroSquareKernel: return "ZeroSquareKernel";
    }
    return "?";
}

namespace {

bool gamma_independent_of_j(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.gamma(i, j, k) != a.gamma(i, 0, k)) return false;
    return true;
}

bool fits_exhaustive(const Algebra& a, std::uint64_t cap) {
    if (!a.spec().is_prime_field()) return false;
    const std::uint64_t p = a.spec().prime();
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < a.dim(); ++t) {
        if (count > cap / p) return false;
        count *= p;
    }
    return true;
}

}  // namespace

SolutionSet solve_complete(const Algebra& a) {
    return fits_exhaustive(a, 10'000) ? solve_exhaustive(a) : solve_eigen(a);
}

UniquenessCertificate certify_unique(const Algebra& a) {
    SolutionSet sols = solve_complete(a);
    Verdict verdict = sols.size() == 0   ? Verdict::NotBaric
                      : sols.size() == 1 ? Verdict::Unique
                                         : Verdict::Multiple;
    std::optional<FastPath> fast;
    if (verdict == Verdict::Unique) {
        if (gamma_independent_of_j(a)) {
            fast = FastPath::ConstantJColumns;
        } else {
            WeightHomomorphism w(a, sols.solutions.front());
            if (kernel_square_zero(a, w)) fast = FastPath::ZeroSquareKernel;
        }
    }
    return UniquenessCertificate{verdict, std::move(sols), fast};
}

std::vector<WeightHomomorphism> weight_homomorphisms(const Algebra& a) {
    SolutionSet sols = solve_complete(a);
    std::vector<WeightHomomorphism> out;
    out.reserve(sols.size());
    for (const Vector& v : sols.solutions) out.emplace_back(a, v);
    return out;
}

}  // namespace baric
