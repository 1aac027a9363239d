#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "baric/algebra.hpp"

namespace baric {

/// The complete, finite set of non-trivial solutions of the quadratic
/// system x_i x_j = sum_k gamma(i,j,k) x_k over the algebra's field.
/// These tuples are exactly the weight homomorphisms in coordinates.
struct SolutionSet {
    std::vector<Vector> solutions;  // sorted, distinct, all nonzero
    FieldSpec field;
    bool complete;

    std::size_t size() const { return solutions.size(); }
    bool contains(const Vector& v) const;
};

/// The i-th slice of the structure tensor as a matrix: entry (j,k) is
/// gamma(i,j,k).  Any solution v of the quadratic system satisfies
/// A_i v = v_i v, so v_i is an eigenvalue of A_i in the field.
Matrix slice_matrix(const Algebra& a, std::size_t i);

/// Brute-force scan of all nonzero vectors over GF(p); requires a prime
/// field and p^n <= max_scan.  Deterministic counting order.
SolutionSet solve_exhaustive(const Algebra& a, std::uint64_t max_scan = 10'000'000);

/// Complete solver over any exact field.  Depth-first over coordinates:
/// at level i each in-field eigenvalue lambda of the slice matrix A_i
/// contributes the linear constraints (A_i - lambda I)v = 0 and
/// v_i = lambda, accumulated in an incremental elimination state;
/// inconsistent branches are pruned.  Every consistent leaf is a single
/// point (all coordinates are pinned), so the solution set is finite:
/// on a whole line p + t*d of solutions each equation v_i v_j = linear
/// would force the quadratic coefficient d_i d_j to vanish, making
/// d = 0 over a field.  A positive-dimensional leaf therefore signals a
/// bug and raises a logic error.  Returned points are re-verified
/// against the quadratic system directly.
SolutionSet solve_eigen(const Algebra& a);

/// Default solver policy: the brute-force scan when the field is finite
/// with p^n <= 10^4 (simpler, independently trusted), the eigenvalue
/// solver otherwise.  Used by certification, enumeration, and the CLI.
SolutionSet solve_complete(const Algebra& a);

enum class Verdict { NotBaric, Unique, Multiple };

enum class FastPath {
    /// gamma(i,j,k) does not depend on j; forces equal coordinates,
    /// hence at most one solution.
    ConstantJColumns,
    /// The unique homomorphism's kernel squares to zero (sufficient
    /// nil-kernel witness).
    ZeroSquareKernel,
};

const char* verdict_name(Verdict v);
const char* fast_path_name(FastPath f);

/// Verdict plus the witnessing solutions.  fast_path records a detected
/// sufficient condition; it is informational and the verdict always
/// comes from a complete solver.
struct UniquenessCertificate {
    Verdict verdict;
    SolutionSet solutions;
    std::optional<FastPath> fast_path;
};

/// Decides how many weight homomorphisms the algebra has.  Over GF(p)
/// with p^n <= 10^4 the brute-force scan is used; otherwise the
/// eigenvalue solver.
UniquenessCertificate certify_unique(const Algebra& a);

/// The solutions repackaged as validated weight homomorphisms.
std::vector<WeightHomomorphism> weight_homomorphisms(const Algebra& a);

}  // namespace baric
