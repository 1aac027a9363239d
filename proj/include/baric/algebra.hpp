#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "baric/linalg.hpp"

namespace baric {

/// A finite-dimensional algebra given by its structure constants: with
/// basis vectors e_1..e_n, the product is e_i e_j = sum_k gamma(i,j,k) e_k.
/// Indices are 0-based in code, 1-based in files and reports.  No
/// associativity or commutativity is assumed.  Immutable once built.
class Algebra {
public:
    Algebra(const FieldSpec& spec, std::size_t n);

    const FieldSpec& spec() const { return spec_; }
    std::size_t dim() const { return n_; }

    const FieldValue& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return g_[(i * n_ + j) * n_ + k];
    }
    void set_gamma(std::size_t i, std::size_t j, std::size_t k, FieldValue v) {
        g_[(i * n_ + j) * n_ + k] = std::move(v);
    }

    bool operator==(const Algebra& o) const {
        return spec_ == o.spec_ && n_ == o.n_ && g_ == o.g_;
    }

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<FieldValue> g_;
};

/// Bilinear product in coordinates: z_k = sum_{i,j} x_i y_j gamma(i,j,k).
Vector multiply(const Algebra& a, const Vector& x, const Vector& y);

/// True iff gamma(i,j,k) == gamma(j,i,k) for all i,j,k.
bool is_commutative(const Algebra& a);

/// True iff every product's coefficients sum to 1, i.e. the current
/// basis is semi-natural: sum_k gamma(i,j,k) == 1 for all i,j.
bool is_semi_natural(const Algebra& a);

/// The common value of all slice sums sum_k gamma(i,j,k) if they agree,
/// otherwise nullopt.  Value 1 is exactly semi-naturality.
std::optional<FieldValue> constant_structure_sum(const Algebra& a);

/// A change of basis.  Row i of new_in_old holds the coordinates of the
/// i-th NEW basis vector in the CURRENT basis.  Equivalently, new_in_old
/// is the transition matrix from the current basis to the new one.
struct BasisChange {
    Matrix new_in_old;
};

/// Structure constants in the new frame:
///   xi(i,j,q) = sum_{k,l,m} P(i,k) P(j,l) gamma(k,l,m) Pinv(m,q)
/// with P = b.new_in_old.  Products agree with `a` under the coordinate
/// identification.
Algebra change_basis(const Algebra& a, const BasisChange& b);

/// True iff w != 0 and sum_k gamma(i,j,k) w_k == w_i w_j for all i,j;
/// such w are exactly the coordinate tuples of algebra homomorphisms
/// onto the scalar field.
bool is_weight_homomorphism(const Algebra& a, const Vector& w);

/// The first (i,j) whose product equation fails for v, if any; used for
/// error reporting.  Does not include the nonzero requirement.
std::optional<std::pair<std::size_t, std::size_t>> first_weight_violation(const Algebra& a,
                                                                          const Vector& v);

/// A validated weight homomorphism, stored as the value tuple
/// (w(e_1), ..., w(e_n)) in the algebra's current basis.
class WeightHomomorphism {
public:
    WeightHomomorphism(const Algebra& a, Vector coords);
    const Vector& coords() const { return coords_; }

private:
    Vector coords_;
};

/// n-1 independent vectors spanning ker w = {x : sum_i w_i x_i = 0}.
std::vector<Vector> kernel_basis(const WeightHomomorphism& w);

/// True iff every product of two kernel basis vectors (all ordered
/// pairs) is zero; a sufficient witness for the kernel being nil.
bool kernel_square_zero(const Algebra& a, const WeightHomomorphism& w);

/// Searches ker w for a nonzero idempotent u (u*u == u): basis vectors
/// always, plus every kernel vector when the field is finite and the
/// scan fits under max_scan.  A witness search only; absence over the
/// rationals is not a proof.
std::optional<Vector> kernel_idempotent_witness(const Algebra& a, const WeightHomomorphism& w,
                                                std::uint64_t max_scan = 100'000);

/// Cartesian product: dimension n_a + n_b, cross products zero.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// Deterministic in seed.  With baric = true every (i,j) slice is drawn
/// with entries summing to 1 (the last entry balances the rest), so the
/// result's basis is semi-natural.
Algebra random_algebra(std::size_t n, const FieldSpec& spec, std::uint64_t seed, bool baric);

/// Same slice-balancing draw from a caller-owned engine.
Algebra random_algebra(std::mt19937_64& rng, std::size_t n, const FieldSpec& spec, bool baric);

}  // namespace baric
