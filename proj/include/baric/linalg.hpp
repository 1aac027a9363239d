#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "baric/field.hpp"

namespace baric {

/// Dense exact vector over a single field.  Immutable by convention
/// once built.
class Vector {
public:
    Vector(const FieldSpec& spec, std::size_t len)
        : spec_(spec), v_(len, FieldValue::zero(spec)) {
        if (len == 0) throw Error("vector length must be positive");
    }
    explicit Vector(std::vector<FieldValue> entries);

    const FieldSpec& spec() const { return spec_; }
    std::size_t size() const { return v_.size(); }

    const FieldValue& operator[](std::size_t i) const { return v_[i]; }
    FieldValue& operator[](std::size_t i) { return v_[i]; }

    bool is_zero() const;

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const FieldValue& c) const;
    FieldValue dot(const Vector& o) const;

    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }
    /// Lexicographic; total on vectors of one field and length.
    bool operator<(const Vector& o) const;

    std::string str() const;  // "(a, b, c)"

private:
    FieldSpec spec_;
    std::vector<FieldValue> v_;
};

/// Dense exact matrix, row-major.  All entries share one field.
class Matrix {
public:
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& spec, std::size_t n);
    static Matrix diagonal(const Vector& d);
    static Matrix from_rows(const std::vector<Vector>& rows);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldValue& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    FieldValue& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    Matrix transpose() const;

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    /// Row-major lexicographic; used for canonical representatives.
    bool operator<(const Matrix& o) const;

    /// One row per line, entries space-separated; round-trips through
    /// the matrix text format.
    std::string str() const;

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldValue> e_;
};

/// Exact determinant: fraction-free (Bareiss) elimination over Q,
/// ordinary elimination over GF(p).
FieldValue determinant(const Matrix& m);

/// Exact inverse; throws Error on a singular input.
Matrix invert(const Matrix& m);

/// The full solution set of a consistent linear system: one particular
/// point plus a basis of the homogeneous kernel.
struct AffineSubspace {
    Vector particular;
    std::vector<Vector> basis;
};

/// Solves A x = b completely; std::nullopt when inconsistent.
std::optional<AffineSubspace> solve_affine(const Matrix& a, const Vector& b);

/// Univariate polynomial, coefficients lowest degree first.  The
/// leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
public:
    explicit Polynomial(std::vector<FieldValue> coeffs);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    std::size_t degree() const { return c_.size() - 1; }
    const FieldValue& coeff(std::size_t k) const { return c_[k]; }
    const std::vector<FieldValue>& coeffs() const { return c_; }

    FieldValue eval(const FieldValue& x) const;

    std::string str() const;  // e.g. "x^2 - 3x + 2"

private:
    FieldSpec spec_;
    std::vector<FieldValue> c_;
};

/// Characteristic polynomial det(xI - M), monic of degree n, by the
/// Berkowitz division-free scheme (valid in every characteristic).
Polynomial char_poly(const Matrix& m);

/// All roots of f lying in its coefficient field, sorted, without
/// multiplicity.  Over Q this clears denominators and applies the
/// rational root theorem; factoring the two bound integers is capped at
/// 10^6 trial divisors and aborts with RootSearchBudgetExceeded beyond
/// that.  Over GF(p) every residue is tried.
std::vector<FieldValue> roots_in_field(const Polynomial& f);

/// Component i is the sum of row i's entries.
Vector row_sums(const Matrix& m);

bool is_row_stochastic(const Matrix& m);
bool is_column_stochastic(const Matrix& m);

/// A nonsingular square matrix with prescribed row sums; requires some
/// alpha_i != 0 (with all row sums zero the columns would sum to the
/// zero vector and no nonsingular matrix exists).  Construction: k is
/// the first index with alpha_k != 0; row k = alpha_k e_k; row i =
/// e_i + (alpha_i - 1) e_k for i != k.  Determinant is +/- alpha_k.
Matrix matrix_with_row_sums(const Vector& alpha);

/// Census of all n x n matrices over GF(p) in row-major counting order
/// (entry (0,0) is the most significant base-p digit).  Candidate
/// indices admit range chunking, so scans can be split across workers.
class GlScan {
public:
    GlScan(std::size_t n, std::uint64_t p, std::uint64_t max_cells = 10'000'000);

    std::uint64_t candidate_count() const { return total_; }
    Matrix decode(std::uint64_t index) const;

    /// Applies f to every nonsingular matrix with candidate index in
    /// [lo, hi), in index order.
    template <typename F>
    void for_each_nonsingular(F&& f, std::uint64_t lo, std::uint64_t hi) const {
        for (std::uint64_t i = lo; i < hi; ++i) {
            Matrix m = decode(i);
            if (!determinant(m).is_zero()) f(m);
        }
    }
    template <typename F>
    void for_each_nonsingular(F&& f) const {
        for_each_nonsingular(std::forward<F>(f), 0, total_);
    }

private:
    std::size_t n_;
    FieldSpec spec_;
    std::uint64_t total_;
};

/// Every nonsingular n x n matrix over GF(p), exactly once, in the
/// deterministic GlScan order.
std::vector<Matrix> enumerate_gl(std::size_t n, std::uint64_t p,
                                 std::uint64_t max_cells = 10'000'000);

// Seeded generators used by property tests and the self-check suite.
// All draws come from the supplied engine; there is no global RNG.

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

/// A small scalar: a random residue, or a rational with numerator in
/// [-4, 4] and denominator in [1, 4].
FieldValue random_value(std::mt19937_64& rng, const FieldSpec& spec);

Vector random_vector(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n);
Vector random_nonzero_vector(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n);
Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t rows,
                     std::size_t cols);
Matrix random_nonsingular_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n);
/// Integer entries drawn from [lo, hi], resampled until nonsingular.
Matrix random_integer_nonsingular_matrix(std::mt19937_64& rng, const FieldSpec& spec,
                                         std::size_t n, long lo, long hi);
/// Nonsingular with every row summing to 1.
Matrix random_row_stochastic_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n);

}  // namespace baric
