#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace baric {

/// Base class of every error this library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or scan would exceed its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Rational root isolation ran out of its trial-division budget.
/// Kept distinct from Error so callers can tell "too hard" from "no roots".
class RootSearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

// Modular arithmetic on residues in [0, p).  p < 2^31, so products fit
// in 64 bits without overflow.
namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Multiplicative inverse of a nonzero residue (p must be prime).
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace modp

/// Identifies the scalar field: the rationals, or GF(p) for a prime p.
/// Primality is checked at construction by trial division; p is limited
/// to 2^31 so residues stay in machine words.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// The modulus; only meaningful for PrimeField.
    std::uint64_t prime() const;

    bool operator==(const FieldSpec& o) const = default;

    std::string str() const;

private:
    FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact scalar in a runtime-chosen field.  Rationals are kept in
/// lowest terms with positive denominator; prime-field values are
/// residues in [0, p-1].  Immutable in practice and freely shareable
/// between threads.
class FieldValue {
public:
    /// Rational zero; containers need a default constructor.
    FieldValue() : spec_(FieldSpec::rationals()), v_(mpq_class(0)) {}

    static FieldValue zero(const FieldSpec& spec) { return from_integer(0, spec); }
    static FieldValue one(const FieldSpec& spec) { return from_integer(1, spec); }
    static FieldValue from_integer(long n, const FieldSpec& spec);
    static FieldValue from_mpz(const mpz_class& n, const FieldSpec& spec);

    /// Wraps an mpq, canonicalizing it.
    static FieldValue rational(mpq_class q);

    /// Residue mod p; r is reduced on the way in.
    static FieldValue residue(std::uint64_t r, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;

    /// Underlying rational; valid only over the rationals.
    const mpq_class& rat() const;
    /// Underlying residue; valid only over a prime field.
    std::uint64_t res() const;

    FieldValue operator+(const FieldValue& o) const;
    FieldValue operator-(const FieldValue& o) const;
    FieldValue operator*(const FieldValue& o) const;
    FieldValue operator/(const FieldValue& o) const;
    FieldValue operator-() const;
    FieldValue inverse() const;

    FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
    FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
    FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }
    FieldValue& operator/=(const FieldValue& o) { return *this = *this / o; }

    bool operator==(const FieldValue& o) const;
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    /// Total order on values of one field (rationals by value, residues
    /// by representative).  Used for canonical sorting, not algebra.
    int compare(const FieldValue& o) const;
    bool operator<(const FieldValue& o) const { return compare(o) < 0; }

    /// Canonical literal: "n", "n/d" (reduced, d > 0), or a residue.
    std::string str() const;

private:
    FieldValue(FieldSpec spec, std::variant<mpq_class, std::uint64_t> v)
        : spec_(spec), v_(std::move(v)) {}

    void require_same_spec(const FieldValue& o) const;

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t> v_;
};

/// Parses "[-]digits" or "[-]digits/digits" (the single scalar grammar
/// used everywhere: files, flags, reports).  Prime fields accept only
/// integer literals, reduced mod p.
FieldValue parse_value(std::string_view text, const FieldSpec& spec);

/// Lazy 0,1,...,p-1 over a prime field; errors on the rationals.
class FieldEnumeration {
public:
    explicit FieldEnumeration(const FieldSpec& spec);

    std::uint64_t size() const { return spec_.prime(); }
    FieldValue operator[](std::uint64_t i) const;

    class iterator {
    public:
        iterator(const FieldEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
        FieldValue operator*() const { return (*e_)[i_]; }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }
    private:
        const FieldEnumeration* e_;
        std::uint64_t i_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, size()); }

private:
    FieldSpec spec_;
};

inline FieldEnumeration enumerate_field(const FieldSpec& spec) {
    return FieldEnumeration(spec);
}

}  // namespace baric
