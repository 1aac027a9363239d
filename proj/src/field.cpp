#include "baric/field.hpp"

#include <cctype>

namespace baric {

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
    return pow(a, p - 2, p);
}

}  // namespace modp

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31))
        throw Error("prime modulus too large (limit 2^31): " + std::to_string(p));
    if (!is_prime_u64(p))
        throw Error("modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

std::uint64_t FieldSpec::prime() const {
    if (kind_ != FieldKind::PrimeField) throw Error("field has no modulus: " + str());
    return p_;
}

std::string FieldSpec::str() const {
    return kind_ == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldValue FieldValue::from_integer(long n, const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldValue(spec, mpq_class(n));
    std::uint64_t p = spec.prime();
    long m = n % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return FieldValue(spec, static_cast<std::uint64_t>(m));
}

FieldValue FieldValue::from_mpz(const mpz_class& n, const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldValue(spec, mpq_class(n));
    std::uint64_t r = mpz_fdiv_ui(n.get_mpz_t(), spec.prime());
    return FieldValue(spec, r);
}

FieldValue FieldValue::rational(mpq_class q) {
    q.canonicalize();
    return FieldValue(FieldSpec::rationals(), std::move(q));
}

FieldValue FieldValue::residue(std::uint64_t r, const FieldSpec& spec) {
    return FieldValue(spec, r % spec.prime());
}

bool FieldValue::is_zero() const {
    if (spec_.is_rationals()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool FieldValue::is_one() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1 % spec_.prime();
}

const mpq_class& FieldValue::rat() const {
    if (!spec_.is_rationals()) throw Error("value is not rational");
    return std::get<mpq_class>(v_);
}

std::uint64_t FieldValue::res() const {
    if (!spec_.is_prime_field()) throw Error("value is not a prime-field residue");
    return std::get<std::uint64_t>(v_);
}

void FieldValue::require_same_spec(const FieldValue& o) const {
    if (!(spec_ == o.spec_))
        throw Error("mismatched fields: " + spec_.str() + " vs " + o.spec_.str());
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
    require_same_spec(o);
    if (spec_.is_rationals())
        return FieldValue(spec_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    return FieldValue(spec_, modp::add(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                                       spec_.prime()));
}

FieldValue FieldValue::operator-(const FieldValue& o) const {
    require_same_spec(o);
    if (spec_.is_rationals())
        return FieldValue(spec_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
    return FieldValue(spec_, modp::sub(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                                       spec_.prime()));
}

FieldValue FieldValue::operator*(const FieldValue& o) const {
    require_same_spec(o);
    if (spec_.is_rationals())
        return FieldValue(spec_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    return FieldValue(spec_, modp::mul(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                                       spec_.prime()));
}

FieldValue FieldValue::operator/(const FieldValue& o) const {
    require_same_spec(o);
    if (o.is_zero()) throw Error("division by zero");
    if (spec_.is_rationals())
        return FieldValue(spec_, mpq_class(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_)));
    std::uint64_t p = spec_.prime();
    return FieldValue(spec_, modp::mul(std::get<std::uint64_t>(v_),
                                       modp::inv(std::get<std::uint64_t>(o.v_), p), p));
}

FieldValue FieldValue::operator-() const {
    if (spec_.is_rationals()) return FieldValue(spec_, mpq_class(-std::get<mpq_class>(v_)));
    std::uint64_t p = spec_.prime();
    return FieldValue(spec_, modp::sub(0, std::get<std::uint64_t>(v_), p));
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (spec_.is_rationals()) return FieldValue(spec_, mpq_class(1 / std::get<mpq_class>(v_)));
    return FieldValue(spec_, modp::inv(std::get<std::uint64_t>(v_), spec_.prime()));
}

bool FieldValue::operator==(const FieldValue& o) const {
    if (!(spec_ == o.spec_)) return false;
    if (spec_.is_rationals()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

int FieldValue::compare(const FieldValue& o) const {
    require_same_spec(o);
    if (spec_.is_rationals()) return cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
    std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    return a < b ? -1 : (a == b ? 0 : 1);
}

std::string FieldValue::str() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

FieldValue parse_value(std::string_view text, const FieldSpec& spec) {
    auto fail = [&](const std::string& why) -> Error {
        return Error("bad scalar literal \"" + std::string(text) + "\": " + why);
    };

    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    auto scan_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };

    std::string num = scan_digits();
    std::string den;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = scan_digits();
    }
    if (pos != text.size()) throw fail("trailing characters");

    mpz_class n(num, 10);
    if (neg) n = -n;

    if (den.empty()) {
        return FieldValue::from_mpz(n, spec);
    }
    if (spec.is_prime_field()) throw fail("prime fields accept integer literals only");
    mpz_class d(den, 10);
    if (d == 0) throw fail("zero denominator");
    return FieldValue::rational(mpq_class(n, d));
}

FieldEnumeration::FieldEnumeration(const FieldSpec& spec) : spec_(spec) {
    if (!spec.is_prime_field()) throw Error("cannot enumerate an infinite field");
}

FieldValue FieldEnumeration::operator[](std::uint64_t i) const {
    return FieldValue::residue(i, spec_);
}

}  // namespace baric
