#include "baric/algebra.hpp"

namespace baric {

Algebra::Algebra(const FieldSpec& spec, std::size_t n)
    : spec_(spec), n_(n), g_(n * n * n, FieldValue::zero(spec)) {
    if (n == 0) throw Error("algebra dimension must be positive");
}

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw Error("vector length does not match dimension");
    if (!(x.spec() == a.spec()) || !(y.spec() == a.spec()))
        throw Error("vector field does not match the algebra");
    Vector z(a.spec(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            FieldValue c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const FieldValue& g = a.gamma(i, j, k);
                if (!g.is_zero()) z[k] += c * g;
            }
        }
    }
    return z;
}

bool is_commutative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.gamma(i, j, k) != a.gamma(j, i, k)) return false;
    return true;
}

namespace {

FieldValue slice_sum(const Algebra& a, std::size_t i, std::size_t j) {
    FieldValue s = FieldValue::zero(a.spec());
    for (std::size_t k = 0; k < a.dim(); ++k) s += a.gamma(i, j, k);
    return s;
}

}  // namespace

bool is_semi_natural(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!slice_sum(a, i, j).is_one()) return false;
    return true;
}

std::optional<FieldValue> constant_structure_sum(const Algebra& a) {
    FieldValue common = slice_sum(a, 0, 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (slice_sum(a, i, j) != common) return std::nullopt;
    return common;
}

Algebra change_basis(const Algebra& a, const BasisChange& b) {
    const std::size_t n = a.dim();
    const Matrix& p = b.new_in_old;
    if (p.rows() != n || p.cols() != n) throw Error("basis-change matrix size mismatch");
    if (!(p.spec() == a.spec())) throw Error("basis-change field mismatch");
    Matrix pinv = invert(p);  // throws on singular input

    Algebra out(a.spec(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // t_m = coordinates of (new_i * new_j) in the old basis
            Vector t(a.spec(), n);
            for (std::size_t k = 0; k < n; ++k) {
                if (p.at(i, k).is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (p.at(j, l).is_zero()) continue;
                    FieldValue c = p.at(i, k) * p.at(j, l);
                    for (std::size_t m = 0; m < n; ++m) {
                        const FieldValue& g = a.gamma(k, l, m);
                        if (!g.is_zero()) t[m] += c * g;
                    }
                }
            }
            for (std::size_t q = 0; q < n; ++q) {
                FieldValue x = FieldValue::zero(a.spec());
                for (std::size_t m = 0; m < n; ++m) x += t[m] * pinv.at(m, q);
                out.set_gamma(i, j, q, std::move(x));
            }
        }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_weight_violation(const Algebra& a,
                                                                          const Vector& v) {
    const std::size_t n = a.dim();
    if (v.size() != n) throw Error("vector length does not match dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldValue lhs = FieldValue::zero(a.spec());
            for (std::size_t k = 0; k < n; ++k) lhs += a.gamma(i, j, k) * v[k];
            if (lhs != v[i] * v[j]) return std::make_pair(i, j);
        }
    return std::nullopt;
}

bool is_weight_homomorphism(const Algebra& a, const Vector& w) {
    if (w.is_zero()) return false;
    return !first_weight_violation(a, w).has_value();
}

WeightHomomorphism::WeightHomomorphism(const Algebra& a, Vector coords)
    : coords_(std::move(coords)) {
    if (coords_.is_zero()) throw Error("weight homomorphism must be non-trivial");
    if (auto bad = first_weight_violation(a, coords_)) {
        throw Error("not a weight homomorphism: product equation (" +
                    std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1) +
                    ") fails for " + coords_.str());
    }
}

std::vector<Vector> kernel_basis(const WeightHomomorphism& w) {
    const Vector& c = w.coords();
    const std::size_t n = c.size();
    const FieldSpec spec = c.spec();
    std::size_t t = n;
    for (std::size_t i = n; i-- > 0;)
        if (!c[i].is_zero()) {
            t = i;
            break;
        }
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == t) continue;
        Vector v(spec, n);
        v[i] = FieldValue::one(spec);
        v[t] = -(c[i] / c[t]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool kernel_square_zero(const Algebra& a, const WeightHomomorphism& w) {
    std::vector<Vector> basis = kernel_basis(w);
    for (const Vector& u : basis)
        for (const Vector& v : basis)
            if (!multiply(a, u, v).is_zero()) return false;
    return true;
}

std::optional<Vector> kernel_idempotent_witness(const Algebra& a, const WeightHomomorphism& w,
                                                std::uint64_t max_scan) {
    std::vector<Vector> basis = kernel_basis(w);
    for (const Vector& u : basis)
        if (!u.is_zero() && multiply(a, u, u) == u) return u;

    // Finite field: walk the whole kernel when it fits.
    const FieldSpec spec = a.spec();
    if (spec.is_prime_field() && !basis.empty()) {
        const std::uint64_t p = spec.prime();
        std::uint64_t count = 1;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (count > max_scan / p) return std::nullopt;  // too large: stay a basis-only search
            count *= p;
        }
        for (std::uint64_t idx = 1; idx < count; ++idx) {
            std::uint64_t rem = idx;
            Vector u(spec, a.dim());
            for (const Vector& b : basis) {
                std::uint64_t c = rem % p;
                rem /= p;
                if (c != 0) u = u + b.scaled(FieldValue::residue(c, spec));
            }
            if (!u.is_zero() && multiply(a, u, u) == u) return u;
        }
    }
    return std::nullopt;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    if (!(a.spec() == b.spec())) throw Error("direct product requires one common field");
    const std::size_t na = a.dim(), nb = b.dim();
    Algebra c(a.spec(), na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) c.set_gamma(i, j, k, a.gamma(i, j, k));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                c.set_gamma(na + i, na + j, na + k, b.gamma(i, j, k));
    return c;
}

Algebra random_algebra(std::mt19937_64& rng, std::size_t n, const FieldSpec& spec, bool baric) {
    Algebra a(spec, n);
    const FieldValue one = FieldValue::one(spec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (baric) {
                FieldValue acc = FieldValue::zero(spec);
                for (std::size_t k = 0; k + 1 < n; ++k) {
                    FieldValue v = random_value(rng, spec);
                    acc += v;
                    a.set_gamma(i, j, k, std::move(v));
                }
                a.set_gamma(i, j, n - 1, one - acc);
            } else {
                for (std::size_t k = 0; k < n; ++k) a.set_gamma(i, j, k, random_value(rng, spec));
            }
        }
    return a;
}

Algebra random_algebra(std::size_t n, const FieldSpec& spec, std::uint64_t seed, bool baric) {
    std::mt19937_64 rng(seed);
    return random_algebra(rng, n, spec, baric);
}

}  // namespace baric
