#include "baric/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace baric {

Vector::Vector(std::vector<FieldValue> entries)
    : spec_(entries.empty() ? FieldSpec::rationals() : entries[0].spec()), v_(std::move(entries)) {
    if (v_.empty()) throw Error("vector length must be positive");
    for (const auto& x : v_)
        if (!(x.spec() == spec_)) throw Error("vector entries from mixed fields");
}

bool Vector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const FieldValue& x) { return x.is_zero(); });
}

Vector Vector::operator+(const Vector& o) const {
    if (size() != o.size()) throw Error("vector size mismatch");
    Vector r(spec_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (size() != o.size()) throw Error("vector size mismatch");
    Vector r(spec_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] - o[i];
    return r;
}

Vector Vector::scaled(const FieldValue& c) const {
    Vector r(spec_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] * c;
    return r;
}

FieldValue Vector::dot(const Vector& o) const {
    if (size() != o.size()) throw Error("vector size mismatch");
    FieldValue s = FieldValue::zero(spec_);
    for (std::size_t i = 0; i < size(); ++i) s += v_[i] * o[i];
    return s;
}

bool Vector::operator==(const Vector& o) const {
    return spec_ == o.spec_ && v_ == o.v_;
}

bool Vector::operator<(const Vector& o) const {
    if (size() != o.size()) return size() < o.size();
    for (std::size_t i = 0; i < size(); ++i) {
        int c = v_[i].compare(o[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Vector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += v_[i].str();
    }
    return s + ")";
}

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), e_(rows * cols, FieldValue::zero(spec)) {
    if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldValue::one(spec);
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.spec(), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) throw Error("matrix dimensions must be positive");
    Matrix m(rows[0].spec(), rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw Error("ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(spec_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vector Matrix::col(std::size_t j) const {
    Vector v(spec_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix size mismatch in product");
    if (!(spec_ == o.spec_)) throw Error("mismatched fields in matrix product");
    Matrix r(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw Error("matrix size mismatch in product");
    Vector r(spec_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        FieldValue s = FieldValue::zero(spec_);
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        int c = e_[i].compare(o.e_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Matrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += at(i, j).str();
        }
        if (i + 1 < rows_) s += "\n";
    }
    return s;
}

namespace {

// Bareiss fraction-free elimination; exact over any field, keeps
// intermediate rationals small.
FieldValue det_bareiss(Matrix b) {
    const std::size_t n = b.rows();
    const FieldSpec spec = b.spec();
    int sign = 1;
    FieldValue prev = FieldValue::one(spec);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && b.at(r, k).is_zero()) ++r;
            if (r == n) return FieldValue::zero(spec);
            for (std::size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
            b.at(i, k) = FieldValue::zero(spec);
        }
        prev = b.at(k, k);
    }
    FieldValue d = b.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

FieldValue det_gauss(Matrix b) {
    const std::size_t n = b.rows();
    const FieldSpec spec = b.spec();
    FieldValue d = FieldValue::one(spec);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && b.at(r, k).is_zero()) ++r;
        if (r == n) return FieldValue::zero(spec);
        if (r != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(b.at(k, j), b.at(r, j));
            d = -d;
        }
        const FieldValue pivot = b.at(k, k);
        d *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (b.at(i, k).is_zero()) continue;
            FieldValue f = b.at(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    return d;
}

}  // namespace

FieldValue determinant(const Matrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    return m.spec().is_rationals() ? det_bareiss(m) : det_gauss(m);
}

Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw Error("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec spec = m.spec();
    Matrix a = m;
    Matrix inv = Matrix::identity(spec, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a.at(r, k).is_zero()) ++r;
        if (r == n) throw Error("matrix is singular");
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(r, j));
                std::swap(inv.at(k, j), inv.at(r, j));
            }
        }
        FieldValue piv = a.at(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) *= piv;
            inv.at(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            FieldValue f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::optional<AffineSubspace> solve_affine(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw Error("system dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    const FieldSpec spec = a.spec();

    Matrix r(spec, m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = a.at(i, j);
        r.at(i, n) = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && r.at(sel, col).is_zero()) ++sel;
        if (sel == m) continue;
        if (sel != row)
            for (std::size_t j = 0; j <= n; ++j) std::swap(r.at(row, j), r.at(sel, j));
        FieldValue piv = r.at(row, col).inverse();
        for (std::size_t j = col; j <= n; ++j) r.at(row, j) *= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            FieldValue f = r.at(i, col);
            for (std::size_t j = col; j <= n; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!r.at(i, n).is_zero()) return std::nullopt;

    Vector particular(spec, n);
    for (std::size_t t = 0; t < pivot_col.size(); ++t) particular[pivot_col[t]] = r.at(t, n);

    std::vector<Vector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        Vector k(spec, n);
        k[col] = FieldValue::one(spec);
        for (std::size_t t = 0; t < pivot_col.size(); ++t)
            k[pivot_col[t]] = -r.at(t, col);
        basis.push_back(std::move(k));
    }
    return AffineSubspace{std::move(particular), std::move(basis)};
}

Polynomial::Polynomial(std::vector<FieldValue> coeffs)
    : spec_(coeffs.empty() ? FieldSpec::rationals() : coeffs[0].spec()), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("polynomial needs at least one coefficient");
    for (const auto& x : c_)
        if (!(x.spec() == spec_)) throw Error("polynomial coefficients from mixed fields");
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

FieldValue Polynomial::eval(const FieldValue& x) const {
    FieldValue acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string t = c_[k].str();
        bool neg = t[0] == '-';
        if (neg) t = t.substr(1);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        bool unit = t == "1";
        if (k == 0) {
            s += t;
        } else {
            if (!unit) s += t + "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw Error("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec spec = m.spec();
    const FieldValue one = FieldValue::one(spec);
    const FieldValue zero = FieldValue::zero(spec);

    // Coefficients of det(xI - trailing block), highest degree first.
    std::vector<FieldValue> v = {one, -m.at(n - 1, n - 1)};
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t blk = n - 1 - i;  // size of the trailing block

        // Column [1, -a, -(R S), -(R M S), ...] of the Berkowitz
        // Toeplitz factor, where a = m(i,i), R/S are the row/column
        // bordering the trailing block M.
        std::vector<FieldValue> col;
        col.reserve(blk + 2);
        col.push_back(one);
        col.push_back(-m.at(i, i));
        std::vector<FieldValue> q(blk, zero);
        for (std::size_t t = 0; t < blk; ++t) q[t] = m.at(i + 1 + t, i);
        for (std::size_t t = 0; t < blk; ++t) {
            FieldValue c = zero;
            for (std::size_t j = 0; j < blk; ++j) c += m.at(i, i + 1 + j) * q[j];
            col.push_back(-c);
            if (t + 1 < blk) {
                std::vector<FieldValue> next(blk, zero);
                for (std::size_t r = 0; r < blk; ++r)
                    for (std::size_t j = 0; j < blk; ++j)
                        next[r] += m.at(i + 1 + r, i + 1 + j) * q[j];
                q = std::move(next);
            }
        }

        std::vector<FieldValue> out(blk + 2, zero);
        for (std::size_t s = 0; s < out.size(); ++s)
            for (std::size_t j = 0; j < v.size() && j <= s; ++j)
                if (s - j < col.size()) out[s] += col[s - j] * v[j];
        v = std::move(out);
    }

    std::reverse(v.begin(), v.end());  // lowest degree first
    return Polynomial(std::move(v));
}

namespace {

// Trial-division factoring with a shared candidate budget; factors is a
// list of (prime, multiplicity).
void factor_with_budget(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& factors,
                        std::uint64_t& budget) {
    auto push = [&](const mpz_class& p, unsigned e) { factors.emplace_back(p, e); };
    if (n < 0) n = -n;
    if (n <= 1) return;
    mpz_class d = 2;
    while (true) {
        if (d * d > n) break;
        if (budget == 0)
            throw RootSearchBudgetExceeded(
                "root search aborted: trial-division budget (10^6 candidates) exhausted");
        --budget;
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            push(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) push(n, 1);
}

std::vector<mpz_class> divisors_of(const std::vector<std::pair<mpz_class, unsigned>>& factors) {
    std::vector<mpz_class> divs = {1};
    for (const auto& [p, e] : factors) {
        std::size_t old = divs.size();
        mpz_class pk = 1;
        for (unsigned t = 1; t <= e; ++t) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::vector<FieldValue> roots_rationals(const Polynomial& f) {
    const FieldSpec spec = f.spec();
    std::vector<FieldValue> roots;

    // Clear denominators to an integer coefficient list.
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        mpz_class d = c.rat().get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<mpz_class> ic(f.coeffs().size());
    for (std::size_t k = 0; k < ic.size(); ++k) {
        mpq_class q = f.coeff(k).rat() * mpq_class(den_lcm);
        ic[k] = q.get_num();  // exact: denominator cleared
    }

    // Strip x^k so the constant term is nonzero; x = 0 is then a root
    // of the original polynomial.
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(FieldValue::zero(spec));
    if (low == ic.size() || ic.size() - low == 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    std::uint64_t budget = 1'000'000;
    std::vector<std::pair<mpz_class, unsigned>> f0, fl;
    factor_with_budget(ic[low], f0, budget);
    factor_with_budget(ic.back(), fl, budget);
    std::vector<mpz_class> num_divs = divisors_of(f0);
    std::vector<mpz_class> den_divs = divisors_of(fl);

    std::vector<FieldValue> seen;
    for (const mpz_class& p : num_divs)
        for (const mpz_class& q : den_divs) {
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign ? -p : p, q);
                cand.canonicalize();
                FieldValue x = FieldValue::rational(cand);
                if (f.eval(x).is_zero()) seen.push_back(x);
            }
        }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    roots.insert(roots.end(), seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<FieldValue> roots_prime_field(const Polynomial& f) {
    std::vector<FieldValue> roots;
    for (const FieldValue& x : enumerate_field(f.spec()))
        if (f.eval(x).is_zero()) roots.push_back(x);
    return roots;  // residue order is already sorted
}

}  // namespace

std::vector<FieldValue> roots_in_field(const Polynomial& f) {
    if (f.is_zero()) throw Error("every value is a root of the zero polynomial");
    if (f.degree() == 0) return {};
    return f.spec().is_rationals() ? roots_rationals(f) : roots_prime_field(f);
}

Vector row_sums(const Matrix& m) {
    Vector s(m.spec(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        FieldValue acc = FieldValue::zero(m.spec());
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j);
        s[i] = acc;
    }
    return s;
}

bool is_row_stochastic(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        FieldValue acc = FieldValue::zero(m.spec());
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j);
        if (!acc.is_one()) return false;
    }
    return true;
}

bool is_column_stochastic(const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        FieldValue acc = FieldValue::zero(m.spec());
        for (std::size_t i = 0; i < m.rows(); ++i) acc += m.at(i, j);
        if (!acc.is_one()) return false;
    }
    return true;
}

Matrix matrix_with_row_sums(const Vector& alpha) {
    const std::size_t n = alpha.size();
    const FieldSpec spec = alpha.spec();
    std::size_t k = 0;
    while (k < n && alpha[k].is_zero()) ++k;
    if (k == n) throw Error("all prescribed row sums are zero; no nonsingular matrix exists");

    Matrix m(spec, n, n);
    const FieldValue one = FieldValue::one(spec);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
            m.at(k, k) = alpha[k];
        } else {
            m.at(i, i) = one;
            m.at(i, k) = alpha[i] - one;
        }
    }
    if (determinant(m).is_zero()) throw Error("row-sum construction produced a singular matrix");
    return m;
}

GlScan::GlScan(std::size_t n, std::uint64_t p, std::uint64_t max_cells)
    : n_(n), spec_(FieldSpec::prime_field(p)), total_(1) {
    if (n == 0) throw Error("matrix dimensions must be positive");
    for (std::size_t t = 0; t < n * n; ++t) {
        if (total_ > max_cells / p)
            throw CapExceeded("GL scan too large: " + std::to_string(p) + "^" +
                              std::to_string(n * n) + " candidates exceed cap " +
                              std::to_string(max_cells));
        total_ *= p;
    }
}

Matrix GlScan::decode(std::uint64_t index) const {
    const std::uint64_t p = spec_.prime();
    Matrix m(spec_, n_, n_);
    for (std::size_t t = n_ * n_; t-- > 0;) {
        m.at(t / n_, t % n_) = FieldValue::residue(index % p, spec_);
        index /= p;
    }
    return m;
}

std::vector<Matrix> enumerate_gl(std::size_t n, std::uint64_t p, std::uint64_t max_cells) {
    GlScan scan(n, p, max_cells);
    std::vector<Matrix> out;
    scan.for_each_nonsingular([&](const Matrix& m) { out.push_back(m); });
    return out;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

FieldValue random_value(std::mt19937_64& rng, const FieldSpec& spec) {
    if (spec.is_prime_field())
        return FieldValue::residue(rand_below(rng, spec.prime()), spec);
    long num = static_cast<long>(rand_below(rng, 9)) - 4;
    long den = static_cast<long>(rand_below(rng, 4)) + 1;
    return FieldValue::rational(mpq_class(num, den));
}

Vector random_vector(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n) {
    Vector v(spec, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_value(rng, spec);
    return v;
}

Vector random_nonzero_vector(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n) {
    for (;;) {
        Vector v = random_vector(rng, spec, n);
        if (!v.is_zero()) return v;
    }
}

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t rows,
                     std::size_t cols) {
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_value(rng, spec);
    return m;
}

Matrix random_nonsingular_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, spec, n, n);
        if (!determinant(m).is_zero()) return m;
    }
}

Matrix random_integer_nonsingular_matrix(std::mt19937_64& rng, const FieldSpec& spec,
                                         std::size_t n, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (;;) {
        Matrix m(spec, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = FieldValue::from_integer(lo + static_cast<long>(rand_below(rng, span)),
                                                      spec);
        if (!determinant(m).is_zero()) return m;
    }
}

Matrix random_row_stochastic_matrix(std::mt19937_64& rng, const FieldSpec& spec, std::size_t n) {
    const FieldValue one = FieldValue::one(spec);
    for (;;) {
        Matrix m(spec, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            FieldValue acc = FieldValue::zero(spec);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                m.at(i, j) = random_value(rng, spec);
                acc += m.at(i, j);
            }
            m.at(i, n - 1) = one - acc;
        }
        if (!determinant(m).is_zero()) return m;
    }
}

}  // namespace baric
