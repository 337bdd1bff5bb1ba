#include "torphi/int_matrix.hpp"

#include "torphi/error.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace torphi {

Integer parseInteger(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw InputError("expected a decimal integer, got '" + std::string(text) + "'");
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

std::string toString(const Rational& x) { return x.get_str(); }

std::string toString(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

Integer mod(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitivePart(const IntVector& v) {
    Integer g = content(v);
    if (g == 0) return v;
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x / g);
    return out;
}

bool isZero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool isPrime(const Integer& n) {
    if (n < 2) return false;
    // 50 Miller-Rabin rounds; GMP answers 2 (certainly prime) below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

std::int64_t toInt64(const Integer& x, std::string_view what) {
    if (!x.fits_slong_p()) throw ValidationError(std::string(what) + " out of range: " + x.get_str());
    return x.get_si();
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ValidationError("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("IntMatrix::fromRows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::fromColumns(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ValidationError("IntMatrix::fromColumns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVector& v) { return fromColumns({v}, v.size()); }

IntMatrix IntMatrix::row(const IntVector& v) { return fromRows({v}, v.size()); }

IntVector IntMatrix::getColumn(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::getRow(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::columns() const {
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(getColumn(j));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw ValidationError("IntMatrix::hcat: row count mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
}

IntMatrix IntMatrix::leadingMinor(std::size_t k) const {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Integer IntMatrix::determinant() const {
    if (!square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        }
        prev = a(k, k);
    }
    Integer d = a(n - 1, n - 1);
    return sign > 0 ? d : Integer(-d);
}

Integer IntMatrix::content() const { return torphi::content(data_); }

bool IntMatrix::isZero() const { return torphi::isZero(data_); }

bool IntMatrix::isDiagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

bool IntMatrix::isSymmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negateRow(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negateCol(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("IntMatrix +: shape mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("IntMatrix -: shape mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("IntMatrix *: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw ValidationError("IntMatrix * vector: shape mismatch");
    IntVector r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
}

IntMatrix operator*(const Integer& k, const IntMatrix& m) {
    IntMatrix r = m;
    for (auto& x : r.data_) x *= k;
    return r;
}

std::string IntMatrix::toString() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << (*this)(i, j).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.toString(); }

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.square()) throw ValidationError("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Integer cof = minor.determinant();
            if ((i + j) % 2) cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool isPositiveDefinite(const IntMatrix& symmetric) {
    if (!symmetric.isSymmetric()) return false;
    for (std::size_t k = 1; k <= symmetric.rows(); ++k)
        if (symmetric.leadingMinor(k).determinant() <= 0) return false;
    return true;
}

}  // namespace torphi
