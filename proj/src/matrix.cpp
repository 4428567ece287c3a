#include "pbq/matrix.hpp"

#include "pbq/errors.hpp"

namespace pbq {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
    Matrix m(n, n, one.zero_like());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const Scalar& zero) {
    return Matrix(rows, cols, zero.zero_like());
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

bool Matrix::is_scalar(Scalar* value) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    if (!is_diagonal()) return false;
    for (std::size_t i = 1; i < rows_; ++i)
        if (!at(i, i).equals(at(0, 0))) return false;
    if (value) *value = at(0, 0);
    return true;
}

void Matrix::check_same_shape_(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw MismatchError("matrix shape mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape_(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] + b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape_(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] - b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MismatchError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, a.data_.empty() ? Scalar() : a.data_[0].zero_like());
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t t = 0; t < a.cols_; ++t) {
            const Scalar& art = a.at(r, t);
            if (art.is_zero()) continue;  // band matrices: most of the row is zero
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& btc = b.at(t, c);
                if (btc.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + art * btc;
            }
        }
    }
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = c * x;
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix dagger(const Matrix& a) {
    Matrix out(a.cols_, a.rows_, a.data_.empty() ? Scalar() : a.data_[0].zero_like());
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) out.at(c, r) = conj(a.at(r, c));
    return out;
}

Matrix pow(const Matrix& a, unsigned long e) {
    if (a.rows_ != a.cols_) throw MismatchError("power of a non-square matrix");
    Matrix result = Matrix::identity(a.rows_, a.data_.empty() ? Scalar() : a.data_[0].one_like());
    Matrix base = a;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Matrix::equals(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].equals(other.data_[i])) return false;
    return true;
}

Real Matrix::max_abs(unsigned digits) const {
    Real best = real_from_long(0, digits);
    for (const auto& x : data_) {
        if (x.is_exact() && x.is_zero()) continue;
        Real a = abs(x.to_complex(digits));
        if (a > best) best = a;
    }
    return best;
}

}  // namespace pbq
