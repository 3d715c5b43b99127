#include "msw/matrix.hpp"

#include "msw/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace msw {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw ShapeMismatch("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                            std::to_string(rows) + "x" + std::to_string(cols));
    for (Scalar v : data_)
        if (v >= field_.p()) throw Error("matrix entry " + std::to_string(v) + " outside [0, p)");
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    Matrix out(field, m, n);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != n) throw ShapeMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (long long v : r) out(i, j++) = field.reduce(v);
        ++i;
    }
    return out;
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

Matrix Matrix::unit(Field field, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix out(field, rows, cols);
    out(i, j) = 1;
    return out;
}

Matrix Matrix::column_vector(Field field, const Vector& v) { return Matrix(field, v.size(), 1, v); }

Matrix Matrix::row_vector(Field field, const Vector& v) { return Matrix(field, 1, v.size(), v); }

Matrix Matrix::from_row_vectors(Field field, std::size_t cols, std::span<const Vector> rows) {
    Matrix out(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeMismatch("row vector length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return out;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw ShapeMismatch("block out of range");
    Matrix b(field_, h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Scalar v) { return v == 0; });
}

Matrix Matrix::scaled(Scalar s) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = field_.mul(v, s);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
}

Matrix& Matrix::add_scaled(Scalar s, const Matrix& o) {
    require_same_shape(*this, o, "addition");
    if (s == 0) return *this;
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.fma(data_[k], s, o.data_[k]);
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_ || a.cols_ != b.rows_)
        throw ShapeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    const auto p = static_cast<std::uint64_t>(a.field_.p());
    Matrix c(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * b(k, j)) % p;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Scalar>(acc[j]);
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw ShapeMismatch("matrix-vector length mismatch");
    const auto p = static_cast<std::uint64_t>(a.field_.p());
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) s = (s + static_cast<std::uint64_t>(a(i, k)) * x[k]) % p;
        y[i] = static_cast<Scalar>(s);
    }
    return y;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch(std::string("shape or field mismatch in ") + what);
}

bool is_zero_vector(const Vector& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

} // namespace msw
