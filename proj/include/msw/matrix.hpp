#pragma once

#include "msw/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace msw {

/// Column vector of scalars. The owning field is carried by whatever
/// matrix or subspace the vector is used with.
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over GF(p).
class Matrix {
public:
    /// Zero matrix.
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Entries in row-major order; each must already lie in [0, p).
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    /// Convenience for literals: integers are reduced modulo p, so -1 is allowed.
    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix identity(Field field, std::size_t n);
    /// e_i e_j^T
    static Matrix unit(Field field, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static Matrix column_vector(Field field, const Vector& v);
    static Matrix row_vector(Field field, const Vector& v);
    /// Stacks vectors as rows; all must have length `cols`.
    static Matrix from_row_vectors(Field field, std::size_t cols, std::span<const Vector> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::span<const Scalar> entries() const noexcept { return data_; }
    std::span<Scalar> entries() noexcept { return data_; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const noexcept;

    Matrix scaled(Scalar s) const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    /// this += s * o
    Matrix& add_scaled(Scalar s, const Matrix& o);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Checks that both operands share field and the given shape relation.
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

bool is_zero_vector(const Vector& v) noexcept;

} // namespace msw
