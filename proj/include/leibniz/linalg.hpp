#pragma once

// Dense exact linear algebra: vectors, matrices, reduced row echelon form,
// kernels and linear solves over a runtime Field.

#include "leibniz/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace leibniz {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
/// Standard basis vector e_i (0-based index).
Vector unit_vector(Field field, std::size_t n, std::size_t i);
/// Builds a vector from small integers, reduced into `field`.
Vector make_vector(Field field, std::initializer_list<long> entries);

bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& c, const Vector& v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);

/// "(a, b, c)"
std::string to_string(std::span<const Scalar> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);
    static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);
    static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    bool is_zero() const;
    Matrix transpose() const;

    /// Matrix-vector product; v has length cols().
    Vector apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix matrix;                      // reduced row echelon form, zero rows kept
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with fraction normalization at every step.
RowEchelon row_reduce(Matrix m);

/// The unique RREF of m (same shape, zero rows at the bottom).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of a x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

}  // namespace leibniz
