#include "leibniz/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace leibniz {

Vector zero_vector(Field field, std::size_t n)
{
    return Vector(n, Scalar::zero(field));
}

Vector unit_vector(Field field, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

Vector make_vector(Field field, std::initializer_list<long> entries)
{
    Vector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(field, e);
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

void require_same_length(std::size_t a, std::size_t b)
{
    if (a != b) throw std::invalid_argument("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b)
{
    require_same_length(a.size(), b.size());
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    require_same_length(a.size(), b.size());
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a)
{
    Vector r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(-x);
    return r;
}

Vector operator*(const Scalar& c, const Vector& v)
{
    Vector r = v;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vector& y, const Scalar& c, const Vector& x)
{
    require_same_length(y.size(), x.size());
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

std::string to_string(std::span<const Scalar> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
{
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_length(rows[r].size(), cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns)
{
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require_same_length(columns[c].size(), rows);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(field, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        require_same_length(row.size(), cols);
        std::size_t c = 0;
        for (long x : row) m(r, c++) = Scalar(field, x);
        ++r;
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

bool Matrix::is_zero() const
{
    return leibniz::is_zero(data_);
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    require_same_length(v.size(), cols_);
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out << ", ";
        out << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ", ";
            out << (*this)(r, c).str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon result;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));

        const Scalar inv = m(lead_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
        }
        result.pivots.push_back(col);
        ++lead_row;
    }
    result.matrix = std::move(m);
    return result;
}

Matrix rref(const Matrix& m)
{
    return row_reduce(m).matrix;
}

std::size_t rank(const Matrix& m)
{
    return row_reduce(m).rank();
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b)
{
    require_same_length(b.size(), a.rows());
    Matrix augmented(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
        augmented(r, a.cols()) = b[r];
    }
    const RowEchelon echelon = row_reduce(std::move(augmented));
    if (!echelon.pivots.empty() && echelon.pivots.back() == a.cols()) return std::nullopt;

    Vector x = zero_vector(a.field(), a.cols());
    for (std::size_t r = 0; r < echelon.rank(); ++r) x[echelon.pivots[r]] = echelon.matrix(r, a.cols());
    return x;
}

}  // namespace leibniz
