#include "leibniz/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace leibniz {

namespace {

void require_ambient(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(s.ambient_dim()) + " vs " +
                                    std::to_string(t.ambient_dim()));
    if (!(s.field() == t.field())) throw std::invalid_argument("field mismatch between subspaces");
}

}  // namespace

Subspace::Subspace(std::size_t ambient, RowEchelon echelon) : ambient_(ambient), pivots_(std::move(echelon.pivots))
{
    const Field field = echelon.matrix.field();
    basis_ = Matrix(field, pivots_.size(), ambient);
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        for (std::size_t c = 0; c < ambient; ++c) basis_(r, c) = echelon.matrix(r, c);
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim)
{
    return Subspace(ambient_dim, row_reduce(Matrix(field, 0, ambient_dim)));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim)
{
    return row_space(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors)
{
    return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
    return Subspace(m.cols(), row_reduce(m));
}

bool Subspace::contains(std::span<const Scalar> v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
    // Reduce v against the RREF rows; v is in the span iff the remainder vanishes.
    Vector rest(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Scalar c = rest[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t k = pivots_[r]; k < ambient_; ++k)
            if (!basis_(r, k).is_zero()) rest[k] -= c * basis_(r, k);
    }
    return leibniz::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const
{
    require_ambient(*this, other);
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const
{
    if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
    Vector coords;
    coords.reserve(pivots_.size());
    for (std::size_t p : pivots_) coords.push_back(v[p]);
    return coords;
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::string Subspace::str() const
{
    return basis_.str();
}

Subspace kernel(const Matrix& m)
{
    const RowEchelon echelon = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : echelon.pivots) is_pivot[p] = true;

    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < echelon.rank(); ++r) v[echelon.pivots[r]] = -echelon.matrix(r, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vectors);
}

Subspace subspace_sum(const Subspace& s, const Subspace& t)
{
    require_ambient(s, t);
    std::vector<Vector> vectors = s.basis();
    for (auto& v : t.basis()) vectors.push_back(std::move(v));
    return Subspace::span(s.field(), s.ambient_dim(), vectors);
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t)
{
    require_ambient(s, t);
    if (s.is_zero() || t.is_zero()) return Subspace::zero(s.field(), s.ambient_dim());
    // Solve sum_i x_i s_i - sum_j y_j t_j = 0 and map the x-part back.
    std::vector<Vector> columns = s.basis();
    for (const auto& v : t.basis()) columns.push_back(-v);
    const Subspace relations = kernel(Matrix::from_columns(s.field(), s.ambient_dim(), columns));

    const Matrix& sb = s.basis_matrix();
    std::vector<Vector> vectors;
    for (const auto& rel : relations.basis()) {
        Vector v = zero_vector(s.field(), s.ambient_dim());
        for (std::size_t i = 0; i < s.dim(); ++i) axpy(v, rel[i], sb.row(i));
        vectors.push_back(std::move(v));
    }
    return Subspace::span(s.field(), s.ambient_dim(), vectors);
}

bool subspace_contains(const Subspace& s, std::span<const Scalar> v)
{
    return s.contains(v);
}

Subspace image(const Matrix& m, const Subspace& s)
{
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("matrix does not act on the subspace's ambient space");
    std::vector<Vector> vectors;
    for (const auto& b : s.basis()) vectors.push_back(m.apply(b));
    return Subspace::span(m.field(), m.rows(), vectors);
}

}  // namespace leibniz
