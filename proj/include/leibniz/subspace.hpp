#pragma once

#include "leibniz/linalg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace leibniz {

/// A subspace of F^n stored as its canonical RREF basis (zero rows removed).
/// Two Subspace values describe the same set iff they compare equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(Field field, std::size_t ambient_dim);
    static Subspace full(Field field, std::size_t ambient_dim);
    static Subspace span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors);
    /// Row space of m.
    static Subspace row_space(const Matrix& m);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    const Matrix& basis_matrix() const noexcept { return basis_; }
    std::vector<Vector> basis() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    /// Coefficients of v in the RREF basis; v must lie in the subspace.
    Vector coordinates(std::span<const Scalar> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

    /// "[[1, 0, 2], [0, 1, -1]]"
    std::string str() const;

private:
    Subspace(std::size_t ambient, RowEchelon echelon);

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
bool subspace_contains(const Subspace& s, std::span<const Scalar> v);
/// {m x : x in s}
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace leibniz
