#pragma once

// Finite-dimensional algebras given by a structure tensor, and the left
// Leibniz identity [[a,b],c] = [a,[b,c]] - [b,[a,c]].
//
// The identity defect is trilinear, so checking it on all n^3 triples of
// basis vectors decides it for the whole algebra.

#include "leibniz/linalg.hpp"
#include "leibniz/subspace.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// c[i][j][k] is the e_k-coefficient of [e_i, e_j]; indices are 0-based.
class StructureTensor {
public:
    StructureTensor(Field field, std::size_t dim);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }

    /// Sets the whole product [e_i, e_j].
    void set_product(std::size_t i, std::size_t j, const Vector& value);

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    Field field_;
    std::size_t dim_;
    std::vector<Scalar> data_;
};

/// Immutable algebra value. `checked()` returns a copy that records that
/// the left Leibniz identity has been verified; invariant computations
/// require that flag.
class Algebra {
public:
    explicit Algebra(StructureTensor tensor, std::vector<std::string> labels = {});

    Field field() const noexcept { return tensor_.field(); }
    std::size_t dim() const noexcept { return tensor_.dim(); }
    const StructureTensor& tensor() const noexcept { return tensor_; }

    /// Basis names; defaults to e1..en when none were given.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_custom_labels() const noexcept { return custom_labels_; }

    /// [e_i, e_j]
    Vector product(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }

    bool is_checked() const noexcept { return checked_; }
    /// Throws IdentityError when the identity fails.
    Algebra checked() const;

    /// Renders a vector as a combination of basis labels, e.g. "a1 + 2*a3".
    std::string format(const Vector& v) const;

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.tensor_ == b.tensor_; }

private:
    StructureTensor tensor_;
    std::vector<std::string> labels_;
    bool custom_labels_ = false;
    bool checked_ = false;
};

struct IdentityViolation {
    std::array<std::size_t, 3> triple;  // 0-based (i, j, k)
    Vector residual;                    // [[e_i,e_j],e_k] - [e_i,[e_j,e_k]] + [e_j,[e_i,e_k]]
};

/// All basis triples violating the identity, in lexicographic (i,j,k) order.
std::vector<IdentityViolation> check_left_leibniz(const Algebra& a);

class IdentityError : public std::runtime_error {
public:
    explicit IdentityError(std::vector<IdentityViolation> violations);
    const std::vector<IdentityViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<IdentityViolation> violations_;
};

/// Throws std::logic_error unless `a` carries the checked flag.
void require_checked(const Algebra& a);

void require_vector(const Algebra& a, const Vector& v);

/// The same algebra written in a new basis (the given vectors, which must be
/// linearly independent and span the space). The result keeps the checked
/// flag of `a`.
Algebra change_basis(const Algebra& a, const std::vector<Vector>& new_basis, std::vector<std::string> labels = {});

/// Structure tensor of a subalgebra S in its canonical RREF basis.
Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s);

/// Maps a subspace of the restricted algebra back into the ambient space.
Subspace lift_subspace(const Subspace& s, const Subspace& inner);

}  // namespace leibniz
