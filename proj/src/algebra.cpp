#include "leibniz/algebra.hpp"

#include <utility>

namespace leibniz {

StructureTensor::StructureTensor(Field field, std::size_t dim)
    : field_(field), dim_(dim), data_(dim * dim * dim, Scalar::zero(field))
{
    if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
}

void StructureTensor::set_product(std::size_t i, std::size_t j, const Vector& value)
{
    if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
    if (value.size() != dim_) throw std::invalid_argument("product vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = value[k];
}

Algebra::Algebra(StructureTensor tensor, std::vector<std::string> labels) : tensor_(std::move(tensor))
{
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim(); ++i) labels_.push_back("e" + std::to_string(i + 1));
    } else {
        if (labels.size() != dim()) throw std::invalid_argument("basis label count does not match dimension");
        labels_ = std::move(labels);
        custom_labels_ = true;
    }
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                if (!(tensor_(i, j, k).field() == field())) throw std::invalid_argument("tensor entry in wrong field");
}

Vector Algebra::product(std::size_t i, std::size_t j) const
{
    Vector v;
    v.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) v.push_back(tensor_(i, j, k));
    return v;
}

void require_vector(const Algebra& a, const Vector& v)
{
    if (v.size() != a.dim())
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " in algebra of dimension " +
                                    std::to_string(a.dim()));
    for (const auto& x : v)
        if (!(x.field() == a.field())) throw std::invalid_argument("vector entry over the wrong field");
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const
{
    require_vector(*this, x);
    require_vector(*this, y);
    const std::size_t n = dim();
    Vector out = zero_vector(field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!tensor_(i, j, k).is_zero()) out[k] += c * tensor_(i, j, k);
        }
    }
    return out;
}

Algebra Algebra::checked() const
{
    if (checked_) return *this;
    auto violations = check_left_leibniz(*this);
    if (!violations.empty()) throw IdentityError(std::move(violations));
    Algebra copy = *this;
    copy.checked_ = true;
    return copy;
}

std::string Algebra::format(const Vector& v) const
{
    require_vector(*this, v);
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        std::string coeff = v[i].str();
        bool negative = field().is_rationals() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff != "1") out += coeff + "*";
        out += labels_[i];
    }
    return out.empty() ? "0" : out;
}

std::vector<IdentityViolation> check_left_leibniz(const Algebra& a)
{
    const std::size_t n = a.dim();
    std::vector<Vector> products;
    products.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) products.push_back(a.product(i, j));

    std::vector<IdentityViolation> violations;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector residual = a.bracket(products[i * n + j], a.basis_vector(k));
                residual = residual - a.bracket(a.basis_vector(i), products[j * n + k]);
                residual = residual + a.bracket(a.basis_vector(j), products[i * n + k]);
                if (!is_zero(residual)) violations.push_back({{i, j, k}, std::move(residual)});
            }
    return violations;
}

namespace {

std::string describe(const std::vector<IdentityViolation>& violations)
{
    std::string msg = "left Leibniz identity fails on " + std::to_string(violations.size()) + " basis triple(s)";
    if (!violations.empty()) {
        const auto& t = violations.front().triple;
        msg += ", first at (" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
               std::to_string(t[2] + 1) + ")";
    }
    return msg;
}

}  // namespace

IdentityError::IdentityError(std::vector<IdentityViolation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations))
{
}

void require_checked(const Algebra& a)
{
    if (!a.is_checked()) throw std::logic_error("operation requires an algebra verified by check_left_leibniz");
}

Algebra change_basis(const Algebra& a, const std::vector<Vector>& new_basis, std::vector<std::string> labels)
{
    const std::size_t n = a.dim();
    if (new_basis.size() != n) throw std::invalid_argument("new basis must have exactly dim vectors");
    for (const auto& v : new_basis) require_vector(a, v);
    const Matrix columns = Matrix::from_columns(a.field(), n, new_basis);
    if (rank(columns) != n) throw std::invalid_argument("new basis vectors are linearly dependent");

    StructureTensor tensor(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector product = a.bracket(new_basis[i], new_basis[j]);
            tensor.set_product(i, j, *solve(columns, product));
        }
    Algebra result(std::move(tensor), std::move(labels));
    return a.is_checked() ? result.checked() : result;
}

Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim()) throw std::invalid_argument("subspace does not live in the algebra");
    if (s.is_zero()) throw std::invalid_argument("cannot restrict to the zero subspace");
    const auto basis = s.basis();
    StructureTensor tensor(a.field(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Vector product = a.bracket(basis[i], basis[j]);
            if (!s.contains(product)) throw std::invalid_argument("subspace is not closed under the bracket");
            tensor.set_product(i, j, s.coordinates(product));
        }
    Algebra result(std::move(tensor));
    return a.is_checked() ? result.checked() : result;
}

Subspace lift_subspace(const Subspace& s, const Subspace& inner)
{
    if (inner.ambient_dim() != s.dim()) throw std::invalid_argument("inner subspace has the wrong ambient dimension");
    const Matrix& sb = s.basis_matrix();
    std::vector<Vector> vectors;
    for (const auto& coords : inner.basis()) {
        Vector v = zero_vector(s.field(), s.ambient_dim());
        for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], sb.row(i));
        vectors.push_back(std::move(v));
    }
    return Subspace::span(s.field(), s.ambient_dim(), vectors);
}

}  // namespace leibniz
