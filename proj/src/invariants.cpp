#include "leibniz/invariants.hpp"

#include <stdexcept>
#include <utility>

namespace leibniz {

namespace {

void require_subspace_of(const Algebra& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim() || !(s.field() == a.field()))
        throw std::invalid_argument("subspace does not live in the algebra");
}

Subspace full_space(const Algebra& a)
{
    return Subspace::full(a.field(), a.dim());
}

// Kernel of x -> ([x, e_j])_j (left = true) or x -> ([e_j, x])_j.
Subspace annihilator_of_basis(const Algebra& a, bool left)
{
    const std::size_t n = a.dim();
    const auto& c = a.tensor();
    Matrix m(a.field(), n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = left ? c(i, j, k) : c(j, i, k);
    return kernel(m);
}

}  // namespace

Subspace product_subspace(const Algebra& a, const Subspace& s, const Subspace& t)
{
    require_subspace_of(a, s);
    require_subspace_of(a, t);
    std::vector<Vector> products;
    const auto sb = s.basis();
    const auto tb = t.basis();
    for (const auto& x : sb)
        for (const auto& y : tb) products.push_back(a.bracket(x, y));
    return Subspace::span(a.field(), a.dim(), products);
}

bool is_subalgebra(const Algebra& a, const Subspace& s)
{
    return s.contains(product_subspace(a, s, s));
}

bool is_left_ideal(const Algebra& a, const Subspace& s)
{
    return s.contains(product_subspace(a, full_space(a), s));
}

bool is_right_ideal(const Algebra& a, const Subspace& s)
{
    return s.contains(product_subspace(a, s, full_space(a)));
}

bool is_ideal(const Algebra& a, const Subspace& s)
{
    return is_left_ideal(a, s) && is_right_ideal(a, s);
}

Subspace leibniz_kernel(const Algebra& a)
{
    require_checked(a);
    std::vector<Vector> generators;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        generators.push_back(a.product(i, i));
        for (std::size_t j = i + 1; j < a.dim(); ++j) generators.push_back(a.product(i, j) + a.product(j, i));
    }
    return Subspace::span(a.field(), a.dim(), generators);
}

Subspace left_center(const Algebra& a)
{
    require_checked(a);
    return annihilator_of_basis(a, true);
}

Subspace right_center(const Algebra& a)
{
    require_checked(a);
    return annihilator_of_basis(a, false);
}

Subspace center(const Algebra& a)
{
    return subspace_intersect(left_center(a), right_center(a));
}

std::vector<Subspace> lower_central_series(const Algebra& a)
{
    require_checked(a);
    const Subspace whole = full_space(a);
    std::vector<Subspace> series{whole};
    for (;;) {
        Subspace next = product_subspace(a, whole, series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::optional<std::size_t> nilpotency_class(const Algebra& a)
{
    const auto series = lower_central_series(a);
    if (!series.back().is_zero()) return std::nullopt;
    return series.size() - 1;
}

bool is_nilpotent(const Algebra& a)
{
    return nilpotency_class(a).has_value();
}

std::vector<Subspace> upper_central_series(const Algebra& a)
{
    require_checked(a);
    const std::size_t n = a.dim();
    const auto& c = a.tensor();
    std::vector<Subspace> series{Subspace::zero(a.field(), n)};
    for (;;) {
        // A vector lies in zeta_k iff it is orthogonal to every w with B w = 0,
        // B the basis matrix of zeta_k.
        const auto normals = kernel(series.back().basis_matrix()).basis();
        std::vector<Vector> rows;
        for (const auto& w : normals)
            for (std::size_t j = 0; j < n; ++j) {
                Vector left = zero_vector(a.field(), n);
                Vector right = zero_vector(a.field(), n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (w[k].is_zero()) continue;
                        left[i] += w[k] * c(i, j, k);
                        right[i] += w[k] * c(j, i, k);
                    }
                rows.push_back(std::move(left));
                rows.push_back(std::move(right));
            }
        Subspace next = rows.empty() ? full_space(a) : kernel(Matrix::from_rows(a.field(), n, rows));
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

Subspace hypercenter(const Algebra& a)
{
    return upper_central_series(a).back();
}

bool is_lie(const Algebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!is_zero(a.product(i, i))) return false;
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!is_zero(a.product(i, j) + a.product(j, i))) return false;
    }
    return true;
}

AlgebraReport invariant_profile(const Algebra& a)
{
    require_checked(a);
    AlgebraReport r;
    r.dim = a.dim();
    r.field = a.field();
    r.leibniz_kernel_dim = leibniz_kernel(a).dim();
    r.left_center_dim = left_center(a).dim();
    r.right_center_dim = right_center(a).dim();
    r.center_dim = center(a).dim();
    const auto lower = lower_central_series(a);
    for (const auto& s : lower) r.lower_series_dims.push_back(s.dim());
    for (const auto& s : upper_central_series(a)) r.upper_series_dims.push_back(s.dim());
    if (lower.back().is_zero()) r.nilpotency_class = lower.size() - 1;
    r.is_lie = is_lie(a);
    return r;
}

}  // namespace leibniz
