#include "leibniz/derivations.hpp"

#include <stdexcept>

namespace leibniz {

Matrix left_mult_matrix(const Algebra& alg, const Vector& a)
{
    require_checked(alg);
    require_vector(alg, a);
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        const Vector image = alg.bracket(a, alg.basis_vector(j));
        for (std::size_t k = 0; k < alg.dim(); ++k) m(k, j) = image[k];
    }
    return m;
}

Matrix right_mult_matrix(const Algebra& alg, const Vector& a)
{
    require_checked(alg);
    require_vector(alg, a);
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        const Vector image = alg.bracket(alg.basis_vector(j), a);
        for (std::size_t k = 0; k < alg.dim(); ++k) m(k, j) = image[k];
    }
    return m;
}

namespace {

DerivationBasis solve_constraints(const Algebra& a, DerivationKind kind)
{
    require_checked(a);
    const std::size_t n = a.dim();
    const auto& c = a.tensor();
    const Field field = a.field();
    auto unknown = [n](std::size_t r, std::size_t col) { return r * n + col; };

    Matrix system(field, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t l = 0; l < n; ++l) {
                    // M [e_i, e_j]
                    system(row, unknown(k, l)) += c(i, j, l);
                    if (kind == DerivationKind::left) {
                        // - [M e_i, e_j] - [e_i, M e_j]
                        system(row, unknown(l, i)) -= c(l, j, k);
                        system(row, unknown(l, j)) -= c(i, l, k);
                    } else {
                        // - [e_i, M e_j] + [e_j, M e_i]
                        system(row, unknown(l, j)) -= c(i, l, k);
                        system(row, unknown(l, i)) += c(j, l, k);
                    }
                }
            }

    DerivationBasis result;
    result.kind = kind;
    for (const auto& v : kernel(system).basis()) {
        Matrix m(field, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t col = 0; col < n; ++col) m(r, col) = v[unknown(r, col)];
        result.basis.push_back(std::move(m));
    }
    return result;
}

void require_square(const Algebra& a, const Matrix& m)
{
    if (m.rows() != a.dim() || m.cols() != a.dim() || !(m.field() == a.field()))
        throw std::invalid_argument("matrix is not an endomorphism of the algebra");
}

bool satisfies(const Algebra& a, const Matrix& m, DerivationKind kind)
{
    require_square(a, m);
    const std::size_t n = a.dim();
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(m.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = m.apply(a.product(i, j));
            const Vector ei = a.basis_vector(i);
            const Vector ej = a.basis_vector(j);
            const Vector rhs = kind == DerivationKind::left
                                   ? a.bracket(images[i], ej) + a.bracket(ei, images[j])
                                   : a.bracket(ei, images[j]) - a.bracket(ej, images[i]);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace

DerivationBasis derivation_space(const Algebra& a)
{
    return solve_constraints(a, DerivationKind::left);
}

DerivationBasis right_derivation_space(const Algebra& a)
{
    return solve_constraints(a, DerivationKind::right);
}

bool is_derivation(const Algebra& a, const Matrix& m)
{
    return satisfies(a, m, DerivationKind::left);
}

bool is_right_derivation(const Algebra& a, const Matrix& m)
{
    return satisfies(a, m, DerivationKind::right);
}

bool is_canonical_cyclic(const Algebra& a)
{
    const std::size_t n = a.dim();
    const Field f = a.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const bool one = i == 0 && k == j + 1;
                if (!(a.tensor()(i, j, k) == (one ? Scalar::one(f) : Scalar::zero(f)))) return false;
            }
    return true;
}

std::optional<Lemma3Profile> extract_lemma3_profile(const Algebra& a, const Matrix& m)
{
    if (!is_canonical_cyclic(a)) throw std::invalid_argument("algebra is not the canonical cyclic nilpotent table");
    if (!is_derivation(a, m)) throw std::invalid_argument("matrix is not a derivation");
    const std::size_t n = a.dim();
    Lemma3Profile profile;
    for (std::size_t t = 0; t < n; ++t) profile.gammas.push_back(m(t, 0));

    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) {
            Scalar expected = Scalar::zero(a.field());
            if (row == col)
                expected = Scalar(a.field(), static_cast<long>(col + 1)) * profile.gammas[0];
            else if (row > col)
                expected = profile.gammas[row - col];
            if (!(m(row, col) == expected)) return std::nullopt;
        }
    return profile;
}

std::optional<Lemma5Profile> extract_lemma5_profile(const Algebra& a, const Matrix& m)
{
    if (!is_canonical_cyclic(a)) throw std::invalid_argument("algebra is not the canonical cyclic nilpotent table");
    if (!is_right_derivation(a, m)) throw std::invalid_argument("matrix is not a right derivation");
    Lemma5Profile profile;
    profile.rhos = m.column(0);
    for (std::size_t col = 1; col < a.dim(); ++col)
        if (!is_zero(m.column(col))) return std::nullopt;
    return profile;
}

bool InvarianceReport::all_hold() const noexcept
{
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

InvarianceReport check_invariance(const Algebra& a, const Matrix& m, DerivationKind kind)
{
    if (!satisfies(a, m, kind))
        throw std::invalid_argument(kind == DerivationKind::left ? "matrix is not a derivation"
                                                                 : "matrix is not a right derivation");
    InvarianceReport report;
    report.kind = kind;
    const Subspace zl = left_center(a);
    const Subspace zr = right_center(a);
    const Subspace z = subspace_intersect(zl, zr);
    if (kind == DerivationKind::left) {
        report.checks.push_back({"f(zeta^left) <= zeta^left", zl.contains(image(m, zl))});
        report.checks.push_back({"f(zeta^right) <= zeta^right", zr.contains(image(m, zr))});
        report.checks.push_back({"f(zeta) <= zeta", z.contains(image(m, z))});
        const auto upper = upper_central_series(a);
        for (std::size_t k = 1; k < upper.size(); ++k)
            report.checks.push_back(
                {"f(zeta_" + std::to_string(k) + ") <= zeta_" + std::to_string(k), upper[k].contains(image(m, upper[k]))});
    } else {
        report.checks.push_back({"g(zeta^left) <= zeta^right", zr.contains(image(m, zl))});
        report.checks.push_back({"g(zeta) <= zeta^right", zr.contains(image(m, z))});
        report.checks.push_back({"g(Leib) = 0", image(m, leibniz_kernel(a)).is_zero()});
    }
    return report;
}

AlgebraReport full_profile(const Algebra& a)
{
    AlgebraReport r = invariant_profile(a);
    r.derivation_dim = derivation_space(a).dim();
    r.right_derivation_dim = right_derivation_space(a).dim();
    return r;
}

}  // namespace leibniz
