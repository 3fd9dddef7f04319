#include "doctest.h"
#include "support.hpp"

#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

Vector tensor_product(const Algebra& a, const Vector& x, std::size_t j)
{
    Vector out(a.dim(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) out[k] = out[k] + x[i] * a.tensor()(i, j, k);
    return out;
}

Vector tensor_product(const Algebra& a, std::size_t i, const Vector& y)
{
    Vector out(a.dim(), Scalar::zero(a.field()));
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) out[k] = out[k] + y[j] * a.tensor()(i, j, k);
    return out;
}

// Direct check of the defining equations on basis pairs, straight from the tensor.
bool derivation_oracle(const Algebra& a, const Matrix& m, bool right)
{
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod(n, Scalar::zero(a.field()));
            for (std::size_t k = 0; k < n; ++k) prod[k] = a.tensor()(i, j, k);
            const Vector lhs = m.apply(prod);
            Vector rhs;
            if (right)
                rhs = tensor_product(a, i, m.column(j)) - tensor_product(a, j, m.column(i));
            else
                rhs = tensor_product(a, m.column(i), j) + tensor_product(a, i, m.column(j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// Counts derivations among all p^(n^2) matrices.
std::size_t brute_force_count(const Algebra& a, bool right)
{
    const std::size_t n = a.dim();
    std::size_t count = 0;
    for (const auto& entries : all_vectors(a.field(), n * n)) {
        Matrix m(a.field(), n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = entries[r * n + c];
        if (derivation_oracle(a, m, right)) ++count;
    }
    return count;
}

std::size_t power(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

TEST_SUITE("derivation spaces")
{
    TEST_CASE("cyclic nilpotent algebras in characteristic 0 or p > n")
    {
        for (const Field f : {Field{}, Field::prime(5), Field::prime(7), Field::prime(11)})
            for (std::size_t n = 1; n <= 6; ++n) {
                if (f.is_finite() && f.characteristic() <= n) continue;
                const Algebra a = cyclic_nilpotent(n, f);
                CHECK(derivation_space(a).dim() == n);
                CHECK(right_derivation_space(a).dim() == n);
            }
    }

    TEST_CASE("dimensions agree with brute-force counts over GF(2) and GF(3)")
    {
        std::vector<Algebra> algebras;
        for (std::size_t n = 1; n <= 3; ++n) algebras.push_back(cyclic_nilpotent(n, Field::prime(2)));
        algebras.push_back(dim2_L1(Field::prime(3)));
        algebras.push_back(dim2_L2(Field::prime(3)));
        algebras.push_back(dim2_L2(Field::prime(2)));
        for (const auto& e : corpus())
            if (e.algebra.field().is_finite() && power(e.algebra.field().characteristic(), e.algebra.dim() * e.algebra.dim()) <= 1u << 12)
                algebras.push_back(e.algebra);
        for (const auto& a : algebras) {
            const std::size_t p = a.field().characteristic();
            CHECK(power(p, derivation_space(a).dim()) == brute_force_count(a, false));
            CHECK(power(p, right_derivation_space(a).dim()) == brute_force_count(a, true));
        }
    }

    TEST_CASE("basis elements satisfy the defining equations and are independent")
    {
        for (const auto& e : corpus())
            for (const bool right : {false, true}) {
                const DerivationBasis d = right ? right_derivation_space(e.algebra) : derivation_space(e.algebra);
                std::vector<Vector> flat;
                for (const auto& m : d.basis) {
                    CHECK_MESSAGE(derivation_oracle(e.algebra, m, right), e.name);
                    Vector v;
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
                    flat.push_back(v);
                }
                const std::size_t n = e.algebra.dim();
                CHECK(Subspace::span(e.algebra.field(), n * n, flat).dim() == d.dim());
            }
    }

    TEST_CASE("known Lie algebras")
    {
        for (const auto& e : corpus()) {
            if (e.name == "heisenberg_q.alg") CHECK(derivation_space(e.algebra).dim() == 6);
            if (e.name == "sl2_q.alg") CHECK(derivation_space(e.algebra).dim() == 3);
        }
    }
}

TEST_SUITE("multiplication operators")
{
    TEST_CASE("left multiplications are derivations, right multiplications are right derivations")
    {
        std::mt19937_64 rng(31);
        for (const auto& e : corpus())
            for (int trial = 0; trial < 4; ++trial) {
                const Vector x = random_vector(e.algebra.field(), e.algebra.dim(), rng);
                CHECK_MESSAGE(is_derivation(e.algebra, left_mult_matrix(e.algebra, x)), e.name);
                CHECK(is_right_derivation(e.algebra, right_mult_matrix(e.algebra, x)));
                const Vector y = random_vector(e.algebra.field(), e.algebra.dim(), rng);
                CHECK(left_mult_matrix(e.algebra, x).apply(y) == e.algebra.bracket(x, y));
                CHECK(right_mult_matrix(e.algebra, x).apply(y) == e.algebra.bracket(y, x));
            }
    }

    TEST_CASE("a random matrix is rarely a derivation, and the checks agree with the oracle")
    {
        std::mt19937_64 rng(12);
        for (const auto& e : corpus())
            for (int trial = 0; trial < 4; ++trial) {
                const Matrix m = random_matrix(e.algebra.field(), e.algebra.dim(), e.algebra.dim(), rng);
                CHECK(is_derivation(e.algebra, m) == derivation_oracle(e.algebra, m, false));
                CHECK(is_right_derivation(e.algebra, m) == derivation_oracle(e.algebra, m, true));
            }
    }
}

TEST_SUITE("cyclic profiles")
{
    TEST_CASE("derivations of the cyclic algebra are banded with k*gamma_1 on the diagonal")
    {
        std::mt19937_64 rng(63);
        for (const Field f : {Field{}, Field::prime(7)})
            for (std::size_t n = 2; n <= 6; ++n) {
                const Algebra a = cyclic_nilpotent(n, f);
                const DerivationBasis d = derivation_space(a);
                for (int trial = 0; trial < 5; ++trial) {
                    Matrix m(f, n, n);
                    for (const auto& b : d.basis) {
                        const Scalar c = random_scalar(f, rng);
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t col = 0; col < n; ++col) m(r, col) = m(r, col) + c * b(r, col);
                    }
                    const auto profile = extract_lemma3_profile(a, m);
                    REQUIRE(profile.has_value());
                    CHECK(profile->gammas == m.column(0));
                }
            }
    }

    TEST_CASE("building a matrix from gammas gives a derivation")
    {
        const Field q;
        const std::size_t n = 5;
        const Algebra a = cyclic_nilpotent(n, q);
        const std::vector<long> g{2, -1, 3, 0, 7};
        Matrix m(q, n, n);
        for (std::size_t col = 0; col < n; ++col) {
            m(col, col) = Scalar(q, static_cast<long>(col + 1) * g[0]);
            for (std::size_t row = col + 1; row < n; ++row) m(row, col) = Scalar(q, g[row - col]);
        }
        CHECK(derivation_oracle(a, m, false));
        CHECK(extract_lemma3_profile(a, m).has_value());
        m(0, 0) = Scalar(q, 3);
        CHECK_FALSE(derivation_oracle(a, m, false));
        CHECK_THROWS_AS(extract_lemma3_profile(a, m), std::invalid_argument);
    }

    TEST_CASE("right derivations of the cyclic algebra only move a1")
    {
        const Field f = Field::prime(5);
        for (std::size_t n = 2; n <= 4; ++n) {
            const Algebra a = cyclic_nilpotent(n, f);
            for (const auto& m : right_derivation_space(a).basis) {
                const auto profile = extract_lemma5_profile(a, m);
                REQUIRE(profile.has_value());
                CHECK(profile->rhos == m.column(0));
            }
        }
    }

    TEST_CASE("profiles require the canonical table")
    {
        const Algebra a = dim2_L1(Field{});
        CHECK(is_canonical_cyclic(cyclic_nilpotent(2, Field{})));
        CHECK_FALSE(is_canonical_cyclic(theoremA_i(2, Field{})));
        CHECK(is_canonical_cyclic(a));
        CHECK_THROWS_AS(extract_lemma3_profile(theoremA_i(2, Field{}), Matrix::identity(Field{}, 3)), std::invalid_argument);
    }
}

TEST_SUITE("invariance")
{
    TEST_CASE("every derivation of a corpus algebra preserves the centers and upper series")
    {
        std::mt19937_64 rng(77);
        for (const auto& e : corpus())
            for (const DerivationKind kind : {DerivationKind::left, DerivationKind::right}) {
                const DerivationBasis d =
                    kind == DerivationKind::left ? derivation_space(e.algebra) : right_derivation_space(e.algebra);
                for (const auto& m : d.basis) CHECK_MESSAGE(check_invariance(e.algebra, m, kind).all_hold(), e.name);
                if (d.basis.empty()) continue;
                Matrix sum(e.algebra.field(), e.algebra.dim(), e.algebra.dim());
                for (const auto& m : d.basis) {
                    const Scalar c = random_scalar(e.algebra.field(), rng);
                    for (std::size_t r = 0; r < sum.rows(); ++r)
                        for (std::size_t col = 0; col < sum.cols(); ++col) sum(r, col) = sum(r, col) + c * m(r, col);
                }
                CHECK(check_invariance(e.algebra, sum, kind).all_hold());
            }
    }

    TEST_CASE("non-derivations are rejected")
    {
        const Algebra a = cyclic_nilpotent(3, Field{});
        CHECK_THROWS_AS(check_invariance(a, Matrix::identity(Field{}, 3), DerivationKind::left), std::invalid_argument);
    }

    TEST_CASE("full profile adds both derivation dimensions")
    {
        const AlgebraReport r = full_profile(cyclic_nilpotent(4, Field{}));
        CHECK(r.derivation_dim == 4u);
        CHECK(r.right_derivation_dim == 4u);
        CHECK(r.nilpotency_class == 4u);
    }
}
