#include "doctest.h"
#include "support.hpp"

#include "leibniz/linalg.hpp"
#include "leibniz/subspace.hpp"

using namespace leibniz;
using namespace testing_support;

TEST_SUITE("field")
{
    TEST_CASE("prime fields are validated")
    {
        CHECK(Field::prime(2).characteristic() == 2);
        CHECK(Field::prime(2147483647).name() == "GF(2147483647)");
        CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(91), std::invalid_argument);
        CHECK(Field::parse("Q").is_rationals());
        CHECK(Field::parse("GF(7)") == Field::prime(7));
        CHECK_THROWS_AS(Field::parse("GF(8)"), std::invalid_argument);
        CHECK_THROWS_AS(Field::parse("R"), std::invalid_argument);
        CHECK_THROWS_AS(Field::parse("GF(7"), std::invalid_argument);
    }

    TEST_CASE("rational syntax round trips in lowest terms")
    {
        const Field q;
        CHECK(Scalar::parse(q, "6/4").str() == "3/2");
        CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");
        CHECK(Scalar::parse(q, "+5").str() == "5");
        CHECK(Scalar::parse(q, "0/7").str() == "0");
        CHECK(Scalar::parse(q, "-0").str() == "0");
        for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/0", "--1", "1 /2", "0x3"})
            CHECK_THROWS_AS(Scalar::parse(q, bad), std::invalid_argument);
    }

    TEST_CASE("prime-field syntax accepts residues only")
    {
        const Field f = Field::prime(5);
        CHECK(Scalar::parse(f, "4").residue() == 4);
        CHECK_THROWS_AS(Scalar::parse(f, "5"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse(f, "-1"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse(f, "1/2"), std::invalid_argument);
    }

    TEST_CASE("inverses in GF(p) agree with a brute-force search")
    {
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) {
            const Field f = Field::prime(p);
            for (std::uint32_t a = 1; a < p; ++a) {
                std::uint32_t oracle = 0;
                for (std::uint32_t b = 1; b < p; ++b)
                    if (a * b % p == 1) oracle = b;
                CHECK(Scalar(f, a).inverse().residue() == oracle);
            }
            CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
        }
    }

    TEST_CASE("reduction of rationals into GF(p)")
    {
        const Field f = Field::prime(7);
        CHECK(Scalar::from_rational(f, mpq_class(1, 2)).residue() == 4);
        CHECK(Scalar::from_rational(f, mpq_class(-3, 5)).residue() == 5);  // -3 * 3 = -9 = 5
        CHECK_THROWS_AS(Scalar::from_rational(f, mpq_class(1, 14)), std::domain_error);
        CHECK(Scalar(f, -1).residue() == 6);
    }

    TEST_CASE("mixed fields are rejected")
    {
        CHECK_THROWS_AS(Scalar(Field::prime(3), 1) + Scalar(Field::prime(5), 1), std::invalid_argument);
        CHECK_THROWS_AS(Scalar(Field{}, 1) * Scalar(Field::prime(5), 1), std::invalid_argument);
    }

    TEST_CASE("field axioms on random elements")
    {
        std::mt19937_64 rng(11);
        for (const Field f : {Field{}, Field::prime(2), Field::prime(7), Field::prime(65521)})
            for (int i = 0; i < 200; ++i) {
                const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a + b) - b == a);
                CHECK(a * b == b * a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
    }
}

TEST_SUITE("matrices")
{
    TEST_CASE("hand-reduced rational matrix")
    {
        const Field q;
        const Matrix m = Matrix::from_ints(q, {{2, 4, 1}, {1, 2, 0}, {3, 6, 1}});
        // Row 3 = row 1 + row 2, so rank 2 with pivots in columns 1 and 3.
        const RowEchelon e = row_reduce(m);
        CHECK(e.rank() == 2);
        CHECK(e.pivots == std::vector<std::size_t>{0, 2});
        CHECK(e.matrix == Matrix::from_ints(q, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
    }

    TEST_CASE("rref is idempotent and rank-nullity holds")
    {
        std::mt19937_64 rng(3);
        for (const Field f : {Field{}, Field::prime(2), Field::prime(3)})
            for (int trial = 0; trial < 60; ++trial) {
                std::uniform_int_distribution<std::size_t> size(1, 6);
                const std::size_t r = size(rng), c = size(rng);
                const Matrix m = random_matrix(f, r, c, rng);
                const Matrix e = rref(m);
                CHECK(rref(e) == e);
                const Subspace k = kernel(m);
                CHECK(rank(m) + k.dim() == c);
                for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
            }
    }

    TEST_CASE("solve returns a solution or detects inconsistency")
    {
        std::mt19937_64 rng(5);
        for (const Field f : {Field{}, Field::prime(5)})
            for (int trial = 0; trial < 60; ++trial) {
                const Matrix a = random_matrix(f, 4, 3, rng);
                const Vector x = random_vector(f, 3, rng);
                const Vector b = a.apply(x);
                const auto sol = solve(a, b);
                REQUIRE(sol.has_value());
                CHECK(a.apply(*sol) == b);
            }
        const Field q;
        const Matrix a = Matrix::from_ints(q, {{1, 1}, {2, 2}});
        CHECK_FALSE(solve(a, make_vector(q, {1, 3})).has_value());
    }

    TEST_CASE("matrix product is associative and the identity is neutral")
    {
        std::mt19937_64 rng(8);
        const Field f;
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix a = random_matrix(f, 3, 4, rng), b = random_matrix(f, 4, 2, rng), c = random_matrix(f, 2, 3, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(Matrix::identity(f, 3) * a == a);
            CHECK((a * b).transpose() == b.transpose() * a.transpose());
        }
    }
}

TEST_SUITE("subspaces")
{
    TEST_CASE("canonical form: equal spans compare equal")
    {
        std::mt19937_64 rng(21);
        const Field f;
        for (int trial = 0; trial < 40; ++trial) {
            const std::vector<Vector> gens{random_vector(f, 4, rng), random_vector(f, 4, rng)};
            const Scalar c = random_scalar(f, rng);
            const std::vector<Vector> other{gens[0] + c * gens[1], gens[1], gens[0] - gens[0]};
            CHECK(Subspace::span(f, 4, gens) == Subspace::span(f, 4, other));
        }
    }

    TEST_CASE("sum and intersection against element enumeration over GF(3)")
    {
        std::mt19937_64 rng(34);
        const Field f = Field::prime(3);
        for (int trial = 0; trial < 40; ++trial) {
            const std::vector<Vector> g1{random_vector(f, 3, rng), random_vector(f, 3, rng)};
            const std::vector<Vector> g2{random_vector(f, 3, rng)};
            const Subspace s = Subspace::span(f, 3, g1), t = Subspace::span(f, 3, g2);
            const auto es = span_elements(f, g1), et = span_elements(f, g2);
            std::size_t common = 0;
            for (const auto& v : es)
                if (std::find(et.begin(), et.end(), v) != et.end()) ++common;
            const Subspace meet = subspace_intersect(s, t);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < meet.dim(); ++i) expected *= 3;
            CHECK(common == expected);
            for (const auto& v : meet.basis()) {
                CHECK(std::find(es.begin(), es.end(), v) != es.end());
                CHECK(std::find(et.begin(), et.end(), v) != et.end());
            }
            std::vector<Vector> all = g1;
            all.insert(all.end(), g2.begin(), g2.end());
            CHECK(subspace_sum(s, t).dim() + meet.dim() == s.dim() + t.dim());
            CHECK(span_elements(f, all).size() == [&] {
                std::size_t n = 1;
                for (std::size_t i = 0; i < subspace_sum(s, t).dim(); ++i) n *= 3;
                return n;
            }());
        }
    }

    TEST_CASE("coordinates reconstruct vectors")
    {
        std::mt19937_64 rng(55);
        const Field f;
        const std::vector<Vector> gens{random_vector(f, 5, rng), random_vector(f, 5, rng), random_vector(f, 5, rng)};
        const Subspace s = Subspace::span(f, 5, gens);
        for (int trial = 0; trial < 20; ++trial) {
            Vector v = zero_vector(f, 5);
            for (const auto& g : gens) axpy(v, random_scalar(f, rng), g);
            const Vector c = s.coordinates(v);
            Vector back = zero_vector(f, 5);
            const auto basis = s.basis();
            for (std::size_t i = 0; i < basis.size(); ++i) axpy(back, c[i], basis[i]);
            CHECK(back == v);
            CHECK(s.contains(v));
        }
    }

    TEST_CASE("image of a subspace")
    {
        const Field q;
        const Matrix m = Matrix::from_ints(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
        const Subspace full = Subspace::full(q, 3);
        CHECK(image(m, full) == Subspace::span(q, 3, std::vector<Vector>{make_vector(q, {1, 0, 0}), make_vector(q, {0, 1, 0})}));
        CHECK(kernel(m) == Subspace::span(q, 3, std::vector<Vector>{make_vector(q, {1, 0, 0})}));
    }
}
