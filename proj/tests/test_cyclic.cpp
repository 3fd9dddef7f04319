#include "doctest.h"
#include "support.hpp"

#include "leibniz/cyclic.hpp"
#include "leibniz/families.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/lattice.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

// Smallest subalgebra containing x, by closing the element set under the
// bracket and linear combinations. Only usable over tiny fields.
std::vector<Vector> closure_oracle(const Algebra& a, const Vector& x)
{
    std::vector<Vector> gens{x};
    for (;;) {
        const auto elems = span_elements(a.field(), gens);
        bool grew = false;
        for (const auto& u : elems) {
            for (const auto& v : elems) {
                const Vector w = a.bracket(u, v);
                if (std::find(elems.begin(), elems.end(), w) == elems.end()) {
                    gens.push_back(w);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
        if (!grew) return elems;
    }
}

std::size_t power(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

TEST_SUITE("left-normed chains")
{
    TEST_CASE("cyclic nilpotent algebra is generated by a1")
    {
        for (const Field f : {Field{}, Field::prime(3)})
            for (std::size_t n = 1; n <= 6; ++n) {
                const Algebra a = cyclic_nilpotent(n, f);
                const CyclicProbe p = generated_subalgebra(a, a.basis_vector(0));
                REQUIRE(p.chain.size() == n);
                for (std::size_t k = 0; k < n; ++k) CHECK(p.chain[k] == a.basis_vector(k));
                CHECK(p.span.is_full());
                CHECK(is_zero(left_normed(a, a.basis_vector(0), n + 1)));
            }
    }

    TEST_CASE("generated subalgebra matches a closure oracle over GF(2) and GF(3)")
    {
        std::mt19937_64 rng(17);
        for (const auto& e : corpus()) {
            const Algebra& a = e.algebra;
            if (!a.field().is_finite()) continue;
            for (int trial = 0; trial < 6; ++trial) {
                const Vector x = random_vector(a.field(), a.dim(), rng);
                const CyclicProbe p = generated_subalgebra(a, x);
                CHECK_MESSAGE(power(a.field().characteristic(), p.span.dim()) == closure_oracle(a, x).size(), e.name);
                CHECK(is_subalgebra(a, p.span));
            }
        }
    }

    TEST_CASE("structure of cyclic subalgebras holds on random generators")
    {
        std::mt19937_64 rng(99);
        for (const auto& e : corpus())
            for (int trial = 0; trial < 5; ++trial) {
                const Vector x = random_vector(e.algebra.field(), e.algebra.dim(), rng);
                const PropositionReport r = proposition_check(e.algebra, x);
                CHECK_MESSAGE(r.all_pass(), e.name, " ", r.str());
            }
    }

    TEST_CASE("canonical cyclic basis reproduces the cyclic table")
    {
        std::mt19937_64 rng(4);
        const Field q;
        for (std::size_t n = 2; n <= 5; ++n)
            for (int trial = 0; trial < 4; ++trial) {
                const Algebra a = random_basis_change(cyclic_nilpotent(n, q), rng);
                // Any vector outside [L,L] generates; pick one by scanning the basis.
                const Subspace sq = product_subspace(a, Subspace::full(q, n), Subspace::full(q, n));
                std::size_t g = 0;
                while (sq.contains(a.basis_vector(g))) ++g;
                const auto basis = canonical_cyclic_basis(a, a.basis_vector(g));
                REQUIRE(basis.size() == n);
                const Algebra b = change_basis(a, basis);
                CHECK(b.tensor() == cyclic_nilpotent(n, q).tensor());
            }
    }

    TEST_CASE("canonical cyclic basis rejects non-nilpotent generators")
    {
        const Algebra l2 = dim2_L2(Field{});
        CHECK_THROWS_AS(canonical_cyclic_basis(l2, l2.basis_vector(0)), std::invalid_argument);
    }
}

TEST_SUITE("cyclicity")
{
    TEST_CASE("criterion and exhaustive scan agree on every nilpotent subalgebra")
    {
        for (const auto& e : corpus()) {
            const Algebra& a = e.algebra;
            if (!a.field().is_finite() || a.dim() > 4) continue;
            for_each_subspace(a.dim(), a.field(), [&](const Subspace& s) {
                if (!is_subalgebra(a, s)) return;
                const CyclicVerdict crit = cyclic_generator_criterion(a, s);
                const auto scan = cyclic_generator_scan(a, s);
                if (crit.status == Cyclicity::unknown) return;
                CHECK_MESSAGE((crit.status == Cyclicity::cyclic) == scan.has_value(), e.name, " ", s.str());
                if (crit.generator) CHECK(generated_subalgebra(a, *crit.generator).span == s);
                if (scan) CHECK(generated_subalgebra(a, *scan).span == s);
            });
        }
    }

    TEST_CASE("scan returns the lexicographically least generator")
    {
        const Field f = Field::prime(2);
        const Algebra a = cyclic_nilpotent(2, f);
        const auto g = cyclic_generator_scan(a, Subspace::full(f, 2));
        REQUIRE(g.has_value());
        // Candidates in order (0,1), (1,0): a2 spans only itself, a1 generates.
        CHECK(*g == make_vector(f, {1, 0}));
    }

    TEST_CASE("non-nilpotent subalgebras are left to the scan")
    {
        const Field f = Field::prime(3);
        const Algebra l2 = dim2_L2(f);
        CHECK(cyclic_generator_criterion(l2, Subspace::full(f, 2)).status == Cyclicity::unknown);
        const CyclicVerdict v = is_cyclic_subalgebra(l2, Subspace::full(f, 2));
        CHECK(v.status == Cyclicity::cyclic);
        CHECK(generated_subalgebra(l2, *v.generator).span.is_full());
    }

    TEST_CASE("abelian plane is not cyclic")
    {
        for (const Field f : {Field{}, Field::prime(2)}) {
            const Algebra a = Algebra(StructureTensor(f, 2)).checked();
            CHECK(is_cyclic_subalgebra(a, Subspace::full(f, 2)).status == Cyclicity::not_cyclic);
        }
    }
}
