#include "leibniz/lattice.hpp"

#include "leibniz/invariants.hpp"

#include <stdexcept>

namespace leibniz {

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q)
{
    if (k > n) return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t top = 1, bottom = 1;
        for (std::size_t e = 0; e < n - i; ++e) top *= q;
        for (std::size_t e = 0; e < i + 1; ++e) bottom *= q;
        num *= top - 1;
        den *= bottom - 1;
    }
    return num / den;
}

namespace {

void for_each_pivot_set(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
        visit(pivots);
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace

void for_each_subspace(std::size_t n, Field field, const std::function<void(const Subspace&)>& visit)
{
    if (!field.is_finite()) throw std::invalid_argument("subspace enumeration needs a finite field");
    if (n > max_enumeration_dim)
        throw std::invalid_argument("subspace enumeration is limited to dimension " +
                                    std::to_string(max_enumeration_dim));
    const std::uint32_t p = field.characteristic();
    visit(Subspace::zero(field, n));
    for (std::size_t k = 1; k <= n; ++k) {
        for_each_pivot_set(n, k, [&](const std::vector<std::size_t>& pivots) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : pivots) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free.emplace_back(r, c);

            Matrix m(field, k, n);
            for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = Scalar::one(field);
            std::vector<std::uint32_t> digits(free.size(), 0);
            for (;;) {
                for (std::size_t i = 0; i < free.size(); ++i)
                    m(free[i].first, free[i].second) = Scalar(field, static_cast<long>(digits[i]));
                visit(Subspace::row_space(m));
                std::size_t pos = free.size();
                while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
                if (pos == 0) break;
            }
        });
    }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, Field field)
{
    std::vector<Subspace> out;
    for_each_subspace(n, field, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<const LatticeEntry*> SubalgebraLattice::maximal() const
{
    std::vector<const LatticeEntry*> out;
    for (const auto& e : entries)
        if (e.maximal) out.push_back(&e);
    return out;
}

SubalgebraLattice subalgebra_lattice(const Algebra& a)
{
    require_checked(a);
    const Field f = a.field();
    if (!f.is_finite()) throw std::invalid_argument("subalgebra lattice needs a finite field");
    const auto p = f.characteristic();
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("subalgebra lattice supports GF(2), GF(3), GF(5)");
    if (a.dim() > max_lattice_dim)
        throw std::invalid_argument("subalgebra lattice is limited to dimension " + std::to_string(max_lattice_dim));

    SubalgebraLattice lattice{a.dim(), f, {}};
    for_each_subspace(a.dim(), f, [&](const Subspace& s) {
        if (!is_subalgebra(a, s)) return;
        LatticeEntry e;
        e.space = s;
        e.left_ideal = is_left_ideal(a, s);
        e.right_ideal = is_right_ideal(a, s);
        e.ideal = e.left_ideal && e.right_ideal;
        e.generator = cyclic_generator_scan(a, s);
        lattice.entries.push_back(std::move(e));
    });

    for (auto& e : lattice.entries) {
        if (e.space.is_full()) continue;
        e.maximal = true;
        for (const auto& other : lattice.entries)
            if (other.space.dim() > e.space.dim() && !other.space.is_full() && other.space.contains(e.space)) {
                e.maximal = false;
                break;
            }
    }
    return lattice;
}

bool MaximalCyclicReport::has_maximal_cyclic() const
{
    for (const auto& m : maximal)
        if (m.cyclicity == Cyclicity::cyclic) return true;
    return false;
}

namespace {

void record_ideal_check(MaximalCyclicReport& report)
{
    if (!report.nilpotent) return;
    bool all = true;
    for (const auto& m : report.maximal) all = all && m.ideal;
    report.all_maximal_are_ideals = all;
}

}  // namespace

MaximalCyclicReport maximal_cyclic_report(const Algebra& a)
{
    require_checked(a);
    MaximalCyclicReport report;
    report.nilpotent = is_nilpotent(a);

    if (a.field().is_finite()) {
        const SubalgebraLattice lattice = subalgebra_lattice(a);
        for (const auto* e : lattice.maximal())
            report.maximal.push_back({e->space, e->generator ? Cyclicity::cyclic : Cyclicity::not_cyclic, e->generator,
                                      e->ideal});
        record_ideal_check(report);
        return report;
    }

    // Rational path: hyperplanes containing [L,L]. When [L,L] has codimension
    // one it is the only such hyperplane; otherwise only the coordinate
    // hyperplanes spanned by [L,L] and all but one complement vector are tried.
    const Subspace full = Subspace::full(a.field(), a.dim());
    const Subspace derived = product_subspace(a, full, full);
    const std::size_t codim = a.dim() - derived.dim();
    report.exhaustive = report.nilpotent && codim == 1;

    std::vector<Vector> complement;
    {
        Subspace grown = derived;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Vector e = a.basis_vector(i);
            if (grown.contains(e)) continue;
            complement.push_back(e);
            grown = subspace_sum(grown, Subspace::span(a.field(), a.dim(), std::vector<Vector>{e}));
        }
    }
    for (std::size_t skip = 0; skip < complement.size(); ++skip) {
        std::vector<Vector> gens = derived.basis();
        for (std::size_t i = 0; i < complement.size(); ++i)
            if (i != skip) gens.push_back(complement[i]);
        const Subspace h = Subspace::span(a.field(), a.dim(), gens);
        if (!is_subalgebra(a, h)) continue;
        const CyclicVerdict verdict = h.is_zero() ? CyclicVerdict{Cyclicity::not_cyclic, std::nullopt}
                                                  : cyclic_generator_criterion(a, h);
        report.maximal.push_back({h, verdict.status, verdict.generator, is_ideal(a, h)});
    }
    record_ideal_check(report);
    return report;
}

}  // namespace leibniz
