#include "leibniz/cyclic.hpp"

#include "leibniz/invariants.hpp"

#include <stdexcept>
#include <utility>

namespace leibniz {

Vector left_normed(const Algebra& a, const Vector& x, std::size_t k)
{
    require_checked(a);
    require_vector(a, x);
    if (k < 1) throw std::invalid_argument("left-normed commutators are indexed from 1");
    Vector ln = x;
    for (std::size_t i = 1; i < k; ++i) ln = a.bracket(x, ln);
    return ln;
}

CyclicProbe generated_subalgebra(const Algebra& a, const Vector& x)
{
    require_checked(a);
    require_vector(a, x);
    CyclicProbe probe{x, {}, Subspace::zero(a.field(), a.dim())};
    Vector ln = x;
    while (!probe.span.contains(ln)) {
        probe.chain.push_back(ln);
        probe.span = Subspace::span(a.field(), a.dim(), probe.chain);
        ln = a.bracket(x, ln);
    }
    if (!is_subalgebra(a, probe.span)) throw std::logic_error("span of left-normed commutators is not a subalgebra");
    return probe;
}

bool PropositionReport::all_pass() const noexcept
{
    for (bool b : items)
        if (!b) return false;
    return true;
}

std::string PropositionReport::str() const
{
    static constexpr const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += std::string("(") + names[i] + ")=" + (items[i] ? "pass" : "FAIL");
    }
    return out;
}

namespace {

void insert_unique(std::vector<Vector>& values, Vector v)
{
    for (const auto& existing : values)
        if (existing == v) return;
    values.push_back(std::move(v));
}

Subspace span_of(const Algebra& a, const std::vector<Vector>& vectors, std::size_t from, std::size_t to)
{
    std::vector<Vector> part(vectors.begin() + static_cast<std::ptrdiff_t>(from),
                             vectors.begin() + static_cast<std::ptrdiff_t>(to));
    return Subspace::span(a.field(), a.dim(), part);
}

}  // namespace

PropositionReport proposition_check(const Algebra& a, const Vector& x)
{
    require_checked(a);
    const CyclicProbe probe = generated_subalgebra(a, x);
    const std::size_t m = probe.chain.size();
    const std::size_t n = a.dim();
    PropositionReport report;

    // ln[t] = ln_{t+1}(x); long enough that every tail span is captured.
    const std::size_t horizon = m + n + 3;
    std::vector<Vector> ln{x};
    while (ln.size() < horizon) ln.push_back(a.bracket(x, ln.back()));

    bool item1 = true;
    for (std::size_t k = 2; k <= m + 1; ++k)
        for (std::size_t j = 1; j <= m + 1; ++j)
            if (!is_zero(a.bracket(ln[k - 1], ln[j - 1]))) item1 = false;
    report.items[0] = item1;

    // products[k] holds every value of a bracketing of k copies of x.
    bool item2 = true;
    std::vector<std::vector<Vector>> products(6);
    products[1].push_back(x);
    for (std::size_t k = 2; k <= 5; ++k) {
        for (std::size_t i = 1; i < k; ++i)
            for (const auto& u : products[i])
                for (const auto& v : products[k - i]) insert_unique(products[k], a.bracket(u, v));
        for (const auto& p : products[k])
            if (!is_zero(p) && !(p == ln[k - 1])) item2 = false;
    }
    report.items[1] = item2;

    const Subspace& s = probe.span;
    report.items[2] = s.contains(x) && s.contains(ln[m]) && is_subalgebra(a, s);

    const Subspace derived = product_subspace(a, s, s);
    report.items[3] = derived == span_of(a, ln, 1, m + 1);

    if (s.is_zero()) {
        report.items[4] = derived.is_zero();
        report.items[5] = true;
    } else {
        const Algebra restricted = restrict_to_subalgebra(a, s);
        report.items[4] = derived == lift_subspace(s, leibniz_kernel(restricted));

        const auto series = lower_central_series(restricted);
        bool item6 = true;
        for (std::size_t k = 1; k <= m + 1; ++k) {
            const Subspace& gamma = series[std::min(k, series.size()) - 1];
            if (!(lift_subspace(s, gamma) == span_of(a, ln, k - 1, k - 1 + n + 1))) item6 = false;
        }
        report.items[5] = item6;
    }

    bool item7 = left_center(a).contains(derived) && product_subspace(a, derived, derived).is_zero();
    for (const auto& u : probe.chain)
        for (const auto& v : probe.chain) {
            const Vector uv = a.bracket(u, v);
            for (std::size_t z = 0; z < n && item7; ++z)
                if (!is_zero(a.bracket(uv, a.basis_vector(z)))) item7 = false;
        }
    report.items[6] = item7;
    return report;
}

std::optional<Vector> cyclic_generator_scan(const Algebra& a, const Subspace& s)
{
    require_checked(a);
    if (!a.field().is_finite()) throw std::invalid_argument("exhaustive generator scan needs a finite field");
    if (!is_subalgebra(a, s)) throw std::invalid_argument("subspace is not a subalgebra");
    const std::size_t m = s.dim();
    if (m == 0) return std::nullopt;
    const std::uint32_t p = a.field().characteristic();
    const auto basis = s.basis();

    // Coefficient tuples in lexicographic order (first coordinate most
    // significant). With an RREF basis this is lexicographic order of the
    // ambient coordinate vectors.
    std::vector<std::uint32_t> coeffs(m, 0);
    for (;;) {
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++coeffs[pos] < p) break;
            coeffs[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
        Vector x = zero_vector(a.field(), a.dim());
        for (std::size_t i = 0; i < m; ++i)
            if (coeffs[i]) axpy(x, Scalar(a.field(), coeffs[i]), basis[i]);
        if (generated_subalgebra(a, x).span.dim() == m) return x;
    }
}

CyclicVerdict cyclic_generator_criterion(const Algebra& a, const Subspace& s)
{
    require_checked(a);
    if (!is_subalgebra(a, s)) throw std::invalid_argument("subspace is not a subalgebra");
    if (s.is_zero()) return {Cyclicity::not_cyclic, std::nullopt};
    if (!is_nilpotent(restrict_to_subalgebra(a, s))) return {Cyclicity::unknown, std::nullopt};

    const Subspace derived = product_subspace(a, s, s);
    if (s.dim() - derived.dim() != 1) return {Cyclicity::not_cyclic, std::nullopt};
    for (const auto& candidate : s.basis()) {
        if (derived.contains(candidate)) continue;
        if (generated_subalgebra(a, candidate).span == s) return {Cyclicity::cyclic, candidate};
        throw std::logic_error("element outside [S,S] does not generate the nilpotent subalgebra S");
    }
    throw std::logic_error("no basis vector of S outside [S,S]");
}

CyclicVerdict is_cyclic_subalgebra(const Algebra& a, const Subspace& s)
{
    if (a.field().is_finite()) {
        auto generator = cyclic_generator_scan(a, s);
        if (generator) return {Cyclicity::cyclic, std::move(generator)};
        return {Cyclicity::not_cyclic, std::nullopt};
    }
    return cyclic_generator_criterion(a, s);
}

std::vector<Vector> canonical_cyclic_basis(const Algebra& a, const Vector& x)
{
    const CyclicProbe probe = generated_subalgebra(a, x);
    const auto& chain = probe.chain;
    const std::size_t m = chain.size();
    if (m == 0) throw std::invalid_argument("the zero vector generates the zero subalgebra");
    if (!is_nilpotent(restrict_to_subalgebra(a, probe.span)))
        throw std::invalid_argument("cyclic subalgebra generated by " + a.format(x) + " is not nilpotent");

    const Vector zero = zero_vector(a.field(), a.dim());
    for (std::size_t j = 0; j < m; ++j) {
        const Vector& expected = j + 1 < m ? chain[j + 1] : zero;
        if (!(a.bracket(chain[0], chain[j]) == expected))
            throw std::invalid_argument("left-normed chain does not satisfy the canonical cyclic table");
    }
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (!is_zero(a.bracket(chain[i], chain[k])))
                throw std::invalid_argument("left-normed chain does not satisfy the canonical cyclic table");
    return chain;
}

}  // namespace leibniz
