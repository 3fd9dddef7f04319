#include "leibniz/families.hpp"

#include "leibniz/cyclic.hpp"
#include "leibniz/invariants.hpp"

#include <stdexcept>
#include <utility>

namespace leibniz {

namespace {

std::vector<std::string> chain_labels(const std::string& prefix, std::size_t n, const std::string& extra = {})
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
    if (!extra.empty()) labels.push_back(extra);
    return labels;
}

// [a1,a1] = a2, [a1,a_j] = a_{j+1} on the first n basis vectors.
void fill_cyclic_table(StructureTensor& t, std::size_t n)
{
    const Scalar one = Scalar::one(t.field());
    for (std::size_t j = 0; j + 1 < n; ++j) t(0, j, j + 1) = one;
}

void require_n(std::size_t n, std::size_t minimum, const char* family)
{
    if (n < minimum)
        throw std::invalid_argument(std::string(family) + " needs n >= " + std::to_string(minimum) + ", got " +
                                    std::to_string(n));
}

void require_field(const std::vector<Scalar>& values, Field field)
{
    for (const auto& v : values)
        if (!(v.field() == field)) throw std::invalid_argument("parameter is not over " + field.name());
}

}  // namespace

Algebra cyclic_nilpotent(std::size_t n, Field field)
{
    require_n(n, 1, "cyclic_nilpotent");
    StructureTensor t(field, n);
    fill_cyclic_table(t, n);
    return Algebra(std::move(t), chain_labels("a", n)).checked();
}

Algebra dim2_L1(Field field)
{
    StructureTensor t(field, 2);
    t(0, 0, 1) = Scalar::one(field);
    return Algebra(std::move(t), {"a", "b"}).checked();
}

Algebra dim2_L2(Field field)
{
    StructureTensor t(field, 2);
    t(0, 0, 1) = Scalar::one(field);
    t(0, 1, 1) = Scalar::one(field);
    return Algebra(std::move(t), {"c", "d"}).checked();
}

Algebra theoremA_i(std::size_t n, Field field)
{
    require_n(n, 2, "theoremA_i");
    StructureTensor t(field, n + 1);
    fill_cyclic_table(t, n);
    return Algebra(std::move(t), chain_labels("a", n, "d")).checked();
}

Algebra theoremA_ii(std::size_t n, Field field)
{
    require_n(n, 2, "theoremA_ii");
    StructureTensor t(field, n + 1);
    fill_cyclic_table(t, n);
    t(n, n, n - 1) = Scalar::one(field);
    return Algebra(std::move(t), chain_labels("a", n, "d")).checked();
}

Algebra quaternion_analog(Field field)
{
    return theoremA_ii(2, field);
}

Algebra theoremA_iii(std::size_t n, std::size_t t, const std::vector<Scalar>& gammas, const Scalar& tau, Field field,
                     IndexConvention convention)
{
    require_n(n, 2, "theoremA_iii");
    if (t < 2 || t > n) throw std::invalid_argument("theoremA_iii needs 2 <= t <= n");
    if (gammas.size() != n - t)
        throw std::invalid_argument("theoremA_iii expects " + std::to_string(n - t) + " gammas (gamma_t+1..gamma_n), got " +
                                    std::to_string(gammas.size()));
    require_field(gammas, field);
    require_field({tau}, field);

    const std::size_t s = n;  // 0-based index of s
    StructureTensor table(field, n + 1);
    fill_cyclic_table(table, n);

    // band[m] is the coefficient of a_{t+k-1+m} in [s, a_k]; band[0] = 1.
    std::vector<Scalar> band{Scalar::one(field)};
    band.insert(band.end(), gammas.begin(), gammas.end());
    for (std::size_t k = 1; k <= n - t + 1; ++k)
        for (std::size_t m = 0; t + k - 1 + m <= n; ++m) table(s, k - 1, t + k - 2 + m) = band[m];

    if (!tau.is_zero()) {
        const std::size_t index = convention == IndexConvention::as_printed ? n - t : n - t + 2;
        if (index < 1 || index > n)
            throw std::invalid_argument("[a1, s] = tau*a_" + std::to_string(index) + " is outside a1..a" +
                                        std::to_string(n) + " for t = " + std::to_string(t));
        table(0, s, index - 1) = tau;
    }
    return Algebra(std::move(table), chain_labels("a", n, "s"));
}

Algebra theoremB(std::size_t n, const std::vector<Scalar>& gammas, const Scalar& delta_n, Field field)
{
    require_n(n, 2, "theoremB");
    if (gammas.size() != n - 1)
        throw std::invalid_argument("theoremB expects " + std::to_string(n - 1) + " gammas (gamma_2..gamma_n), got " +
                                    std::to_string(gammas.size()));
    require_field(gammas, field);
    require_field({delta_n}, field);
    auto gamma = [&](std::size_t j) -> const Scalar& { return gammas[j - 2]; };

    const std::size_t d = n;
    StructureTensor table(field, n + 1);
    fill_cyclic_table(table, n);
    table(0, d, 0) = -Scalar::one(field);
    for (std::size_t k = 1; k <= n; ++k) {
        table(d, k - 1, k - 1) = Scalar(field, static_cast<long>(k));
        for (std::size_t m = 1; k + m <= n; ++m) table(d, k - 1, k + m - 1) = gamma(m + 1);
    }
    for (std::size_t i = 2; i + 1 <= n; ++i) table(d, d, i - 1) = -gamma(i + 1);
    table(d, d, n - 1) = delta_n;
    return Algebra(std::move(table), chain_labels("a", n, "d"));
}

Algebra theoremC(std::size_t n, Field field)
{
    require_n(n, 2, "theoremC");
    if (!field.is_rationals()) throw std::invalid_argument("theoremC requires characteristic 0");
    const std::size_t s = n;
    StructureTensor table(field, n + 1);
    fill_cyclic_table(table, n);
    table(0, s, 0) = -Scalar::one(field);
    for (std::size_t j = 1; j <= n; ++j) table(s, j - 1, j - 1) = Scalar(field, static_cast<long>(j));
    return Algebra(std::move(table), chain_labels("b", n, "s")).checked();
}

FamilyId parse_family_id(const std::string& name)
{
    if (name == "cyclic") return FamilyId::cyclic;
    if (name == "L1") return FamilyId::L1;
    if (name == "L2") return FamilyId::L2;
    if (name == "theoremA-i") return FamilyId::A_i;
    if (name == "theoremA-ii") return FamilyId::A_ii;
    if (name == "theoremA-iii") return FamilyId::A_iii;
    if (name == "theoremB") return FamilyId::B;
    if (name == "theoremC") return FamilyId::C;
    if (name == "quaternion") return FamilyId::quaternion_analog;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(FamilyId id)
{
    switch (id) {
    case FamilyId::cyclic: return "cyclic";
    case FamilyId::L1: return "L1";
    case FamilyId::L2: return "L2";
    case FamilyId::A_i: return "theoremA-i";
    case FamilyId::A_ii: return "theoremA-ii";
    case FamilyId::A_iii: return "theoremA-iii";
    case FamilyId::B: return "theoremB";
    case FamilyId::C: return "theoremC";
    case FamilyId::quaternion_analog: return "quaternion";
    }
    return "unknown";
}

Algebra build_family(const FamilyParams& p)
{
    const Scalar zero = Scalar::zero(p.field);
    switch (p.family) {
    case FamilyId::cyclic: return cyclic_nilpotent(p.n, p.field);
    case FamilyId::L1: return dim2_L1(p.field);
    case FamilyId::L2: return dim2_L2(p.field);
    case FamilyId::A_i: return theoremA_i(p.n, p.field);
    case FamilyId::A_ii: return theoremA_ii(p.n, p.field);
    case FamilyId::quaternion_analog: return quaternion_analog(p.field);
    case FamilyId::A_iii: {
        std::vector<Scalar> gammas = p.gammas;
        if (gammas.empty() && p.n >= p.t) gammas.assign(p.n - p.t, zero);
        return theoremA_iii(p.n, p.t, gammas, p.tau.value_or(zero), p.field, p.convention);
    }
    case FamilyId::B: {
        std::vector<Scalar> gammas = p.gammas;
        if (gammas.empty() && p.n >= 1) gammas.assign(p.n - 1, zero);
        return theoremB(p.n, gammas, p.delta_n.value_or(zero), p.field);
    }
    case FamilyId::C: return theoremC(p.n, p.field);
    }
    throw std::invalid_argument("unknown family");
}

std::string describe(const FamilyParams& p)
{
    std::string out = "family=" + family_name(p.family);
    const bool has_n = p.family != FamilyId::L1 && p.family != FamilyId::L2 && p.family != FamilyId::quaternion_analog;
    if (has_n) out += " n=" + std::to_string(p.n);
    if (p.family == FamilyId::A_iii) out += " t=" + std::to_string(p.t);
    if (p.family == FamilyId::A_iii || p.family == FamilyId::B) {
        out += " gamma=";
        for (std::size_t i = 0; i < p.gammas.size(); ++i) out += (i ? "," : "") + p.gammas[i].str();
    }
    if (p.family == FamilyId::A_iii) {
        out += " tau=" + (p.tau ? p.tau->str() : std::string("0"));
        out += std::string(" convention=") + (p.convention == IndexConvention::as_printed ? "printed" : "derived");
    }
    if (p.family == FamilyId::B) out += " delta=" + (p.delta_n ? p.delta_n->str() : std::string("0"));
    out += " field=" + p.field.name();
    return out;
}

namespace {

// Coordinates with respect to an ordered basis given as columns.
class Coordinates {
public:
    Coordinates(const Algebra& a, std::vector<Vector> basis) : basis_(std::move(basis))
    {
        for (const auto& v : basis_) require_vector(a, v);
        matrix_ = Matrix::from_columns(a.field(), a.dim(), basis_);
        if (basis_.size() != a.dim() || rank(matrix_) != a.dim())
            throw std::invalid_argument("K-basis together with the extra vector is not a basis of the algebra");
    }

    Vector operator()(const Vector& v) const { return *solve(matrix_, v); }
    const Vector& basis(std::size_t i) const { return basis_[i]; }

private:
    std::vector<Vector> basis_;
    Matrix matrix_;
};

std::vector<Vector> with_extra(std::vector<Vector> k_basis, const Vector& extra)
{
    k_basis.push_back(extra);
    return k_basis;
}

}  // namespace

Lemma7Result lemma7_normalize(const Algebra& a, const std::vector<Vector>& k_basis, const Vector& b)
{
    require_checked(a);
    if (k_basis.empty()) throw std::invalid_argument("empty K-basis");
    if (canonical_cyclic_basis(a, k_basis[0]) != k_basis)
        throw std::invalid_argument("K-basis is not the canonical left-normed chain of its first vector");
    if (!is_nilpotent(a)) throw std::invalid_argument("lemma7_normalize needs a nilpotent algebra");
    const std::size_t n = k_basis.size();
    const Coordinates coords(a, with_extra(k_basis, b));

    const Vector c = coords(a.bracket(k_basis[0], b));
    if (!c[0].is_zero()) throw std::invalid_argument("[a1, b] has a nonzero a1-component");
    if (!c[n].is_zero()) throw std::invalid_argument("[a1, b] does not lie in K");

    Lemma7Result result{b, {}};
    for (std::size_t j = 2; j <= n; ++j) {
        result.betas.push_back(c[j - 1]);
        axpy(result.d, -c[j - 1], k_basis[j - 2]);
    }
    if (!is_zero(a.bracket(k_basis[0], result.d))) throw std::logic_error("[a1, d] != 0 after normalization");
    const Subspace k_space = Subspace::span(a.field(), a.dim(), k_basis);
    const Subspace d_line = Subspace::span(a.field(), a.dim(), std::vector<Vector>{result.d});
    if (!product_subspace(a, k_space, d_line).is_zero()) throw std::logic_error("[K, d] != 0 after normalization");
    return result;
}

TheoremBNormalization theoremB_normalize(const Algebra& a, const Vector& a1, const Vector& b)
{
    require_checked(a);
    std::vector<Vector> k_basis = canonical_cyclic_basis(a, a1);
    const std::size_t n = k_basis.size();
    const Coordinates coords(a, with_extra(k_basis, b));

    const Scalar beta1 = coords(a.bracket(b, a1))[0];
    if (beta1.is_zero()) throw std::invalid_argument("[b, a1] has zero a1-component (beta1 = 0)");
    const Vector scaled = beta1.inverse() * b;

    const Vector c = coords(a.bracket(a1, scaled));
    if (!(c[0] == -Scalar::one(a.field())) || !c[n].is_zero())
        throw std::invalid_argument("[a1, b/beta1] is not of the form -a1 + (element of span{a2..an})");

    TheoremBNormalization result{scaled, std::move(k_basis), beta1, {}};
    for (std::size_t j = 2; j <= n; ++j) {
        result.sigmas.push_back(c[j - 1]);
        axpy(result.d, -c[j - 1], result.k_basis[j - 2]);
    }
    if (!(a.bracket(a1, result.d) == -a1)) throw std::logic_error("[a1, d] != -a1 after normalization");
    return result;
}

TheoremCReduction theoremC_reduce(const Algebra& a, const std::vector<Vector>& k_basis, const Vector& d)
{
    require_checked(a);
    const Field f = a.field();
    const std::size_t n = k_basis.size();
    if (n < 2) throw std::invalid_argument("theoremC_reduce needs n >= 2");
    if (f.is_finite() && f.characteristic() <= n)
        throw std::invalid_argument("characteristic " + std::to_string(f.characteristic()) +
                                    " divides some j <= n; the lambda system is singular");
    const Coordinates coords(a, with_extra(k_basis, d));
    const Scalar one = Scalar::one(f);
    const Vector zero = zero_vector(f, a.dim());
    auto not_in_form = [](const std::string& what) {
        return std::invalid_argument("input is not in theoremB form: " + what);
    };
    auto at = [&](std::size_t j) -> const Vector& { return k_basis[j - 1]; };

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Vector& expected = (i == 1 && j < n) ? at(j + 1) : zero;
            if (!(a.bracket(at(i), at(j)) == expected)) throw not_in_form("K is not in canonical cyclic form");
        }
    if (!(a.bracket(at(1), d) == -at(1))) throw not_in_form("[a1, d] != -a1");
    for (std::size_t j = 2; j <= n; ++j)
        if (!(a.bracket(at(j), d) == zero)) throw not_in_form("[a_j, d] != 0 for some j >= 2");

    TheoremCReduction r;
    const Vector c1 = coords(a.bracket(d, at(1)));
    if (!(c1[0] == one) || !c1[n].is_zero()) throw not_in_form("[d, a1] is not a1 + (element of span{a2..an})");
    for (std::size_t j = 2; j <= n; ++j) r.gammas.push_back(c1[j - 1]);
    auto gamma = [&](std::size_t j) -> const Scalar& { return r.gammas[j - 2]; };
    if (!gamma(2).is_zero()) throw not_in_form("gamma_2 != 0");

    for (std::size_t k = 1; k <= n; ++k) {
        Vector expected = Scalar(f, static_cast<long>(k)) * at(k);
        for (std::size_t m = 1; k + m <= n; ++m) axpy(expected, gamma(m + 1), at(k + m));
        if (!(a.bracket(d, at(k)) == expected)) throw not_in_form("[d, a_k] does not follow the gamma band");
    }
    const Vector cd = coords(a.bracket(d, d));
    if (!cd[0].is_zero() || !cd[n].is_zero()) throw not_in_form("[d, d] is not in span{a2..an}");
    for (std::size_t i = 2; i + 1 <= n; ++i)
        if (!(cd[i - 1] == -gamma(i + 1))) throw not_in_form("[d, d] does not match -(gamma_3 a_2 + ... )");
    r.delta_n = cd[n - 1];

    // Unknowns lambda_2..lambda_n; equation i compares a_i-coefficients of [d, x] and [d, d].
    r.system = Matrix(f, n - 1, n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
        for (std::size_t j = 2; j < i; ++j) r.system(i - 2, j - 2) = gamma(i - j + 1);
        r.system(i - 2, i - 2) = Scalar(f, static_cast<long>(i));
        r.rhs.push_back(i < n ? -gamma(i + 1) : r.delta_n);
    }
    if (rank(r.system) != n - 1) throw std::logic_error("lambda system is singular");
    r.lambdas = *solve(r.system, r.rhs);
    auto lambda = [&](std::size_t j) -> const Scalar& { return r.lambdas[j - 2]; };

    r.x = zero;
    for (std::size_t j = 2; j <= n; ++j) axpy(r.x, lambda(j), at(j));
    r.s = d - r.x;
    if (!is_zero(a.bracket(r.s, r.s))) throw std::logic_error("[s, s] != 0");

    Vector b1 = at(1);
    for (std::size_t j = 2; j + 1 <= n; ++j) axpy(b1, lambda(j), at(j + 1));
    r.b_basis.push_back(b1);
    for (std::size_t j = 2; j <= n; ++j) r.b_basis.push_back(a.bracket(b1, r.b_basis.back()));
    auto bv = [&](std::size_t j) -> const Vector& { return r.b_basis[j - 1]; };

    r.transition = Matrix(f, n, n);
    Matrix banded(f, n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        const Vector cb = coords(bv(j));
        if (!cb[n].is_zero()) throw std::logic_error("b_j left K");
        for (std::size_t k = 1; k <= n; ++k) r.transition(j - 1, k - 1) = cb[k - 1];
        banded(j - 1, j - 1) = one;
        for (std::size_t m = 2; j + m <= n; ++m) banded(j - 1, j + m - 1) = lambda(m);
    }
    if (!(r.transition == banded)) throw std::logic_error("transition matrix does not have the banded form");
    if (rank(r.transition) != n) throw std::logic_error("transition matrix is singular");

    if (!(a.bracket(bv(1), r.s) == -bv(1))) throw std::logic_error("[b1, s] != -b1");
    for (std::size_t j = 1; j <= n; ++j) {
        if (!(a.bracket(r.s, bv(j)) == Scalar(f, static_cast<long>(j)) * bv(j)))
            throw std::logic_error("[s, b_j] != j b_j");
        if (j >= 2 && !is_zero(a.bracket(bv(j), r.s))) throw std::logic_error("[b_j, s] != 0");
        for (std::size_t k = 1; k <= n; ++k) {
            const Vector& expected = (j == 1 && k < n) ? bv(k + 1) : zero;
            if (!(a.bracket(bv(j), bv(k)) == expected)) throw std::logic_error("b-basis is not a canonical cyclic basis");
        }
    }
    return r;
}

TheoremCReduction theoremC_reduce(const Algebra& a)
{
    if (a.dim() < 3) throw std::invalid_argument("theoremC_reduce needs dimension >= 3");
    const std::size_t n = a.dim() - 1;
    std::vector<Vector> k_basis;
    for (std::size_t j = 0; j < n; ++j) k_basis.push_back(a.basis_vector(j));
    return theoremC_reduce(a, k_basis, a.basis_vector(n));
}

}  // namespace leibniz
