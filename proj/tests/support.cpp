#include "support.hpp"

#include "leibniz/linalg.hpp"

namespace testing_support {

Matrix random_invertible(Field f, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

Algebra random_basis_change(const Algebra& a, std::mt19937_64& rng)
{
    const Matrix m = random_invertible(a.field(), a.dim(), rng);
    std::vector<Vector> basis;
    for (std::size_t c = 0; c < a.dim(); ++c) basis.push_back(m.column(c));
    return change_basis(a, basis);
}

namespace {

Vector raw_bracket(const Algebra& a, const Vector& x, const Vector& y)
{
    const std::size_t n = a.dim();
    Vector out(n, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x[i].is_zero() || y[j].is_zero()) continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + w * a.tensor()(i, j, k);
        }
    return out;
}

}  // namespace

bool identity_on_random_vectors(const Algebra& a, std::mt19937_64& rng, int samples)
{
    for (int s = 0; s < samples; ++s) {
        const Vector x = random_vector(a.field(), a.dim(), rng);
        const Vector y = random_vector(a.field(), a.dim(), rng);
        const Vector z = random_vector(a.field(), a.dim(), rng);
        const Vector lhs = raw_bracket(a, raw_bracket(a, x, y), z);
        const Vector r1 = raw_bracket(a, x, raw_bracket(a, y, z));
        const Vector r2 = raw_bracket(a, y, raw_bracket(a, x, z));
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (!(lhs[k] == r1[k] - r2[k])) return false;
    }
    return true;
}

std::vector<Vector> all_vectors(Field f, std::size_t n)
{
    const auto p = f.characteristic();
    std::vector<Vector> out;
    std::vector<long> digits(n, 0);
    for (;;) {
        Vector v;
        for (long d : digits) v.emplace_back(f, d);
        out.push_back(v);
        std::size_t pos = n;
        while (pos > 0 && ++digits[pos - 1] == static_cast<long>(p)) digits[--pos] = 0;
        if (pos == 0) return out;
    }
}

std::vector<Vector> span_elements(Field f, const std::vector<Vector>& generators)
{
    const std::size_t n = generators.empty() ? 0 : generators.front().size();
    std::vector<Vector> out;
    for (const auto& coeffs : all_vectors(f, generators.size())) {
        Vector v(n, Scalar::zero(f));
        for (std::size_t g = 0; g < generators.size(); ++g)
            for (std::size_t k = 0; k < n; ++k) v[k] = v[k] + coeffs[g] * generators[g][k];
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

std::uint64_t subspace_count_oracle(std::size_t n, std::size_t k, std::uint64_t q)
{
    auto power = [q](std::size_t e) {
        std::uint64_t r = 1;
        while (e--) r *= q;
        return r;
    };
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= power(n) - power(i);
        den *= power(k) - power(i);
    }
    return num / den;
}

}  // namespace testing_support
