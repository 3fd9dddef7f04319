#include "leibniz/census.hpp"

#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"
#include "leibniz/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace leibniz {

namespace {

std::string join(const std::vector<std::size_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::uint64_t tensor_count(std::size_t dim, std::uint32_t p, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim * dim * dim; ++i) {
        if (count > cap / p) return cap + 1;
        count *= p;
    }
    return count;
}

}  // namespace

std::string PairSignature::str() const
{
    return "leib=" + std::to_string(leibniz_kernel) + " zl=" + std::to_string(left_center) +
           " zr=" + std::to_string(right_center) + " z=" + std::to_string(center) + " lower=" + join(lower_series) +
           " upper=" + join(upper_series) + " der=" + std::to_string(derivations) +
           " rder=" + std::to_string(right_derivations) + " LK=" + std::to_string(lk) + " KL=" + std::to_string(kl);
}

void validate_census_config(const CensusConfig& c)
{
    const auto p = c.field.characteristic();
    if (!c.field.is_finite() || (p != 2 && p != 3 && p != 5))
        throw std::invalid_argument("census supports GF(2), GF(3) and GF(5)");
    if (c.dim < 1 || c.dim > max_lattice_dim) throw std::invalid_argument("census dimension must be in [1, 5]");
    if (c.jobs < 1) throw std::invalid_argument("census needs at least one job");
    if (tensor_count(c.dim, p, c.max_tensors) > c.max_tensors)
        throw std::invalid_argument("census scope p^(d^3) exceeds the limit of " + std::to_string(c.max_tensors) +
                                    " tensors");
}

std::uint64_t fingerprint(const StructureTensor& t)
{
    if (!t.field().is_finite()) throw std::invalid_argument("fingerprints are defined over GF(p)");
    const std::size_t d = t.dim();
    const std::uint64_t p = t.field().characteristic();
    std::uint64_t value = 0;
    for (std::size_t pos = d * d * d; pos-- > 0;) {
        const std::size_t i = pos / (d * d), j = pos / d % d, k = pos % d;
        value = value * p + t(i, j, k).residue();
    }
    return value;
}

StructureTensor tensor_from_fingerprint(Field field, std::size_t d, std::uint64_t value)
{
    StructureTensor t(field, d);
    const std::uint64_t p = field.characteristic();
    for (std::size_t pos = 0; pos < d * d * d; ++pos) {
        t(pos / (d * d), pos / d % d, pos % d) = Scalar(field, static_cast<long>(value % p));
        value /= p;
    }
    return t;
}

bool satisfies_left_leibniz(const std::uint8_t* c, std::size_t d, std::uint32_t p)
{
    auto at = [c, d](std::size_t i, std::size_t j, std::size_t k) -> unsigned { return c[(i * d + j) * d + k]; };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t m = 0; m < d; ++m) {
                    // [[e_i,e_j],e_k] - [e_i,[e_j,e_k]] + [e_j,[e_i,e_k]] at e_m
                    unsigned plus = 0, minus = 0;
                    for (std::size_t l = 0; l < d; ++l) {
                        plus += at(i, j, l) * at(l, k, m) + at(i, k, l) * at(j, l, m);
                        minus += at(j, k, l) * at(i, l, m);
                    }
                    if ((plus + (p - 1) * minus) % p != 0) return false;
                }
    return true;
}

namespace {

PairSignature pair_signature(const Algebra& a, const Subspace& k, const AlgebraReport& profile)
{
    const Subspace full = Subspace::full(a.field(), a.dim());
    PairSignature s;
    s.leibniz_kernel = profile.leibniz_kernel_dim;
    s.left_center = profile.left_center_dim;
    s.right_center = profile.right_center_dim;
    s.center = profile.center_dim;
    s.lower_series = profile.lower_series_dims;
    s.upper_series = profile.upper_series_dims;
    s.derivations = profile.derivation_dim.value_or(0);
    s.right_derivations = profile.right_derivation_dim.value_or(0);
    s.lk = product_subspace(a, full, k).dim();
    s.kl = product_subspace(a, k, full).dim();
    return s;
}

PairSignature canonical_pair_signature(const Algebra& a)
{
    std::vector<Vector> k_basis;
    for (std::size_t j = 0; j + 1 < a.dim(); ++j) k_basis.push_back(a.basis_vector(j));
    return pair_signature(a, Subspace::span(a.field(), a.dim(), k_basis), full_profile(a));
}

void for_each_tuple(std::size_t length, std::uint32_t p, const std::function<void(const std::vector<long>&)>& visit)
{
    std::vector<long> digits(length, 0);
    for (;;) {
        visit(digits);
        std::size_t pos = length;
        while (pos > 0 && ++digits[pos - 1] == static_cast<long>(p)) digits[--pos] = 0;
        if (pos == 0) return;
    }
}

}  // namespace

std::vector<std::pair<std::string, PairSignature>> reference_signatures(std::size_t dim, Field field)
{
    std::vector<std::pair<std::string, PairSignature>> refs;
    if (dim < 3) return refs;
    const std::size_t n = dim - 1;
    auto add = [&](const std::string& label, const Algebra& a) {
        if (!check_left_leibniz(a).empty()) return;
        const Algebra checked = a.checked();
        if (!is_nilpotent(checked)) return;
        const PairSignature s = canonical_pair_signature(checked);
        for (const auto& [l, existing] : refs)
            if (l == label && existing == s) return;
        refs.emplace_back(label, s);
    };
    add("A-i", theoremA_i(n, field));
    add("A-ii", theoremA_ii(n, field));
    const std::uint32_t p = field.characteristic();
    for (std::size_t t = 2; t <= n; ++t)
        for_each_tuple(n - t + 1, p, [&](const std::vector<long>& digits) {
            std::vector<Scalar> gammas;
            for (std::size_t i = 0; i + 1 < digits.size(); ++i) gammas.emplace_back(field, digits[i]);
            const Scalar tau(field, digits.back());
            for (auto convention : {IndexConvention::proof_derived, IndexConvention::as_printed}) {
                try {
                    add("A-iii", theoremA_iii(n, t, gammas, tau, field, convention));
                } catch (const std::invalid_argument&) {
                    // index outside a1..an under the printed convention
                }
            }
        });
    return refs;
}

CensusRecord census_record(const Algebra& a, std::uint64_t fp,
                           const std::vector<std::pair<std::string, PairSignature>>& references)
{
    CensusRecord r;
    r.fingerprint = fp;
    r.profile = full_profile(a);
    r.nilpotent = r.profile.nilpotency_class.has_value();
    const MaximalCyclicReport report = maximal_cyclic_report(a);
    r.has_maximal_cyclic = report.has_maximal_cyclic();
    r.all_maximal_ideals = report.all_maximal_are_ideals;
    if (!r.nilpotent || !r.has_maximal_cyclic || a.dim() < 3) return r;

    bool first = true;
    for (const auto& m : report.maximal) {
        if (m.cyclicity != Cyclicity::cyclic) continue;
        std::string label = "unmatched";
        std::optional<PairSignature> signature;
        if (m.space.dim() + 1 == a.dim()) signature = pair_signature(a, m.space, r.profile);
        if (signature)
            for (const auto& [ref_label, ref] : references)
                if (ref == *signature) {
                    label = ref_label;
                    break;
                }
        if (first) {
            r.signature = signature;
            r.label = label;
            first = false;
        }
        if (label == "unmatched") r.label = label;
    }
    return r;
}

std::string profile_key(const AlgebraReport& r)
{
    std::string key = "leib=" + std::to_string(r.leibniz_kernel_dim) + " zl=" + std::to_string(r.left_center_dim) +
                      " zr=" + std::to_string(r.right_center_dim) + " z=" + std::to_string(r.center_dim) +
                      " lower=" + join(r.lower_series_dims);
    if (r.derivation_dim) key += " der=" + std::to_string(*r.derivation_dim);
    if (r.right_derivation_dim) key += " rder=" + std::to_string(*r.right_derivation_dim);
    return key;
}

CensusResult run_census(const CensusConfig& config)
{
    validate_census_config(config);
    const std::size_t d = config.dim;
    const std::size_t cube = d * d * d;
    const std::uint32_t p = config.field.characteristic();
    const std::uint64_t total = tensor_count(d, p, config.max_tensors);
    const std::uint64_t chunk = std::min<std::uint64_t>(total, 1u << 16);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    const auto references = reference_signatures(d, config.field);

    std::vector<std::vector<CensusRecord>> parts(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        std::vector<std::uint8_t> digits(cube);
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            std::uint64_t v = begin;
            for (std::size_t pos = 0; pos < cube; ++pos, v /= p) digits[pos] = static_cast<std::uint8_t>(v % p);
            for (std::uint64_t index = begin; index < end; ++index) {
                if (satisfies_left_leibniz(digits.data(), d, p)) {
                    const Algebra a = Algebra(tensor_from_fingerprint(config.field, d, index)).checked();
                    parts[c].push_back(census_record(a, index, references));
                }
                for (std::size_t pos = 0; pos < cube && ++digits[pos] == p; ++pos) digits[pos] = 0;
            }
        }
    };
    const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(config.jobs, chunks));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    CensusResult result;
    result.config = config;
    result.summary.tensors = total;
    for (auto& part : parts)
        for (auto& r : part) {
            auto& s = result.summary;
            ++s.leibniz;
            if (r.nilpotent) ++s.nilpotent;
            if (r.has_maximal_cyclic) ++s.with_maximal_cyclic;
            if (r.label == "unmatched") ++s.unmatched;
            if (r.all_maximal_ideals == false) ++s.ideal_violations;
            ++s.by_label[r.label];
            ++s.by_profile[profile_key(r.profile)];
            result.records.push_back(std::move(r));
        }
    return result;
}

}  // namespace leibniz
