// Command-line front end: check, analyze, derivations, family, normalize,
// maximal-cyclic, census.
//
// Exit codes: 0 success, 1 identity violation or failed property,
// 2 usage, parse or scope error.

#include "leibniz/census.hpp"
#include "leibniz/cyclic.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/io.hpp"
#include "leibniz/lattice.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace leibniz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

std::vector<Scalar> parse_scalars(Field field, const std::string& csv)
{
    std::vector<Scalar> out;
    if (csv.empty()) return out;
    for (const auto& item : split_csv(csv)) out.push_back(Scalar::parse(field, item));
    return out;
}

Vector parse_vector(const Algebra& a, const std::string& csv, const char* what)
{
    Vector v = parse_scalars(a.field(), csv);
    if (v.size() != a.dim())
        throw UsageError(std::string(what) + " needs " + std::to_string(a.dim()) + " coordinates");
    return v;
}

void print_violations(const Algebra& a, const std::vector<IdentityViolation>& violations)
{
    for (const auto& v : violations) {
        const auto& l = a.labels();
        std::cout << "violation (" << l[v.triple[0]] << ", " << l[v.triple[1]] << ", " << l[v.triple[2]]
                  << "): " << a.format(v.residual) << '\n';
    }
}

/// Parses the file and checks the identity; prints violations and returns
/// nullopt when it fails.
std::optional<Algebra> load_checked(const std::string& path)
{
    const AlgebraFile file = read_algebra_file(path);
    const auto violations = check_left_leibniz(file.algebra);
    if (!violations.empty()) {
        std::cerr << "left Leibniz identity fails on " << violations.size() << " basis triple(s)\n";
        print_violations(file.algebra, violations);
        return std::nullopt;
    }
    return file.algebra.checked();
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string vector_comment(const Algebra& a, const std::string& name, const Vector& v)
{
    return " " + name + " = " + a.format(v) + "  (" + to_string(std::span<const Scalar>(v)) + ")";
}

std::string scalars_comment(const std::string& name, const std::vector<Scalar>& values, std::size_t first_index)
{
    std::string out = " " + name + ":";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += " " + name.substr(0, name.size() - 1) + "_" + std::to_string(first_index + i) + "=" + values[i].str();
    return out;
}

std::vector<std::string> chain_names(const std::string& prefix, std::size_t n, const std::string& extra)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    names.push_back(extra);
    return names;
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in finite-dimensional left Leibniz algebras"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;

    auto* check = app.add_subcommand("check", "verify the left Leibniz identity on all basis triples");
    check->add_option("FILE", file, "algebra file")->required();

    auto* analyze = app.add_subcommand("analyze", "kernel, centers, central series, derivation dimensions");
    analyze->add_option("FILE", file, "algebra file")->required();
    analyze->add_flag("--json", json, "JSON output");

    bool right = false;
    auto* derivations = app.add_subcommand("derivations", "derivation space basis and invariance checks");
    derivations->add_option("FILE", file, "algebra file")->required();
    derivations->add_flag("--right", right, "right derivations");
    derivations->add_flag("--json", json, "JSON output");

    std::string family_id, gamma_csv, tau_text, delta_text, field_text = "Q", convention = "printed", out_path;
    std::size_t fam_n = 0, fam_t = 0;
    auto* family = app.add_subcommand("family", "build a member of a normal-form family");
    family->add_option("NAME", family_id,
                       "cyclic, L1, L2, theoremA-i, theoremA-ii, theoremA-iii, theoremB, theoremC, quaternion")
        ->required();
    family->add_option("--n", fam_n, "dimension of the cyclic part");
    family->add_option("--t", fam_t, "first nonzero band index (theoremA-iii)");
    family->add_option("--gamma", gamma_csv, "comma-separated gammas");
    family->add_option("--tau", tau_text, "tau (theoremA-iii)");
    family->add_option("--delta", delta_text, "delta_n (theoremB)");
    family->add_option("--field", field_text, "Q or GF(p)");
    family->add_option("--convention", convention, "printed or derived (theoremA-iii)")
        ->check(CLI::IsMember({"printed", "derived"}));
    family->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    std::string procedure, a1_csv, b_csv;
    auto* normalize = app.add_subcommand("normalize", "run a normalization procedure");
    normalize->add_option("FILE", file, "algebra file")->required();
    normalize->add_option("--procedure", procedure, "lemma7, theoremB or theoremC")
        ->required()
        ->check(CLI::IsMember({"lemma7", "theoremB", "theoremC"}));
    normalize->add_option("--a1", a1_csv, "generator of K as coordinates (default e1)");
    normalize->add_option("--b", b_csv, "element outside K (default: first basis vector outside K)");
    normalize->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    auto* maximal = app.add_subcommand("maximal-cyclic", "maximal subalgebras with cyclicity and ideal flags");
    maximal->add_option("FILE", file, "algebra file")->required();
    maximal->add_flag("--json", json, "JSON output");

    std::size_t census_dim = 0;
    std::uint32_t census_p = 2;
    unsigned jobs = 1;
    if (const char* env = std::getenv("LEIBNIZ_JOBS")) {
        try {
            jobs = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "ignoring invalid LEIBNIZ_JOBS='" << env << "'\n";
        }
    }
    std::uint64_t max_tensors = default_census_limit;
    auto* census = app.add_subcommand("census", "enumerate all Leibniz structure tensors over GF(p)");
    census->add_option("--dim", census_dim, "dimension")->required();
    census->add_option("--p", census_p, "field characteristic");
    census->add_option("--jobs", jobs, "worker threads (default LEIBNIZ_JOBS or 1)");
    census->add_option("--max-tensors", max_tensors, "scope limit on p^(dim^3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*check) {
            const AlgebraFile f = read_algebra_file(file);
            const auto violations = check_left_leibniz(f.algebra);
            print_violations(f.algebra, violations);
            if (violations.empty()) std::cout << "ok: left Leibniz identity holds\n";
            return violations.empty() ? exit_ok : exit_failure;
        }
        if (*analyze) {
            const auto a = load_checked(file);
            if (!a) return exit_failure;
            if (json)
                print_json(analysis_json(*a));
            else
                std::cout << analysis_text(*a);
            return exit_ok;
        }
        if (*derivations) {
            const auto a = load_checked(file);
            if (!a) return exit_failure;
            const auto kind = right ? DerivationKind::right : DerivationKind::left;
            const Json j = derivations_json(*a, kind);
            if (json)
                print_json(j);
            else
                std::cout << derivations_text(*a, kind);
            return j["invariance_holds"].get<bool>() ? exit_ok : exit_failure;
        }
        if (*family) {
            FamilyParams p;
            p.family = parse_family_id(family_id);
            p.field = Field::parse(field_text);
            p.n = fam_n;
            p.t = fam_t;
            p.gammas = parse_scalars(p.field, gamma_csv);
            if (!tau_text.empty()) p.tau = Scalar::parse(p.field, tau_text);
            if (!delta_text.empty()) p.delta_n = Scalar::parse(p.field, delta_text);
            p.convention = convention == "derived" ? IndexConvention::proof_derived : IndexConvention::as_printed;
            const bool needs_n =
                p.family != FamilyId::L1 && p.family != FamilyId::L2 && p.family != FamilyId::quaternion_analog;
            if (needs_n && fam_n == 0) throw UsageError("family " + family_id + " needs --n");
            if (p.family == FamilyId::A_iii && fam_t == 0) throw UsageError("theoremA-iii needs --t");
            const Algebra a = build_family(p);
            if (p.family == FamilyId::A_iii && p.gammas.empty()) p.gammas.assign(p.n - p.t, Scalar::zero(p.field));
            if (p.family == FamilyId::B && p.gammas.empty()) p.gammas.assign(p.n - 1, Scalar::zero(p.field));
            emit(out_path, emit_algebra_file(a, {" " + describe(p)}));
            return exit_ok;
        }
        if (*normalize) {
            const auto a = load_checked(file);
            if (!a) return exit_failure;
            const Vector a1 = a1_csv.empty() ? a->basis_vector(0) : parse_vector(*a, a1_csv, "--a1");
            const std::vector<Vector> k_basis = canonical_cyclic_basis(*a, a1);
            if (k_basis.size() + 1 != a->dim())
                throw UsageError("<a1> has dimension " + std::to_string(k_basis.size()) + "; codimension one is required");
            const Subspace k = Subspace::span(a->field(), a->dim(), k_basis);
            Vector b;
            if (!b_csv.empty()) {
                b = parse_vector(*a, b_csv, "--b");
            } else {
                for (std::size_t i = 0; i < a->dim() && b.empty(); ++i)
                    if (!k.contains(a->basis_vector(i))) b = a->basis_vector(i);
            }
            const std::size_t n = k_basis.size();
            std::vector<std::string> comments{" normalize --procedure " + procedure};
            std::vector<Vector> basis = k_basis;
            std::vector<std::string> labels;
            if (procedure == "lemma7") {
                const Lemma7Result r = lemma7_normalize(*a, k_basis, b);
                comments.push_back(scalars_comment("betas", r.betas, 2));
                basis.push_back(r.d);
                labels = chain_names("a", n, "d");
            } else if (procedure == "theoremB") {
                const TheoremBNormalization r = theoremB_normalize(*a, a1, b);
                comments.push_back(" beta1 = " + r.beta1.str());
                comments.push_back(scalars_comment("sigmas", r.sigmas, 2));
                basis.push_back(r.d);
                labels = chain_names("a", n, "d");
            } else {
                const TheoremCReduction r = theoremC_reduce(*a, k_basis, b);
                comments.push_back(scalars_comment("gammas", r.gammas, 2));
                comments.push_back(" delta_n = " + r.delta_n.str());
                comments.push_back(scalars_comment("lambdas", r.lambdas, 2));
                basis = r.b_basis;
                basis.push_back(r.s);
                labels = chain_names("b", n, "s");
            }
            for (std::size_t i = 0; i < basis.size(); ++i)
                comments.push_back(vector_comment(*a, labels[i], basis[i]));
            const Algebra transformed = change_basis(*a, basis, labels);
            emit(out_path, emit_algebra_file(transformed, comments));
            return exit_ok;
        }
        if (*maximal) {
            const auto a = load_checked(file);
            if (!a) return exit_failure;
            const MaximalCyclicReport report = maximal_cyclic_report(*a);
            if (json)
                print_json(maximal_cyclic_json(*a, report));
            else
                std::cout << maximal_cyclic_text(*a, report);
            return report.all_maximal_are_ideals == false ? exit_failure : exit_ok;
        }
        if (*census) {
            CensusConfig config;
            config.dim = census_dim;
            config.field = Field::prime(census_p);
            config.jobs = jobs;
            config.max_tensors = max_tensors;
            const CensusResult result = run_census(config);
            for (const auto& r : result.records) std::cout << census_record_json(r, config).dump() << '\n';
            std::cout << census_summary_json(result).dump() << '\n';
            return result.summary.ideal_violations == 0 ? exit_ok : exit_failure;
        }
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const IdentityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::logic_error& e) {
        // invalid_argument / domain_error are usage problems; other logic errors are failed postconditions
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
            dynamic_cast<const std::out_of_range*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return exit_usage;
        }
        std::cerr << "postcondition failed: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
