#include "leibniz/io.hpp"

#include "leibniz/invariants.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace leibniz {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

// Cursor over one line; columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::size_t column() const { return pos_ + 1; }

    /// Digits with an optional "/digits" part.
    std::string number()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == den) fail("expected a denominator");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t index(std::size_t dim)
    {
        skip_space();
        const std::size_t col = column();
        const std::string token = number();
        if (token.find('/') != std::string::npos) throw ParseError(line_, col, "basis index must be an integer");
        if (token.size() > 9) throw ParseError(line_, col, "index " + token + " out of range [1, " + std::to_string(dim) + "]");
        const std::size_t value = std::stoul(token);
        if (value < 1 || value > dim)
            throw ParseError(line_, col, "index " + token + " out of range [1, " + std::to_string(dim) + "]");
        return value - 1;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text)
{
    std::vector<std::string> comments;
    std::optional<Field> field;
    std::optional<StructureTensor> tensor;
    std::vector<std::string> labels;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        const std::size_t col = first + 1;
        if (line[first] == '#') {
            comments.emplace_back(line.substr(first + 1));
            continue;
        }
        const auto w = words(line);
        if (w[0] == "field") {
            if (field) throw ParseError(line_no, col, "duplicate field line");
            if (w.size() != 2) throw ParseError(line_no, col, "expected 'field Q' or 'field GF(p)'");
            try {
                field = Field::parse(w[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, static_cast<std::size_t>(w[1].data() - line.data()) + 1, e.what());
            }
        } else if (w[0] == "dim") {
            if (!field) throw ParseError(line_no, col, "'dim' before 'field'");
            if (tensor) throw ParseError(line_no, col, "duplicate dim line");
            if (w.size() != 2 || w[1].find_first_not_of("0123456789") != std::string_view::npos || w[1].size() > 4)
                throw ParseError(line_no, col, "expected 'dim n' with a positive integer n");
            const std::size_t n = std::stoul(std::string(w[1]));
            if (n == 0) throw ParseError(line_no, col, "dimension must be positive");
            tensor.emplace(*field, n);
        } else if (w[0] == "basis") {
            if (!tensor) throw ParseError(line_no, col, "'basis' before 'dim'");
            if (!labels.empty()) throw ParseError(line_no, col, "duplicate basis line");
            if (w.size() - 1 != tensor->dim())
                throw ParseError(line_no, col, "basis lists " + std::to_string(w.size() - 1) + " names, dim is " +
                                                   std::to_string(tensor->dim()));
            std::set<std::string_view> unique;
            for (std::size_t i = 1; i < w.size(); ++i) {
                const std::size_t wcol = static_cast<std::size_t>(w[i].data() - line.data()) + 1;
                if (!is_identifier(w[i])) throw ParseError(line_no, wcol, "invalid basis name '" + std::string(w[i]) + "'");
                if (!unique.insert(w[i]).second)
                    throw ParseError(line_no, wcol, "repeated basis name '" + std::string(w[i]) + "'");
                labels.emplace_back(w[i]);
            }
        } else if (line[first] == '[') {
            if (!tensor) throw ParseError(line_no, col, "bracket before 'dim'");
            const std::size_t n = tensor->dim();
            LineCursor cur(line, line_no);
            cur.expect('[');
            const std::size_t i = cur.index(n);
            cur.expect(',');
            const std::size_t j = cur.index(n);
            cur.expect(']');
            if (!seen.insert({i, j}).second)
                throw ParseError(line_no, col,
                                 "duplicate bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
            cur.expect('=');

            Vector value = zero_vector(*field, n);
            std::set<std::size_t> used;
            bool first_term = true;
            for (;;) {
                bool negative = false;
                if (first_term) {
                    negative = cur.accept('-');
                    if (!negative) cur.accept('+');
                } else if (cur.accept('-')) {
                    negative = true;
                } else {
                    cur.expect('+');
                }
                cur.skip_space();
                const std::size_t term_col = cur.column();
                const std::string token = cur.number();
                Scalar coeff = Scalar::one(*field);
                std::size_t k = 0;
                if (cur.accept('*')) {
                    try {
                        coeff = Scalar::parse(*field, token);
                    } catch (const std::exception& e) {
                        throw ParseError(line_no, term_col, e.what());
                    }
                    cur.skip_space();
                    const std::size_t k_col = cur.column();
                    k = cur.index(n);
                    if (!used.insert(k).second)
                        throw ParseError(line_no, k_col, "basis index " + std::to_string(k + 1) + " repeated in bracket");
                } else if (first_term && token == "0" && cur.at_end()) {
                    break;
                } else {
                    if (token.find('/') != std::string::npos || token.size() > 9)
                        throw ParseError(line_no, term_col, "expected 'c*k' or a basis index");
                    const std::size_t v = std::stoul(token);
                    if (v < 1 || v > n)
                        throw ParseError(line_no, term_col,
                                         "index " + token + " out of range [1, " + std::to_string(n) + "]");
                    k = v - 1;
                    if (!used.insert(k).second)
                        throw ParseError(line_no, term_col, "basis index " + token + " repeated in bracket");
                }
                value[k] = negative ? -coeff : coeff;
                first_term = false;
                if (cur.at_end()) break;
            }
            tensor->set_product(i, j, value);
        } else {
            throw ParseError(line_no, col, "unrecognized line '" + std::string(w[0]) + "'");
        }
    }
    if (!field) throw ParseError(line_no + 1, 1, "missing 'field' line");
    if (!tensor) throw ParseError(line_no + 1, 1, "missing 'dim' line");
    return {std::move(comments), Algebra(std::move(*tensor), std::move(labels))};
}

std::string emit_algebra_file(const Algebra& a, const std::vector<std::string>& comments)
{
    std::ostringstream out;
    for (const auto& c : comments) out << '#' << c << '\n';
    out << "field " << a.field().name() << '\n';
    out << "dim " << a.dim() << '\n';
    if (a.has_custom_labels()) {
        out << "basis";
        for (const auto& l : a.labels()) out << ' ' << l;
        out << '\n';
    }
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string rhs;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a.tensor()(i, j, k);
                if (c.is_zero()) continue;
                const std::string term = "*" + std::to_string(k + 1);
                const bool negative = a.field().is_rationals() && c.rational() < 0;
                if (rhs.empty())
                    rhs = c.str() + term;
                else if (negative)
                    rhs += " - " + (-c).str() + term;
                else
                    rhs += " + " + c.str() + term;
            }
            if (!rhs.empty()) out << '[' << i + 1 << ',' << j + 1 << "] = " << rhs << '\n';
        }
    return out.str();
}

AlgebraFile read_algebra_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_file(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Json to_json(const Scalar& s)
{
    return s.str();
}

Json to_json(std::span<const Scalar> v)
{
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(s.str());
    return arr;
}

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (const auto& r : m.row_vectors()) rows.push_back(to_json(std::span<const Scalar>(r)));
    return rows;
}

Json to_json(const Subspace& s)
{
    Json j;
    j["dim"] = s.dim();
    j["basis"] = to_json(s.basis_matrix());
    return j;
}

namespace {

std::string join_dims(const std::vector<std::size_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
    return out;
}

std::string digits_of(std::uint64_t value, std::size_t length, std::uint32_t p)
{
    std::string s;
    for (std::size_t i = 0; i < length; ++i, value /= p) s += static_cast<char>('0' + value % p);
    return s;
}

}  // namespace

Json analysis_json(const Algebra& a)
{
    Json j;
    j["field"] = a.field().name();
    j["dim"] = a.dim();
    j["lie"] = is_lie(a);
    const auto cls = nilpotency_class(a);
    j["nilpotent"] = cls.has_value();
    j["class"] = cls ? Json(*cls) : Json(nullptr);
    j["leibniz_kernel"] = to_json(leibniz_kernel(a));
    j["left_center"] = to_json(left_center(a));
    j["right_center"] = to_json(right_center(a));
    j["center"] = to_json(center(a));
    Json lower = Json::array();
    for (const auto& s : lower_central_series(a)) lower.push_back(to_json(s));
    j["lower_series"] = lower;
    Json upper = Json::array();
    for (const auto& s : upper_central_series(a)) upper.push_back(to_json(s));
    j["upper_series"] = upper;
    j["derivations"] = derivation_space(a).dim();
    j["right_derivations"] = right_derivation_space(a).dim();
    return j;
}

std::string analysis_text(const Algebra& a)
{
    const AlgebraReport r = full_profile(a);
    std::ostringstream out;
    out << "field: " << r.field.name() << '\n';
    out << "dim: " << r.dim << '\n';
    out << "lie: " << (r.is_lie ? "yes" : "no") << '\n';
    if (r.nilpotency_class)
        out << "nilpotent: yes, class " << *r.nilpotency_class << '\n';
    else
        out << "nilpotent: no\n";
    out << "leibniz kernel: " << leibniz_kernel(a).str() << " (dim " << r.leibniz_kernel_dim << ")\n";
    out << "left center: " << left_center(a).str() << " (dim " << r.left_center_dim << ")\n";
    out << "right center: " << right_center(a).str() << " (dim " << r.right_center_dim << ")\n";
    out << "center: " << center(a).str() << " (dim " << r.center_dim << ")\n";
    out << "lower series dims: " << join_dims(r.lower_series_dims) << '\n';
    out << "upper series dims: " << join_dims(r.upper_series_dims) << '\n';
    out << "derivations: " << *r.derivation_dim << '\n';
    out << "right derivations: " << *r.right_derivation_dim << '\n';
    return out.str();
}

Json derivations_json(const Algebra& a, DerivationKind kind)
{
    const DerivationBasis basis = kind == DerivationKind::left ? derivation_space(a) : right_derivation_space(a);
    Json j;
    j["kind"] = kind == DerivationKind::left ? "left" : "right";
    j["dim"] = basis.dim();
    Json mats = Json::array();
    for (const auto& m : basis.basis) mats.push_back(to_json(m));
    j["basis"] = mats;
    if (is_canonical_cyclic(a)) {
        Json profiles = Json::array();
        for (const auto& m : basis.basis) {
            if (kind == DerivationKind::left) {
                const auto p = extract_lemma3_profile(a, m);
                profiles.push_back(p ? Json{{"gammas", to_json(std::span<const Scalar>(p->gammas))}} : Json(nullptr));
            } else {
                const auto p = extract_lemma5_profile(a, m);
                profiles.push_back(p ? Json{{"rhos", to_json(std::span<const Scalar>(p->rhos))}} : Json(nullptr));
            }
        }
        j["profiles"] = profiles;
    } else {
        j["profiles"] = nullptr;
    }
    bool all = true;
    Json failures = Json::array();
    for (std::size_t i = 0; i < basis.basis.size(); ++i)
        for (const auto& c : check_invariance(a, basis.basis[i], kind).checks)
            if (!c.holds) {
                all = false;
                failures.push_back({{"element", i + 1}, {"check", c.description}});
            }
    j["invariance_holds"] = all;
    j["invariance_failures"] = failures;
    return j;
}

std::string derivations_text(const Algebra& a, DerivationKind kind)
{
    const Json j = derivations_json(a, kind);
    std::ostringstream out;
    out << (kind == DerivationKind::left ? "derivations" : "right derivations") << ": dim " << j["dim"].get<std::size_t>()
        << '\n';
    std::size_t index = 0;
    for (const auto& m : j["basis"]) {
        ++index;
        out << "  D" << index << " = [";
        bool first_row = true;
        for (const auto& row : m) {
            out << (first_row ? "[" : ", [");
            bool first = true;
            for (const auto& v : row) {
                out << (first ? "" : ", ") << v.get<std::string>();
                first = false;
            }
            out << ']';
            first_row = false;
        }
        out << "]\n";
        if (!j["profiles"].is_null()) {
            const auto& p = j["profiles"][index - 1];
            const char* name = kind == DerivationKind::left ? "gammas" : "rhos";
            if (p.is_null()) {
                out << "    pattern mismatch\n";
            } else {
                out << "    " << name << ":";
                for (const auto& v : p[name]) out << ' ' << v.get<std::string>();
                out << '\n';
            }
        }
    }
    out << "invariance: " << (j["invariance_holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    for (const auto& f : j["invariance_failures"])
        out << "  D" << f["element"].get<std::size_t>() << ": " << f["check"].get<std::string>() << '\n';
    return out.str();
}

namespace {

const char* cyclicity_name(Cyclicity c)
{
    switch (c) {
    case Cyclicity::cyclic: return "cyclic";
    case Cyclicity::not_cyclic: return "not-cyclic";
    case Cyclicity::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

Json maximal_cyclic_json(const Algebra& a, const MaximalCyclicReport& report)
{
    Json j;
    j["field"] = a.field().name();
    j["dim"] = a.dim();
    j["nilpotent"] = report.nilpotent;
    j["exhaustive"] = report.exhaustive;
    Json list = Json::array();
    for (const auto& m : report.maximal) {
        Json e;
        e["subspace"] = to_json(m.space);
        e["cyclicity"] = cyclicity_name(m.cyclicity);
        e["generator"] = m.generator ? to_json(std::span<const Scalar>(*m.generator)) : Json(nullptr);
        e["ideal"] = m.ideal;
        list.push_back(e);
    }
    j["maximal"] = list;
    j["has_maximal_cyclic"] = report.has_maximal_cyclic();
    j["all_maximal_are_ideals"] =
        report.all_maximal_are_ideals ? Json(*report.all_maximal_are_ideals) : Json(nullptr);
    return j;
}

std::string maximal_cyclic_text(const Algebra& a, const MaximalCyclicReport& report)
{
    std::ostringstream out;
    out << "nilpotent: " << (report.nilpotent ? "yes" : "no") << '\n';
    out << "maximal subalgebras" << (report.exhaustive ? "" : " (not exhaustive)") << ": " << report.maximal.size()
        << '\n';
    for (const auto& m : report.maximal) {
        out << "  " << m.space.str() << " dim " << m.space.dim() << ", " << cyclicity_name(m.cyclicity);
        if (m.generator) out << " by " << a.format(*m.generator);
        out << ", " << (m.ideal ? "ideal" : "not an ideal") << '\n';
    }
    if (report.all_maximal_are_ideals)
        out << "all maximal subalgebras are ideals: " << (*report.all_maximal_are_ideals ? "yes" : "NO") << '\n';
    return out.str();
}

Json census_record_json(const CensusRecord& r, const CensusConfig& config)
{
    const AlgebraReport& p = r.profile;
    Json j;
    j["fingerprint"] = r.fingerprint;
    j["tensor"] = digits_of(r.fingerprint, config.dim * config.dim * config.dim, config.field.characteristic());
    j["leibniz_kernel"] = p.leibniz_kernel_dim;
    j["left_center"] = p.left_center_dim;
    j["right_center"] = p.right_center_dim;
    j["center"] = p.center_dim;
    j["lower_series"] = p.lower_series_dims;
    j["upper_series"] = p.upper_series_dims;
    j["class"] = p.nilpotency_class ? Json(*p.nilpotency_class) : Json(nullptr);
    j["lie"] = p.is_lie;
    j["derivations"] = p.derivation_dim ? Json(*p.derivation_dim) : Json(nullptr);
    j["right_derivations"] = p.right_derivation_dim ? Json(*p.right_derivation_dim) : Json(nullptr);
    j["nilpotent"] = r.nilpotent;
    j["has_maximal_cyclic"] = r.has_maximal_cyclic;
    j["all_maximal_ideals"] = r.all_maximal_ideals ? Json(*r.all_maximal_ideals) : Json(nullptr);
    j["signature"] = r.signature ? Json(r.signature->str()) : Json(nullptr);
    j["label"] = r.label;
    return j;
}

Json census_summary_json(const CensusResult& result)
{
    const CensusSummary& s = result.summary;
    Json j;
    j["dim"] = result.config.dim;
    j["field"] = result.config.field.name();
    j["tensors"] = s.tensors;
    j["leibniz"] = s.leibniz;
    j["nilpotent"] = s.nilpotent;
    j["with_maximal_cyclic"] = s.with_maximal_cyclic;
    j["unmatched"] = s.unmatched;
    j["ideal_violations"] = s.ideal_violations;
    Json labels = Json::object();
    for (const auto& [k, v] : s.by_label) labels[k] = v;
    j["by_label"] = labels;
    Json profiles = Json::object();
    for (const auto& [k, v] : s.by_profile) profiles[k] = v;
    j["by_profile"] = profiles;
    return Json{{"summary", j}};
}

}  // namespace leibniz
