#pragma once

// Text format for algebras and JSON/text rendering of reports.
//
//   # comment
//   field GF(5)
//   dim 3
//   basis a1 a2 a3          (optional)
//   [1,1] = 1*2
//   [1,2] = 1*3 - 2/3*1     (over Q)
//
// Indices are 1-based. Unlisted brackets are zero. The canonical emission
// puts comments first, then field, dim, basis (only for custom labels) and
// the nonzero brackets in lexicographic (i,j) order with terms in increasing
// k; parse followed by emit reproduces canonical text byte for byte.

#include "leibniz/algebra.hpp"
#include "leibniz/census.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"
#include "leibniz/lattice.hpp"

#include "json.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct AlgebraFile {
    /// Comment lines without the leading '#'.
    std::vector<std::string> comments;
    Algebra algebra;
};

/// The identity is not checked; the returned algebra is unchecked.
AlgebraFile parse_algebra_file(std::string_view text);
std::string emit_algebra_file(const Algebra& a, const std::vector<std::string>& comments = {});
inline std::string emit_algebra_file(const AlgebraFile& f) { return emit_algebra_file(f.algebra, f.comments); }

AlgebraFile read_algebra_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Scalars render as strings ("-1/2", "3") to stay exact.
Json to_json(const Scalar& s);
Json to_json(std::span<const Scalar> v);
Json to_json(const Matrix& m);
/// {"dim": k, "basis": [[...], ...]} with the RREF rows.
Json to_json(const Subspace& s);

/// Keys: field, dim, lie, nilpotent, class, leibniz_kernel, left_center,
/// right_center, center, lower_series, upper_series, derivations,
/// right_derivations.
Json analysis_json(const Algebra& a);
std::string analysis_text(const Algebra& a);

/// Keys: kind, dim, basis (matrices), profiles (canonical cyclic input only),
/// invariance.
Json derivations_json(const Algebra& a, DerivationKind kind);
std::string derivations_text(const Algebra& a, DerivationKind kind);

Json maximal_cyclic_json(const Algebra& a, const MaximalCyclicReport& report);
std::string maximal_cyclic_text(const Algebra& a, const MaximalCyclicReport& report);

/// One census record; keys: fingerprint, tensor, leibniz_kernel,
/// left_center, right_center, center, lower_series, upper_series, class,
/// lie, derivations, right_derivations, nilpotent, has_maximal_cyclic,
/// all_maximal_ideals, signature, label.
Json census_record_json(const CensusRecord& r, const CensusConfig& config);
Json census_summary_json(const CensusResult& result);

}  // namespace leibniz
