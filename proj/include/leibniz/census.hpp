#pragma once

// Exhaustive census of structure tensors over GF(p) in small dimension.
//
// A tensor is identified by its fingerprint: the base-p number whose digit
// at position (i*d + j)*d + k (least significant first) is c[i][j][k].
// Records come out in increasing fingerprint order whatever the worker count.
//
// For nilpotent algebras of dimension >= 3 with a cyclic maximal subalgebra
// K, the pair (L, K) is compared with the normal forms (i), (ii), (iii) by
// invariants of the pair, not by isomorphism. Only quantities preserved by
// isomorphisms mapping K to K enter the signature; dimensions of [d, K] and
// [K, d] depend on the complement d and are replaced by [L, K] and [K, L].

#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

inline constexpr std::uint64_t default_census_limit = std::uint64_t{1} << 27;

struct CensusConfig {
    std::size_t dim = 3;
    Field field = Field::prime(2);
    unsigned jobs = 1;
    /// Largest admissible number of tensors p^(d^3).
    std::uint64_t max_tensors = default_census_limit;
};

/// Invariants of a pair (L, K) with K a cyclic subalgebra of codimension one.
struct PairSignature {
    std::size_t leibniz_kernel = 0;
    std::size_t left_center = 0;
    std::size_t right_center = 0;
    std::size_t center = 0;
    std::vector<std::size_t> lower_series;
    std::vector<std::size_t> upper_series;
    std::size_t derivations = 0;
    std::size_t right_derivations = 0;
    std::size_t lk = 0;  // dim [L, K]
    std::size_t kl = 0;  // dim [K, L]

    friend bool operator==(const PairSignature&, const PairSignature&) = default;
    friend auto operator<=>(const PairSignature&, const PairSignature&) = default;
    std::string str() const;
};

struct CensusRecord {
    std::uint64_t fingerprint = 0;
    AlgebraReport profile;  // includes both derivation dimensions
    bool nilpotent = false;
    bool has_maximal_cyclic = false;
    /// Evaluated for nilpotent algebras.
    std::optional<bool> all_maximal_ideals;
    /// Signature of the first cyclic maximal subalgebra, when the pair is classified.
    std::optional<PairSignature> signature;
    /// "A-i", "A-ii", "A-iii", "unmatched" or "not-applicable".
    std::string label = "not-applicable";
};

struct CensusSummary {
    std::uint64_t tensors = 0;
    std::uint64_t leibniz = 0;
    std::uint64_t nilpotent = 0;
    std::uint64_t with_maximal_cyclic = 0;
    std::uint64_t unmatched = 0;
    std::uint64_t ideal_violations = 0;
    std::map<std::string, std::uint64_t> by_label;
    /// Keyed by a compact rendering of the invariant profile.
    std::map<std::string, std::uint64_t> by_profile;
};

struct CensusResult {
    CensusConfig config;
    std::vector<CensusRecord> records;
    CensusSummary summary;
};

/// Throws std::invalid_argument unless p is 2, 3 or 5, 1 <= dim <= 5 and
/// p^(dim^3) <= max_tensors.
void validate_census_config(const CensusConfig& config);

std::uint64_t fingerprint(const StructureTensor& t);
StructureTensor tensor_from_fingerprint(Field field, std::size_t dim, std::uint64_t fingerprint);

/// Identity check on a digit array (length d^3, entries in [0, p)), with
/// early exit on the first failing basis triple.
bool satisfies_left_leibniz(const std::uint8_t* digits, std::size_t d, std::uint32_t p);

/// Signatures of the reference normal forms of total dimension `dim`,
/// labelled by type. Parameter points whose table fails the identity are skipped.
std::vector<std::pair<std::string, PairSignature>> reference_signatures(std::size_t dim, Field field);

/// Full record for one checked algebra.
CensusRecord census_record(const Algebra& a, std::uint64_t fingerprint,
                           const std::vector<std::pair<std::string, PairSignature>>& references);

CensusResult run_census(const CensusConfig& config);

/// Compact profile key used for the summary table, e.g. "leib=1 zl=2 zr=1 z=1 lower=3,1,0 der=4 rder=3".
std::string profile_key(const AlgebraReport& r);

}  // namespace leibniz
