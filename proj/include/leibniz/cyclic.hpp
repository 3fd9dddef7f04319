#pragma once

// Left-normed commutators ln_1(a) = a, ln_{k+1}(a) = [a, ln_k(a)], the
// cyclic subalgebra <a> they span, and cyclicity tests for subalgebras.

#include "leibniz/algebra.hpp"
#include "leibniz/subspace.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

Vector left_normed(const Algebra& a, const Vector& x, std::size_t k);

struct CyclicProbe {
    Vector generator;
    /// ln_1..ln_m, linearly independent; ln_{m+1} lies in their span.
    std::vector<Vector> chain;
    Subspace span;
};

/// <x> = span{ln_k(x)}; closure under the bracket is asserted.
CyclicProbe generated_subalgebra(const Algebra& a, const Vector& x);

struct PropositionReport {
    /// items[0..6] correspond to assertions (i)..(vii).
    std::array<bool, 7> items{};
    bool all_pass() const noexcept;
    std::string str() const;
};

/// Checks the structure theory of <x>: [ln_k, ln_j] = 0 for k > 1, all
/// bracketings of up to five copies collapse to ln_k, the span statements,
/// Leib(<x>) = [<x>, <x>], gamma_k(<x>) = span{ln_t : t >= k}, and
/// [[u, v], z] = 0 for u, v in <x> and z in L.
PropositionReport proposition_check(const Algebra& a, const Vector& x);

enum class Cyclicity { cyclic, not_cyclic, unknown };

struct CyclicVerdict {
    Cyclicity status = Cyclicity::unknown;
    std::optional<Vector> generator;
};

/// Exhaustive generator scan over GF(p): the lexicographically least
/// element x of S with <x> = S, or nullopt. S must be a subalgebra.
std::optional<Vector> cyclic_generator_scan(const Algebra& a, const Subspace& s);

/// Criterion for nilpotent S: S is cyclic iff dim S/[S,S] = 1, with any
/// element outside [S,S] as generator. Returns unknown when S is not
/// nilpotent.
CyclicVerdict cyclic_generator_criterion(const Algebra& a, const Subspace& s);

/// Exhaustive scan over finite fields, the nilpotent criterion over Q.
CyclicVerdict is_cyclic_subalgebra(const Algebra& a, const Subspace& s);

/// (ln_1(x), ..., ln_m(x)) after verifying that <x> is nilpotent and that in
/// this basis [a1,a1] = a2, [a1,a_j] = a_{j+1}, [a1,a_m] = 0 and
/// [a_i, a_k] = 0 for i > 1. Throws std::invalid_argument otherwise.
std::vector<Vector> canonical_cyclic_basis(const Algebra& a, const Vector& x);

}  // namespace leibniz
