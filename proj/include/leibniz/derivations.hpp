#pragma once

// Derivations f([a,b]) = [f(a),b] + [a,f(b)] and right derivations
// g([x,y]) = [x,g(y)] - [y,g(x)], computed as kernels of linear systems on
// the n^2 matrix entries.
//
// Constraint rows are indexed by the basis pair (i,j) in lexicographic
// order and then by the output coordinate; unknowns are the matrix entries
// in row-major order. This fixes the canonical (RREF) kernel basis.

#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// Matrix of x -> [a, x].
Matrix left_mult_matrix(const Algebra& alg, const Vector& a);
/// Matrix of x -> [x, a].
Matrix right_mult_matrix(const Algebra& alg, const Vector& a);

enum class DerivationKind { left, right };

struct DerivationBasis {
    DerivationKind kind = DerivationKind::left;
    std::vector<Matrix> basis;
    std::size_t dim() const noexcept { return basis.size(); }
};

DerivationBasis derivation_space(const Algebra& a);
DerivationBasis right_derivation_space(const Algebra& a);

bool is_derivation(const Algebra& a, const Matrix& m);
bool is_right_derivation(const Algebra& a, const Matrix& m);

/// Coefficients gamma_1..gamma_n of a derivation of the canonical cyclic
/// nilpotent algebra: f(a_k) = k*gamma_1 a_k + gamma_2 a_{k+1} + ... + gamma_{n-k+1} a_n.
struct Lemma3Profile {
    std::vector<Scalar> gammas;
};

/// Coefficients rho_1..rho_n of a right derivation of the canonical cyclic
/// nilpotent algebra: g(a_1) = sum rho_j a_j and g(a_k) = 0 for k >= 2.
struct Lemma5Profile {
    std::vector<Scalar> rhos;
};

/// True when the tensor is exactly the canonical cyclic nilpotent table in
/// the standard basis.
bool is_canonical_cyclic(const Algebra& a);

/// Reads the gammas from column 1 and checks every other entry of m against
/// the banded pattern (diagonal entries computed in the field). Throws when
/// `a` is not canonical cyclic or `m` is not a derivation; nullopt on a
/// pattern mismatch.
std::optional<Lemma3Profile> extract_lemma3_profile(const Algebra& a, const Matrix& m);
std::optional<Lemma5Profile> extract_lemma5_profile(const Algebra& a, const Matrix& m);

struct InvarianceCheck {
    std::string description;  // e.g. "f(zeta^left) <= zeta^left"
    bool holds = false;
};

struct InvarianceReport {
    DerivationKind kind = DerivationKind::left;
    std::vector<InvarianceCheck> checks;
    bool all_hold() const noexcept;
};

/// Left derivations: the image of the left center, right center, center and
/// every upper central term lies in the same subspace. Right derivations:
/// g(zeta^left) <= zeta^right, g(zeta) <= zeta^right and g(Leib) = 0.
/// Throws unless m is a derivation of the given kind.
InvarianceReport check_invariance(const Algebra& a, const Matrix& m, DerivationKind kind);

/// invariant_profile() plus both derivation-space dimensions.
AlgebraReport full_profile(const Algebra& a);

}  // namespace leibniz
