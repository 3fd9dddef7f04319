#pragma once

// Constructors for the classified families of Leibniz algebras with a
// maximal cyclic subalgebra, and the normalization procedures that bring an
// algebra with a cyclic codimension-one ideal K = span{a1..an} into those
// normal forms.
//
// Basis order is always a1..an followed by the extra element (d or s).
// Constructors for families whose identity depends on parameters
// (theoremA_iii, theoremB) return unchecked algebras; the rest are checked.

#include "leibniz/algebra.hpp"
#include "leibniz/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

Algebra cyclic_nilpotent(std::size_t n, Field field);

/// L1: [a,a] = b.
Algebra dim2_L1(Field field);
/// L2: [c,c] = [c,d] = d.
Algebra dim2_L2(Field field);

/// K + Fd with K cyclic nilpotent of dim n and [d,d] = [K,d] = [d,K] = 0.
Algebra theoremA_i(std::size_t n, Field field);
/// K + <d> with [d,d] = a_n and [K,d] = [d,K] = 0; <d> = Fd + Fa_n.
Algebra theoremA_ii(std::size_t n, Field field);
/// theoremA_ii(2): sum of two 2-dimensional cyclic ideals span{a1,a2} and
/// span{d,a2} meeting in the center.
Algebra quaternion_analog(Field field);

/// Where [a1, s] lands in type (iii): a_{n-t} as printed in the type table,
/// or a_{n-t+2} as produced by the normalization s = d - delta_n a_{n-t+1}.
enum class IndexConvention { as_printed, proof_derived };

/// Type (iii): [s, a_k] = a_{t+k-1} + gammas-band for k <= n-t+1, zero beyond,
/// [a1, s] = tau * a_{index}, [a_j, s] = 0 for j >= 2, [s, s] = 0.
/// `gammas` holds gamma_{t+1}..gamma_n. The identity is not guaranteed.
Algebra theoremA_iii(std::size_t n, std::size_t t, const std::vector<Scalar>& gammas, const Scalar& tau, Field field,
                     IndexConvention convention);

/// [a1,d] = -a1, [a_j,d] = 0 (j >= 2),
/// [d,a_k] = k a_k + gamma_2 a_{k+1} + ... + gamma_{n-k+1} a_n,
/// [d,d] = -(gamma_3 a_2 + ... + gamma_n a_{n-1}) + delta_n a_n.
/// `gammas` holds gamma_2..gamma_n. The identity holds only when gamma_2 = 0.
Algebra theoremB(std::size_t n, const std::vector<Scalar>& gammas, const Scalar& delta_n, Field field);

/// [s, b_j] = j b_j, [b1, s] = -b1, [b_j, s] = 0 (j >= 2), [s, s] = 0 on top
/// of the cyclic table for b1..bn. Requires characteristic 0.
Algebra theoremC(std::size_t n, Field field);

enum class FamilyId { cyclic, L1, L2, A_i, A_ii, A_iii, B, C, quaternion_analog };

struct FamilyParams {
    FamilyId family = FamilyId::cyclic;
    std::size_t n = 0;
    std::size_t t = 0;
    std::vector<Scalar> gammas;
    std::optional<Scalar> tau;
    std::optional<Scalar> delta_n;
    IndexConvention convention = IndexConvention::as_printed;
    Field field;
};

/// Parses "cyclic", "L1", "L2", "theoremA-i", "theoremA-ii", "theoremA-iii",
/// "theoremB", "theoremC", "quaternion".
FamilyId parse_family_id(const std::string& name);
std::string family_name(FamilyId id);

Algebra build_family(const FamilyParams& params);

/// One-line description of the parameters, used as a provenance comment.
std::string describe(const FamilyParams& params);

// Normalization procedures.

struct Lemma7Result {
    Vector d;
    std::vector<Scalar> betas;  // beta_2..beta_n with [a1, b] = sum beta_j a_j
};

/// For nilpotent A with ideal K = span(k_basis) in canonical cyclic form and
/// b outside K: d = b - (beta_2 a_1 + ... + beta_n a_{n-1}), so [a1, d] = 0
/// and [K, d] = 0. Throws when [a1, b] has an a1-component or leaves K.
Lemma7Result lemma7_normalize(const Algebra& a, const std::vector<Vector>& k_basis, const Vector& b);

struct TheoremBNormalization {
    Vector d;
    std::vector<Vector> k_basis;   // the canonical chain a1..an generated by a1
    Scalar beta1;                  // a1-coefficient of [b, a1]
    std::vector<Scalar> sigmas;    // sigma_2..sigma_n with [a1, b/beta1] = -a1 + sum sigma_j a_j
};

/// Rescales b by 1/beta1 and shifts it inside K so that [a1, d] = -a1.
/// Throws when beta1 = 0 or [a1, b/beta1] does not have a1-coefficient -1.
TheoremBNormalization theoremB_normalize(const Algebra& a, const Vector& a1, const Vector& b);

struct TheoremCReduction {
    std::vector<Scalar> gammas;       // gamma_2..gamma_n read from [d, a1]
    Scalar delta_n;
    std::vector<Scalar> lambdas;      // lambda_2..lambda_n
    Matrix system;                    // triangular matrix of the lambda system
    std::vector<Scalar> rhs;
    Vector x;                         // sum lambda_j a_j
    Vector s;                         // d - x
    std::vector<Vector> b_basis;      // b1..bn
    Matrix transition;                // row j: coordinates of b_j in a1..an
};

/// Solves [d, d] = [d, x] for x = sum lambda_j a_j, sets s = d - x and builds
/// b1 = a1 + lambda_2 a_3 + ... + lambda_{n-1} a_n, b_j = [b1, b_{j-1}].
/// Every postcondition ([s,s] = 0, [s,b_j] = j b_j, [b1,s] = -b1,
/// [b_j,s] = 0, cyclic table on b, nonsingular banded transition matrix) is
/// verified exactly; std::logic_error if one fails.
/// Throws std::invalid_argument when the input is not in theoremB form with
/// gamma_2 = 0, or when the characteristic divides some j <= n.
TheoremCReduction theoremC_reduce(const Algebra& a, const std::vector<Vector>& k_basis, const Vector& d);
/// Same, for an algebra in the standard theoremB layout (a_j = e_j, d = e_{n+1}).
TheoremCReduction theoremC_reduce(const Algebra& a);

}  // namespace leibniz
