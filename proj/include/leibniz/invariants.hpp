#pragma once

// Structural invariants of a checked Leibniz algebra: Leibniz kernel,
// left/right center, center, lower and upper central series, nilpotency
// class, product subspaces and ideal tests.
//
// Series are returned up to stabilization (two consecutive equal terms);
// in finite dimension this is where the transfinite definitions stop.

#include "leibniz/algebra.hpp"
#include "leibniz/subspace.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibniz {

/// span{[x, y] : x in s, y in t}
Subspace product_subspace(const Algebra& a, const Subspace& s, const Subspace& t);

bool is_subalgebra(const Algebra& a, const Subspace& s);
/// [L, S] <= S
bool is_left_ideal(const Algebra& a, const Subspace& s);
/// [S, L] <= S
bool is_right_ideal(const Algebra& a, const Subspace& s);
bool is_ideal(const Algebra& a, const Subspace& s);

/// Span of all squares [x, x]; generated by [e_i,e_i] and [e_i,e_j] + [e_j,e_i]
/// in every characteristic.
Subspace leibniz_kernel(const Algebra& a);

/// {x : [x, y] = 0 for all y}
Subspace left_center(const Algebra& a);
/// {x : [y, x] = 0 for all y}
Subspace right_center(const Algebra& a);
Subspace center(const Algebra& a);

/// gamma_1 = L, gamma_{k+1} = [L, gamma_k], up to the first repeated term.
/// The last element is the stable term (zero for nilpotent algebras).
std::vector<Subspace> lower_central_series(const Algebra& a);

/// c with gamma_{c+1} = 0 and gamma_c != 0; nullopt when the series
/// stabilizes at a nonzero term.
std::optional<std::size_t> nilpotency_class(const Algebra& a);
bool is_nilpotent(const Algebra& a);

/// zeta_0 = 0, zeta_{k+1} = {x : [x, L] + [L, x] <= zeta_k}, up to
/// stabilization; the last element is the hypercenter.
std::vector<Subspace> upper_central_series(const Algebra& a);
Subspace hypercenter(const Algebra& a);

/// True when every square [e_i,e_i] and every [e_i,e_j] + [e_j,e_i] vanishes.
bool is_lie(const Algebra& a);

struct AlgebraReport {
    std::size_t dim = 0;
    Field field;
    std::size_t leibniz_kernel_dim = 0;
    std::size_t left_center_dim = 0;
    std::size_t right_center_dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::size_t> lower_series_dims;
    std::vector<std::size_t> upper_series_dims;
    std::optional<std::size_t> nilpotency_class;
    bool is_lie = false;
    // Filled in by the derivations module.
    std::optional<std::size_t> derivation_dim;
    std::optional<std::size_t> right_derivation_dim;

    friend bool operator==(const AlgebraReport&, const AlgebraReport&) = default;
};

AlgebraReport invariant_profile(const Algebra& a);

}  // namespace leibniz
