#pragma once

// Subspace enumeration over GF(p), the subalgebra lattice of a small
// algebra over a finite field, and the report on maximal subalgebras.

#include "leibniz/algebra.hpp"
#include "leibniz/cyclic.hpp"
#include "leibniz/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace leibniz {

inline constexpr std::size_t max_enumeration_dim = 6;
inline constexpr std::size_t max_lattice_dim = 5;

/// Number of k-dimensional subspaces of GF(q)^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Calls `visit` once for every subspace of GF(p)^n, ordered by dimension,
/// then by pivot columns (lexicographic), then by the free RREF entries
/// (odometer, last entry fastest). Throws std::invalid_argument when n
/// exceeds max_enumeration_dim or the field is not finite.
void for_each_subspace(std::size_t n, Field field, const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> enumerate_subspaces(std::size_t n, Field field);

struct LatticeEntry {
    Subspace space;
    bool maximal = false;
    bool ideal = false;
    bool left_ideal = false;
    bool right_ideal = false;
    /// Lexicographically least generator; set iff the subalgebra is cyclic.
    std::optional<Vector> generator;
};

/// Every subalgebra (including 0 and L) in enumeration order.
struct SubalgebraLattice {
    std::size_t dim = 0;
    Field field;
    std::vector<LatticeEntry> entries;

    std::vector<const LatticeEntry*> maximal() const;
};

/// Requires dim <= max_lattice_dim and p in {2, 3, 5}.
SubalgebraLattice subalgebra_lattice(const Algebra& a);

struct MaximalSubalgebra {
    Subspace space;
    Cyclicity cyclicity = Cyclicity::unknown;
    std::optional<Vector> generator;
    bool ideal = false;
};

struct MaximalCyclicReport {
    bool nilpotent = false;
    /// False when the list may miss maximal subalgebras (rational path).
    bool exhaustive = true;
    std::vector<MaximalSubalgebra> maximal;
    /// Set for nilpotent algebras: whether every listed maximal subalgebra is an ideal.
    std::optional<bool> all_maximal_are_ideals;

    bool has_maximal_cyclic() const;
};

/// Finite fields: read off subalgebra_lattice. Over Q: hyperplanes through
/// [L,L] that are subalgebras, with cyclicity from the nilpotent criterion;
/// exhaustive only for nilpotent L with dim L/[L,L] = 1.
MaximalCyclicReport maximal_cyclic_report(const Algebra& a);

}  // namespace leibniz
