#pragma once

// Shared helpers for the unit suites: corpus access, seeded generators and
// small brute-force oracles that avoid the library's linear algebra.

#include "leibniz/algebra.hpp"
#include "leibniz/io.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace leibniz;

inline std::filesystem::path corpus_dir()
{
    return LEIBNIZ_CORPUS_DIR;
}

inline std::filesystem::path golden_dir()
{
    return LEIBNIZ_GOLDEN_DIR;
}

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::vector<std::filesystem::path> corpus_files()
{
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
        if (e.path().extension() == ".alg") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

struct CorpusEntry {
    std::string name;
    Algebra algebra;
};

/// Every corpus algebra, checked.
inline std::vector<CorpusEntry> corpus()
{
    std::vector<CorpusEntry> out;
    for (const auto& p : corpus_files())
        out.push_back({p.filename().string(), parse_algebra_file(slurp(p)).algebra.checked()});
    return out;
}

inline Scalar random_scalar(Field f, std::mt19937_64& rng, long range = 5)
{
    if (f.is_finite()) {
        std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
        return Scalar(f, d(rng));
    }
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, range);
    return Scalar(f, num(rng)) / Scalar(f, den(rng));
}

inline Vector random_vector(Field f, std::size_t n, std::mt19937_64& rng)
{
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
    return v;
}

inline Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(f, rng);
    return m;
}

/// Random invertible matrix (rejection sampling on the determinant-free
/// criterion that the columns span).
Matrix random_invertible(Field f, std::size_t n, std::mt19937_64& rng);

/// Expresses `a` in the random basis given by the columns of an invertible matrix.
Algebra random_basis_change(const Algebra& a, std::mt19937_64& rng);

/// Independent identity check: evaluates the bracket of arbitrary vectors
/// by the defining double sum and tests the identity on random triples.
bool identity_on_random_vectors(const Algebra& a, std::mt19937_64& rng, int samples);

/// All vectors of GF(p)^n in lexicographic order (first coordinate most significant).
std::vector<Vector> all_vectors(Field f, std::size_t n);

/// The set {x : x in span}, enumerated by brute force over coefficient tuples.
std::vector<Vector> span_elements(Field f, const std::vector<Vector>& generators);

/// Count of subspaces of GF(q)^n of dimension k from the product formula
/// prod_{i<k} (q^n - q^i) / (q^k - q^i).
std::uint64_t subspace_count_oracle(std::size_t n, std::size_t k, std::uint64_t q);

}  // namespace testing_support
