/**
 * Exact rank and invariant factors of sparse integer matrices.
 *
 * Elimination proceeds in two phases. Unimodular column operations pivot on
 * entries of absolute value one, smallest columns first; each such pivot
 * contributes an invariant factor 1 and removes a row and a column. What
 * remains (usually nothing for boundary matrices of cube complexes) is
 * finished densely: fraction-free elimination for the rank, or a full Smith
 * normal form when torsion is requested. Entries are 64-bit until an
 * operation would overflow, after which the whole reduction is redone with
 * arbitrary-precision integers.
 */

#ifndef RAAGTREE_INTEGER_HOMOLOGY_HPP
#define RAAGTREE_INTEGER_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace raagtree {

using BigInt = boost::multiprecision::cpp_int;

struct SparseIntMatrix {
    using Entry = std::pair<std::uint32_t, std::int64_t>;  // (row, value)

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;  // each sorted by row, no zeros

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    std::size_t nonzeros() const;
    /// Product this * rhs, exact in 64-bit arithmetic; throws
    /// std::overflow_error if an entry overflows.
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;
    bool is_zero() const;
};

struct ReductionResult {
    std::size_t rank = 0;
    std::size_t unit_pivots = 0;
    std::size_t residual_rows = 0;
    std::size_t residual_cols = 0;
    bool used_bigint = false;
    /// Invariant factors greater than one, ascending. Filled only when
    /// torsion was requested.
    std::vector<BigInt> torsion;
};

ReductionResult reduce(const SparseIntMatrix& m, bool want_torsion);

inline std::size_t rational_rank(const SparseIntMatrix& m) { return reduce(m, false).rank; }

/// Smith normal form diagonal of a dense matrix: the non-zero invariant
/// factors d_1 | d_2 | ..., all positive.
std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> a);

/// Rank over the rationals by Bareiss fraction-free elimination.
std::size_t dense_rank(std::vector<std::vector<BigInt>> a);

}  // namespace raagtree

#endif
