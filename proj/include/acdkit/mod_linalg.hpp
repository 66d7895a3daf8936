#ifndef ACDKIT_MOD_LINALG_HPP
#define ACDKIT_MOD_LINALG_HPP

#include <cstdint>
#include <vector>

namespace acdkit {

// Dense linear algebra over F_q, q prime and below 2^63. Entries are kept
// reduced to [0, q).

using ModVector = std::vector<std::uint64_t>;
using ModMatrix = std::vector<ModVector>;  // row-major

/// Row-reduces in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(ModMatrix& rows, std::uint64_t q);

/// Basis of {x : a x = 0}; a is rows x cols.
ModMatrix nullspace(const ModMatrix& a, std::size_t cols, std::uint64_t q);

/// a * v for a square or rectangular matrix.
ModVector apply(const ModMatrix& a, const ModVector& v, std::uint64_t q);

/// Characteristic polynomial det(xI - a), coefficients low to high (monic),
/// via reduction to upper Hessenberg form.
ModVector characteristic_polynomial(ModMatrix a, std::uint64_t q);

std::uint64_t evaluate(const ModVector& poly, std::uint64_t x, std::uint64_t q);

/// All roots in F_q, increasing, found by exhaustive evaluation.
std::vector<std::uint64_t> roots(const ModVector& poly, std::uint64_t q);

}  // namespace acdkit

#endif  // ACDKIT_MOD_LINALG_HPP
