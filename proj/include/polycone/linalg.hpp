#ifndef POLYCONE_LINALG_HPP
#define POLYCONE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polycone/matrix.hpp"

namespace polycone {

/// Exact determinant of a square matrix. The 0x0 matrix has determinant 1.
Rational determinant(const RatMatrix& m);

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const RatMatrix& m);

/// Basis of ker(M) = {x : Mx = 0}, possibly empty.
///
/// The construction is Cramer-style with a fixed pivot rule (columns left to
/// right, first usable row top to bottom): one basis vector per free column,
/// with that free coordinate set to 1, all other free coordinates 0, and the
/// pivot coordinates solved exactly. Every component is therefore a quotient
/// of subdeterminants of M up to sign, or 0. A matrix with no rows yields the
/// standard basis.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Given a basis `inner` of a subspace U with U contained in ker(outer) and
/// dim(U) = dim(ker(outer)) - 1, returns the first kernel_basis(outer) vector
/// outside span(inner), so that inner plus the result is a basis of
/// ker(outer). Throws ContractError if the dimension precondition fails.
RatVector extend_basis(const std::vector<RatVector>& inner, const RatMatrix& outer);

/// True iff v lies in the linear span of the given vectors (exact rank test).
bool in_span(const RatVector& v, const std::vector<RatVector>& basis);

inline constexpr std::uint64_t kDefaultSubmatrixCap = std::uint64_t{1} << 20;

/// All determinants of square submatrices of M with order <= size_limit,
/// including the empty submatrix (determinant 1). Throws
/// EnumerationLimitError when more than `cap` submatrices would be visited.
std::set<Rational> subdeterminants(const RatMatrix& m, std::size_t size_limit,
                                   std::uint64_t cap = kDefaultSubmatrixCap);

/// Quotient set qsd(M) = { p/q : p, q in sd(M) or -sd(M), q != 0 } membership.
/// Returns nullopt (inconclusive) if the enumeration cap binds.
std::optional<bool> qsd_contains(const RatMatrix& m, const Rational& r,
                                 std::uint64_t cap = kDefaultSubmatrixCap);

/// Rational upper bound on |d| for every d in sd(M): the product over all rows
/// of max(1, l1-norm of the row). Dominates the Hadamard bound of every
/// submatrix and is at least 1 (the empty submatrix).
Rational hadamard_bound(const RatMatrix& m);

} // namespace polycone

#endif
