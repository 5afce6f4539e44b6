#pragma once

#include <optional>
#include <vector>

#include "orbhodge/rational.hpp"

namespace orbhodge {

/// Smith normal form U*A*V = S with U, V unimodular and S diagonal with a
/// divisibility chain d1 | d2 | ... along nonnegative diagonal entries.
struct SmithResult {
    MatZ u, s, v;
};

SmithResult smith_normal_form(const MatZ& a);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `a`: returns a basis matrix (lower triangular up to column permutation)
/// whose columns generate the same lattice.
MatZ column_lattice_basis(const MatZ& a);

struct RankKernel {
    Index rank = 0;
    MatQ kernel;  // columns form a basis of the right kernel
};

/// Exact rank; fraction-free (Bareiss) elimination after clearing denominators.
Index rank_of(const MatQ& a);
Index rank_of(const MatZ& a);

RankKernel rank_and_kernel(const MatQ& a);

/// Solves a*x = b over the rationals. Empty when inconsistent.
std::optional<VecQ> solve_rational(const MatQ& a, const VecQ& b);

/// Solves a*x = b over the integers. Empty when no integral solution exists.
std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);

/// Basis vectors of a subspace of the k-th wedge power of Q^d, written in the
/// C(d,k) wedge-monomial coordinates ordered lexicographically by index set.
struct WedgeSubspace {
    int ambient_rank = 0;
    int degree = 0;
    MatQ basis;  // one basis vector per row, C(d,k) columns
};

/// Lexicographically ordered k-subsets of {0,...,d-1}.
std::vector<std::vector<int>> index_subsets(int d, int k);

Index binomial(int n, int k);

/// Coordinates of v_0 ^ ... ^ v_{k-1} (rows of `vectors`) in wedge-monomial
/// coordinates; the entry for an index set T is the k x k minor on rows T.
VecQ wedge_coordinates(const MatQ& vectors);

/// Image of the k-th wedge power of the row span of `vectors` inside
/// wedge^k Q^d, with a canonical (reduced row echelon) basis.
WedgeSubspace wedge_power(const MatQ& vectors, int k);

/// Reduced row echelon form; returns pivot columns.
std::vector<Index> rref_in_place(MatQ& m);

/// dim!-normalized volume of a simplex given by its full vertex list,
/// measured in the lattice of its affine span. Throws DomainError when the
/// vertices are affinely dependent.
Int relative_volume(const std::vector<VecZ>& simplex_vertices);

/// A basis (as columns) of the saturation of the column span of `a`:
/// span_Q(cols a) intersected with Z^d.
MatZ saturation_basis(const MatZ& a);

/// Jordan block sizes of `a` at the eigenvalue `lambda`, sorted decreasingly.
/// Restricted to invertible `a`; computed from ranks of powers of a-lambda*I.
std::vector<int> jordan_profile(const MatQ& a, const Rat& lambda);

/// Primitive integer vector parallel to v (gcd of entries 1, same direction).
VecZ primitive(const VecZ& v);

Int content(const VecZ& v);

/// Scales a rational vector to a primitive integer vector, same direction.
VecZ scale_to_primitive(const VecQ& v);

}  // namespace orbhodge
