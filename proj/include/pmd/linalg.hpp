#pragma once

#include <optional>
#include <utility>

#include "pmd/matrix.hpp"

namespace pmd {

// A subspace of F_p^ambient held as a reduced-row-echelon basis. The RREF basis
// of a row space is unique, so equality of subspaces is equality of the structs.
struct Subspace {
    int ambient = 0;
    Matrix basis; // basis.cols == ambient, rows = dim, in RREF

    Subspace() = default;
    Subspace(int amb, Matrix b) : ambient(amb), basis(std::move(b)) {}

    int dim() const { return basis.rows; }

    static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient)); }
    static Subspace full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

// Span of the rows of A, canonicalized.
Subspace row_space(const FieldSpec& F, const Matrix& A);
// Ker(A) as a subspace of F^cols.
Subspace kernel_basis(const FieldSpec& F, const Matrix& A);
// Column space of A as a subspace of F^rows.
Subspace image_basis(const FieldSpec& F, const Matrix& A);

// (U meet V, U join V) via Zassenhaus. dim meet + dim join = dim U + dim V.
std::pair<Subspace, Subspace> subspace_meet_join(const FieldSpec& F, const Subspace& U,
                                                 const Subspace& V);

bool subspace_contains(const FieldSpec& F, const Subspace& U, const Subspace& V); // V <= U?
bool vector_in_subspace(const FieldSpec& F, const Subspace& U, const Matrix& row);

// Affine solution set of A X = B: one particular solution plus Ker(A) acting on
// each column independently. none when inconsistent.
struct Solution {
    Matrix particular; // cols(A) x cols(B)
    Subspace kernel;   // Ker(A) in F^cols(A)
};
std::optional<Solution> solve_all(const FieldSpec& F, const Matrix& A, const Matrix& B);

// Coordinates of the rows of V in the row basis B (rows independent):
// returns C with C * B == V; throws Error if some row is outside the span.
Matrix coordinates_in_basis(const FieldSpec& F, const Matrix& B, const Matrix& V);

// Canonical quotient F^n -> F^n/W of dimension n - dim W: coordinates on the
// non-pivot positions of W's echelon basis. Returns the (n-r) x n matrix of the
// quotient map.
Matrix quotient_map(const FieldSpec& F, const Subspace& W);

} // namespace pmd
