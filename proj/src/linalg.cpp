#include "pmd/linalg.hpp"

namespace pmd {

Subspace row_space(const FieldSpec& F, const Matrix& A) {
    return Subspace(A.cols, rref(F, A).m);
}

Subspace kernel_basis(const FieldSpec& F, const Matrix& A) {
    Echelon e = rref(F, A);
    int n = A.cols;
    std::vector<char> is_pivot(n, 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    Matrix K(n - e.rank, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        K.at(row, c) = 1;
        for (int i = 0; i < e.rank; ++i)
            K.at(row, e.pivots[i]) = F.neg(e.m.at(i, c));
        ++row;
    }
    // The free-column construction is a basis but not echelon; canonicalize.
    return row_space(F, K);
}

Subspace image_basis(const FieldSpec& F, const Matrix& A) {
    return row_space(F, transpose(A));
}

std::pair<Subspace, Subspace> subspace_meet_join(const FieldSpec& F, const Subspace& U,
                                                 const Subspace& V) {
    if (U.ambient != V.ambient)
        throw AmbientMismatch("subspace_meet_join: ambient " + std::to_string(U.ambient) +
                              " vs " + std::to_string(V.ambient));
    int n = U.ambient;
    // Zassenhaus block matrix [[U, U], [V, 0]]; after elimination the rows with
    // zero left half carry an intersection basis in the right half.
    Matrix Z(U.dim() + V.dim(), 2 * n);
    for (int i = 0; i < U.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            Z.at(i, j) = U.basis.at(i, j);
            Z.at(i, n + j) = U.basis.at(i, j);
        }
    for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j < n; ++j) Z.at(U.dim() + i, j) = V.basis.at(i, j);
    Echelon e = rref(F, Z);
    Matrix meet_rows(0, n), join_rows(0, n);
    for (int i = 0; i < e.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (e.m.at(i, j)) left_zero = false;
        Matrix row(1, n);
        for (int j = 0; j < n; ++j) row.at(0, j) = e.m.at(i, left_zero ? n + j : j);
        if (left_zero)
            meet_rows = vstack(meet_rows, row);
        else
            join_rows = vstack(join_rows, row);
    }
    return {row_space(F, meet_rows), row_space(F, join_rows)};
}

bool vector_in_subspace(const FieldSpec& F, const Subspace& U, const Matrix& row) {
    return rank(F, vstack(U.basis, row)) == U.dim();
}

bool subspace_contains(const FieldSpec& F, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw AmbientMismatch("subspace_contains");
    return rank(F, vstack(U.basis, V.basis)) == U.dim();
}

std::optional<Solution> solve_all(const FieldSpec& F, const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows) throw Error("solve_all: row count mismatch");
    Echelon e = rref(F, hstack(A, B));
    for (int c : e.pivots)
        if (c >= A.cols) return std::nullopt; // pivot escaped into the B block
    Solution s;
    s.particular = Matrix(A.cols, B.cols);
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < B.cols; ++j)
            s.particular.at(e.pivots[i], j) = e.m.at(i, A.cols + j);
    s.kernel = kernel_basis(F, A);
    return s;
}

Matrix coordinates_in_basis(const FieldSpec& F, const Matrix& B, const Matrix& V) {
    auto s = solve_all(F, transpose(B), transpose(V));
    if (!s) throw Error("coordinates_in_basis: row outside span");
    return transpose(s->particular);
}

Matrix quotient_map(const FieldSpec& F, const Subspace& W) {
    int n = W.ambient;
    int r = W.dim();
    Echelon e = rref(F, W.basis);
    std::vector<char> is_pivot(n, 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    // Class of e_c: eliminate pivot coordinates with W's rows, keep free ones.
    // e_{pivot i} reduces to -(free part of row i); e_{free} stays put.
    Matrix Q(n - r, n);
    for (int k = 0; k < n - r; ++k) Q.at(k, free_cols[k]) = 1;
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < n - r; ++k)
            Q.at(k, e.pivots[i]) = F.neg(e.m.at(i, free_cols[k]));
    return Q;
}

} // namespace pmd
