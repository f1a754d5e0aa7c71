#include "pmd/matrix.hpp"

#include <string>

namespace pmd {

static void require(bool ok, const char* what) {
    if (!ok) throw Error(std::string("matrix shape mismatch in ") + what);
}

Matrix mat_mul(const FieldSpec& F, const Matrix& A, const Matrix& B) {
    require(A.cols == B.rows, "mat_mul");
    Matrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            std::uint64_t aik = A.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < B.cols; ++j) {
                std::uint64_t v = C.at(i, j) + aik * B.at(k, j) % F.p;
                C.at(i, j) = static_cast<std::uint32_t>(v >= F.p ? v - F.p : v);
            }
        }
    return C;
}

Matrix mat_add(const FieldSpec& F, const Matrix& A, const Matrix& B) {
    require(A.rows == B.rows && A.cols == B.cols, "mat_add");
    Matrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
    return C;
}

Matrix mat_sub(const FieldSpec& F, const Matrix& A, const Matrix& B) {
    require(A.rows == B.rows && A.cols == B.cols, "mat_sub");
    Matrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
    return C;
}

Matrix mat_scale(const FieldSpec& F, std::uint32_t c, const Matrix& A) {
    Matrix C = A;
    for (auto& v : C.a) v = F.mul(c, v);
    return C;
}

Matrix mat_neg(const FieldSpec& F, const Matrix& A) {
    Matrix C = A;
    for (auto& v : C.a) v = F.neg(v);
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Matrix mat_pow(const FieldSpec& F, const Matrix& A, int e) {
    require(A.rows == A.cols, "mat_pow");
    Matrix r = Matrix::identity(A.rows);
    Matrix b = A;
    while (e > 0) {
        if (e & 1) r = mat_mul(F, r, b);
        e >>= 1;
        if (e) b = mat_mul(F, b, b);
    }
    return r;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
    require(A.rows == B.rows, "hstack");
    Matrix C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
    require(A.cols == B.cols, "vstack");
    Matrix C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows + B.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

Echelon rref(const FieldSpec& F, Matrix A) {
    Echelon e;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
        std::uint32_t inv = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(inv, A.at(r, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = A.at(i, c);
            if (!f) continue;
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    e.m = Matrix(r, A.cols);
    std::copy(A.a.begin(), A.a.begin() + static_cast<size_t>(r) * A.cols, e.m.a.begin());
    return e;
}

int rank(const FieldSpec& F, const Matrix& A) { return rref(F, A).rank; }

bool is_invertible(const FieldSpec& F, const Matrix& A) {
    return A.rows == A.cols && rank(F, A) == A.rows;
}

Matrix mat_inverse(const FieldSpec& F, const Matrix& A) {
    require(A.rows == A.cols, "mat_inverse");
    Echelon e = rref(F, hstack(A, Matrix::identity(A.rows)));
    if (e.rank != A.rows || (A.rows > 0 && e.pivots[A.rows - 1] >= A.rows))
        throw Error("mat_inverse: singular matrix");
    Matrix inv(A.rows, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j) inv.at(i, j) = e.m.at(i, A.rows + j);
    return inv;
}

} // namespace pmd
