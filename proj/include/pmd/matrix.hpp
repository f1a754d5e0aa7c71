#pragma once

#include <cstdint>
#include <vector>

#include "pmd/field.hpp"

namespace pmd {

// Dense row-major matrix over F_p. 0xN and Nx0 shapes are legal and represent
// maps to/from the zero space.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a; // size rows*cols

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    std::uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(int r, int c) { return Matrix(r, c); }

    bool is_zero() const {
        for (auto v : a)
            if (v) return false;
        return true;
    }
    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }
};

Matrix mat_mul(const FieldSpec& F, const Matrix& A, const Matrix& B);
Matrix mat_add(const FieldSpec& F, const Matrix& A, const Matrix& B);
Matrix mat_sub(const FieldSpec& F, const Matrix& A, const Matrix& B);
Matrix mat_scale(const FieldSpec& F, std::uint32_t c, const Matrix& A);
Matrix mat_neg(const FieldSpec& F, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix mat_pow(const FieldSpec& F, const Matrix& A, int e); // square A only

// Stack side by side / on top of each other.
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix block_diag(const Matrix& A, const Matrix& B);

// In-place Gauss-Jordan to reduced row echelon form.
struct Echelon {
    Matrix m;               // RREF, zero rows dropped
    std::vector<int> pivots; // pivot column per kept row, strictly increasing
    int rank = 0;
};
Echelon rref(const FieldSpec& F, Matrix A);

int rank(const FieldSpec& F, const Matrix& A);
bool is_invertible(const FieldSpec& F, const Matrix& A);
// Inverse of a square invertible matrix; throws Error if singular.
Matrix mat_inverse(const FieldSpec& F, const Matrix& A);

} // namespace pmd
