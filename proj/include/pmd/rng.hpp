#pragma once

#include <cstdint>
#include <random>

#include "pmd/matrix.hpp"

namespace pmd {

// Deterministic RNG for all randomized searches and generators. mt19937_64 output
// is fully specified by the standard; uniform_int_distribution is not, so ranges
// are taken by modular reduction (bias is negligible against 2^64).
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t raw() { return gen(); }
    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
    std::uint32_t field_elt(const FieldSpec& F) {
        return static_cast<std::uint32_t>(below(F.p));
    }
    std::uint32_t nonzero_field_elt(const FieldSpec& F) {
        return static_cast<std::uint32_t>(1 + below(F.p - 1));
    }

    Matrix matrix(const FieldSpec& F, int r, int c) {
        Matrix m(r, c);
        for (auto& v : m.a) v = field_elt(F);
        return m;
    }
    Matrix invertible_matrix(const FieldSpec& F, int n) {
        if (n == 0) return Matrix(0, 0);
        for (;;) {
            Matrix m = matrix(F, n, n);
            if (is_invertible(F, m)) return m;
        }
    }
};

} // namespace pmd
