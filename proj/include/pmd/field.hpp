#pragma once

#include <cstdint>

#include "pmd/errors.hpp"

namespace pmd {

bool is_prime(std::uint64_t n);

// Default characteristic: PMD_FIELD_CHAR env var if set, else 32003.
std::uint32_t default_field_char();

// Arithmetic in F_p. Residues live in [0, p); p < 2^31 so products fit in uint64.
struct FieldSpec {
    std::uint32_t p;

    explicit FieldSpec(std::uint32_t p_ = 32003) : p(p_) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw ParseError("field_char must be a prime in [2, 2^31): " + std::to_string(p_));
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const { return pow(a, p - 2); }

    // Reduce an arbitrary signed integer into [0, p).
    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
};

} // namespace pmd
