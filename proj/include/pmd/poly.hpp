#pragma once

#include <vector>

#include "pmd/matrix.hpp"

namespace pmd {

// Dense polynomial over F_p, coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& f); // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_mul(const FieldSpec& F, const Poly& f, const Poly& g);
Poly poly_mod(const FieldSpec& F, Poly f, const Poly& g);
Poly poly_gcd(const FieldSpec& F, Poly f, Poly g);      // monic gcd
Poly poly_powmod(const FieldSpec& F, Poly b, std::uint64_t e, const Poly& m);
std::uint32_t poly_eval(const FieldSpec& F, const Poly& f, std::uint32_t x);
// Exact division by a monic linear factor (x - r).
Poly poly_divide_linear(const FieldSpec& F, const Poly& f, std::uint32_t r);

// Characteristic polynomial det(xI - A) by the Berkowitz algorithm
// (division-free, valid over any F_p). A square.
Poly charpoly(const FieldSpec& F, const Matrix& A);

// All roots of f in F_p, ascending, without multiplicity.
std::vector<std::uint32_t> roots_in_field(const FieldSpec& F, const Poly& f);

} // namespace pmd
