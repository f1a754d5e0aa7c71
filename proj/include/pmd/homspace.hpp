#pragma once

#include <cstdint>
#include <optional>

#include "pmd/module.hpp"

namespace pmd {

// Basis of Hom(M, N) as the kernel of the stacked commutation system
// N_a f_x = f_y M_a over all covers a: x -> y, one morphism per echelon basis
// row of the kernel. Throws PosetMismatch unless M, N share poset and field.
std::vector<Morphism> hom_basis(const PersistenceModule& M, const PersistenceModule& N);
std::vector<Morphism> end_basis(const PersistenceModule& M);

// A left inverse of f (g with g composed after f the identity), if one exists.
// The source of f must be an interval module (NotAnInterval) and f must be
// pointwise injective (NotMono).
std::optional<Morphism> retraction(const Morphism& f);

// Search Hom(M, N) for an isomorphism: try every basis morphism, then random
// linear combinations drawn from the seed. Equal pointwise dimensions are
// required for a hit; none found gives nullopt (which does not certify
// non-isomorphism on its own).
std::optional<Morphism> find_iso(const PersistenceModule& M, const PersistenceModule& N,
                                 std::uint64_t seed);

} // namespace pmd
