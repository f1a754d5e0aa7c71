#pragma once

#include <cstdint>
#include <string>

#include "pmd/homspace.hpp"

namespace pmd {

// Why a summand is believed indecomposable. A one-dimensional endomorphism
// algebra is k·id, hence local: a proof. Otherwise the splitting search ran
// out of attempts, which is only evidence.
enum class CertificateKind { EndDimOne, HeuristicExhausted };
struct Certificate {
    CertificateKind kind = CertificateKind::EndDimOne;
    int trials = 0; // random attempts spent when kind == HeuristicExhausted
};

struct Summand {
    PersistenceModule module;
    Morphism embedding;  // summand -> original
    Morphism projection; // original -> summand
    Certificate certificate;
};

struct Decomposition {
    PersistenceModule original;
    std::vector<Summand> summands;
};

// Fitting split along an endomorphism: eventual image and eventual kernel of
// theta, with the exponent pinned at max_x dim M_x.
struct FittingSplit {
    SubmoduleFamily image_part, kernel_part;
    PersistenceModule prime, double_prime;
    Morphism embed_prime, project_prime;
    Morphism embed_double, project_double;
    int exponent = 0;
};
FittingSplit fitting_split(const PersistenceModule& M, const Morphism& theta);

// Full decomposition into (heuristically) indecomposable summands with
// reassembly witnesses. Deterministic in (M, seed). The zero module yields an
// empty summand list.
Decomposition decompose(const PersistenceModule& M, std::uint64_t seed);

struct KrsPair {
    int a = 0, b = 0;
    Morphism witness; // summand a of A -> summand b of B
};
struct KrsResult {
    bool matched = false;
    std::vector<KrsPair> pairs;
    std::string mismatch; // first unmatched isomorphism class, with multiplicities
};
// Match the two summand lists up to isomorphism.
KrsResult krs_match(const Decomposition& A, const Decomposition& B, std::uint64_t seed);

struct IsoCheck {
    bool isomorphic = false;
    std::optional<Morphism> witness;
};
// Isomorphism test: pointwise dims, then direct search, then comparison of
// full decompositions (which also assembles a witness from the pairing).
IsoCheck are_isomorphic(const PersistenceModule& M, const PersistenceModule& N,
                        std::uint64_t seed);

} // namespace pmd
