#pragma once

#include "pmd/decomp.hpp"

namespace pmd {

struct Bar {
    std::vector<int> carrier; // sorted element ids
    int multiplicity = 0;
};
struct Barcode {
    std::vector<Bar> bars; // sorted by carrier
};

// Pointwise dimensions a barcode accounts for.
std::vector<int> barcode_dims(const Barcode& bc, int poset_size);

// Left-to-right sweep over a chain: keep a basis refining the images of all
// earlier points, close a bar whenever a vector's image becomes dependent,
// open bars on a canonical completion to a full basis. Independent of the
// generic decomposer on purpose; the two check each other.
Barcode barcode_chain(const PersistenceModule& M);

struct SquareReport {
    int a = 0, b = 0, c = 0, d = 0; // a -> b right, a -> c up, b,c -> d
    bool middle_exact = false;
    bool short_exact = false; // middle exact + mono into the middle + epi out
};
struct MiddleExactReport {
    bool ok = false;             // every unit square middle exact
    bool all_short_exact = false;
    int first_failure = -1;      // index into squares when !ok
    std::vector<SquareReport> squares;
};
// Exactness of 0 -> M_a -> M_b (+) M_c -> M_d at the middle term for every
// unit square of a Grid or TriangleRegion poset.
MiddleExactReport check_middle_exact(const PersistenceModule& M);

struct BlockEntry {
    std::vector<int> carrier;
    std::vector<BlockType> types;
    int multiplicity = 0;
};
struct BlockList {
    std::vector<BlockEntry> blocks; // sorted by carrier
};
std::vector<int> blocklist_dims(const BlockList& bl, int poset_size);

// Decompose a middle exact grid module and classify every summand as a block
// interval module. A summand that is not a block is a counterexample, thrown
// as NonBlockSummand; missing middle exactness throws NotMiddleExact.
BlockList block_decompose(const PersistenceModule& M, std::uint64_t seed);

// Same contract over a TriangleRegion: carriers classify as block-meet-region.
BlockList verify_triangle_blocks(const PersistenceModule& M, std::uint64_t seed);

// Extend a fence module to the whole window grid: kernels fill the region
// below the path, cokernels the region above, glued by the universal maps.
// The path must cross the window corner to corner.
PersistenceModule extend_zigzag(const PersistenceModule& M, const ZigzagPath& path);
PersistenceModule extend_zigzag(const PersistenceModule& M); // bounding window

// Read the fence values of a window-grid module back off along the path.
PersistenceModule restrict_to_fence(const PersistenceModule& E, const ZigzagPath& path);

// Interval barcode of a fence module, computed along two independent routes
// (direct decomposition; extension + block decomposition + trace on the
// fence). Disagreement throws RouteDisagreement.
Barcode zigzag_barcode(const PersistenceModule& M, std::uint64_t seed);

} // namespace pmd
