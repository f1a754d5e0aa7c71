#pragma once

#include "pmd/linalg.hpp"
#include "pmd/poset.hpp"

namespace pmd {

// A pointwise finite-dimensional representation of a finite poset: a vector
// space dimension per element and one matrix per cover arrow. Maps along
// longer relations are composites, well defined once validate() passes.
struct PersistenceModule {
    PosetPtr poset;
    FieldSpec field;
    std::vector<int> dims;    // dims[x] = dim at element x
    std::vector<Matrix> maps; // parallel to poset->covers; dims[dst] x dims[src]
};

int total_dim(const PersistenceModule& M);
PersistenceModule zero_module(const PosetPtr& P, const FieldSpec& F);

// Index of cover (s, d) in P.covers, -1 if absent.
int find_cover(const FinitePoset& P, int s, int d);

// Shape consistency (ShapeMismatch) and path independence: all composites
// between equal endpoints agree. The first disagreement is reported in the
// ValidationError message with both covers entering the merge point.
void validate(const PersistenceModule& M);

// Composite along a canonical cover path from a to b. Requires a <= b.
Matrix map_between(const PersistenceModule& M, int a, int b);

// Constant one-dimensional module supported on an interval carrier.
PersistenceModule interval_module(const PosetPtr& P, const std::vector<int>& carrier,
                                  const FieldSpec& F);

struct Morphism {
    PersistenceModule source, target;
    std::vector<Matrix> comps; // comps[x] is target.dims[x] x source.dims[x]
};

// Throws PosetMismatch / ShapeMismatch on malformed data, ValidationError when
// some cover square fails to commute.
void check_morphism(const Morphism& f);
bool morphism_commutes(const Morphism& f);
Morphism identity_morphism(const PersistenceModule& M);
Morphism zero_morphism(const PersistenceModule& M, const PersistenceModule& N);
Morphism compose(const Morphism& g, const Morphism& f); // g after f
bool is_mono(const Morphism& f); // pointwise injective
bool is_epi(const Morphism& f);  // pointwise surjective
bool is_iso(const Morphism& f);
Morphism invert_iso(const Morphism& f); // throws Error when not an isomorphism

struct DirectSum {
    PersistenceModule sum;
    Morphism embed_first, embed_second;   // M -> M(+)N, N -> M(+)N
    Morphism project_first, project_second;
};
DirectSum direct_sum(const PersistenceModule& M, const PersistenceModule& N);

// Module induced on a subset of elements. The subset keeps its induced order;
// covers are recomputed (transitive reduction) and maps across removed
// elements are composites. A totally ordered subset comes back on a Chain.
struct RestrictedModule {
    PersistenceModule module;
    std::vector<int> elements; // elements[i] = id in the original poset
};
RestrictedModule restrict_module(const PersistenceModule& M, const std::vector<int>& subset);

// Module over the opposite poset with every cover map transposed. Involutive
// on the nose: dualize(dualize(M)) is entrywise equal to M.
PersistenceModule dualize(const PersistenceModule& M);

// One subspace of M_x per element x, required to be carried into each other by
// the structure maps.
struct SubmoduleFamily {
    std::vector<Subspace> spaces;
};
bool is_submodule_family(const PersistenceModule& M, const SubmoduleFamily& fam);

// The four canonical families on a grid: images of the maps entering from the
// left/bottom edges and kernels of the maps leaving to the right/top edges.
struct DirectionalSubmodules {
    SubmoduleFamily im_left, im_down, ker_right, ker_up;
};
DirectionalSubmodules directional_submodules(const PersistenceModule& M);

// Entrywise equality over equal posets (covers compared as sorted pairs).
bool modules_equal(const PersistenceModule& M, const PersistenceModule& N);

} // namespace pmd
