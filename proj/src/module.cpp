#include "pmd/module.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace pmd {

int total_dim(const PersistenceModule& M) {
    int t = 0;
    for (int d : M.dims) t += d;
    return t;
}

PersistenceModule zero_module(const PosetPtr& P, const FieldSpec& F) {
    PersistenceModule M{P, F, std::vector<int>(P->size, 0), {}};
    M.maps.assign(P->covers.size(), Matrix(0, 0));
    return M;
}

int find_cover(const FinitePoset& P, int s, int d) {
    auto it = std::lower_bound(P.covers.begin(), P.covers.end(), std::make_pair(s, d));
    if (it != P.covers.end() && *it == std::make_pair(s, d))
        return static_cast<int>(it - P.covers.begin());
    return -1;
}

static std::string cover_str(std::pair<int, int> c) {
    return std::to_string(c.first) + "->" + std::to_string(c.second);
}

void validate(const PersistenceModule& M) {
    const FinitePoset& P = *M.poset;
    if (static_cast<int>(M.dims.size()) != P.size)
        throw ShapeMismatch("module has " + std::to_string(M.dims.size()) +
                            " dimensions for a poset of size " + std::to_string(P.size));
    for (int d : M.dims)
        if (d < 0) throw ShapeMismatch("negative pointwise dimension");
    if (M.maps.size() != P.covers.size())
        throw ShapeMismatch("module needs one matrix per cover: got " +
                            std::to_string(M.maps.size()) + " of " +
                            std::to_string(P.covers.size()));
    for (size_t k = 0; k < M.maps.size(); ++k) {
        auto [s, d] = P.covers[k];
        const Matrix& A = M.maps[k];
        if (A.rows != M.dims[d] || A.cols != M.dims[s])
            throw ShapeMismatch("map for cover " + cover_str(P.covers[k]) + " is " +
                                std::to_string(A.rows) + "x" + std::to_string(A.cols) +
                                ", want " + std::to_string(M.dims[d]) + "x" +
                                std::to_string(M.dims[s]));
        for (auto v : A.a)
            if (v >= M.field.p)
                throw ValidationError("entry in map for cover " + cover_str(P.covers[k]) +
                                      " is not reduced modulo " + std::to_string(M.field.p));
    }
    // Merge composites from every start element in a linear extension. Any two
    // paths with equal endpoints disagree iff some merge here disagrees: take a
    // minimal disagreement point, its two last covers are caught below.
    auto order = topo_order(P);
    for (int s = 0; s < P.size; ++s) {
        std::vector<std::optional<Matrix>> comp(P.size);
        std::vector<int> via(P.size, -1);
        comp[s] = Matrix::identity(M.dims[s]);
        for (int x : order) {
            if (!comp[x]) continue;
            for (size_t k = 0; k < P.covers.size(); ++k) {
                if (P.covers[k].first != x) continue;
                int y = P.covers[k].second;
                Matrix cand = mat_mul(M.field, M.maps[k], *comp[x]);
                if (!comp[y]) {
                    comp[y] = std::move(cand);
                    via[y] = static_cast<int>(k);
                } else if (cand != *comp[y]) {
                    throw ValidationError(
                        "path independence fails from element " + std::to_string(s) +
                        " to element " + std::to_string(y) + ": composite through cover " +
                        cover_str(P.covers[via[y]]) + " differs from composite through cover " +
                        cover_str(P.covers[k]));
                }
            }
        }
    }
}

Matrix map_between(const PersistenceModule& M, int a, int b) {
    const FinitePoset& P = *M.poset;
    if (!P.leq(a, b))
        throw ShapeMismatch("map_between needs related elements, got " + std::to_string(a) +
                            " and " + std::to_string(b));
    Matrix acc = Matrix::identity(M.dims[a]);
    int x = a;
    while (x != b) {
        // First cover leaving x that stays under b; one exists along any
        // maximal chain from x to b.
        for (size_t k = 0; k < P.covers.size(); ++k) {
            if (P.covers[k].first != x || !P.leq(P.covers[k].second, b)) continue;
            acc = mat_mul(M.field, M.maps[k], acc);
            x = P.covers[k].second;
            break;
        }
    }
    return acc;
}

PersistenceModule interval_module(const PosetPtr& P, const std::vector<int>& carrier,
                                  const FieldSpec& F) {
    for (int x : carrier)
        if (x < 0 || x >= P->size)
            throw CarrierNotSubset("interval carrier element " + std::to_string(x) +
                                   " outside the poset");
    if (!is_interval(*P, carrier))
        throw NotAnInterval("carrier is not convex and connected");
    PersistenceModule M{P, F, std::vector<int>(P->size, 0), {}};
    for (int x : carrier) M.dims[x] = 1;
    for (auto [s, d] : P->covers) {
        Matrix A(M.dims[d], M.dims[s]);
        if (M.dims[s] == 1 && M.dims[d] == 1) A.at(0, 0) = 1;
        M.maps.push_back(std::move(A));
    }
    return M;
}

void check_morphism(const Morphism& f) {
    const PersistenceModule& M = f.source;
    const PersistenceModule& N = f.target;
    if (!poset_equal(*M.poset, *N.poset) || M.field.p != N.field.p)
        throw PosetMismatch("morphism endpoints live over different posets or fields");
    if (f.comps.size() != M.dims.size())
        throw ShapeMismatch("morphism needs one matrix per element");
    for (size_t x = 0; x < f.comps.size(); ++x)
        if (f.comps[x].rows != N.dims[x] || f.comps[x].cols != M.dims[x])
            throw ShapeMismatch("morphism component at element " + std::to_string(x) +
                                " has the wrong shape");
    for (size_t k = 0; k < M.poset->covers.size(); ++k) {
        auto [s, d] = M.poset->covers[k];
        Matrix lhs = mat_mul(M.field, f.comps[d], M.maps[k]);
        Matrix rhs = mat_mul(M.field, N.maps[k], f.comps[s]);
        if (lhs != rhs)
            throw ValidationError("morphism fails to commute over cover " +
                                  cover_str(M.poset->covers[k]));
    }
}

bool morphism_commutes(const Morphism& f) {
    try {
        check_morphism(f);
    } catch (const ValidationError&) {
        return false;
    }
    return true;
}

Morphism identity_morphism(const PersistenceModule& M) {
    Morphism f{M, M, {}};
    for (int d : M.dims) f.comps.push_back(Matrix::identity(d));
    return f;
}

Morphism zero_morphism(const PersistenceModule& M, const PersistenceModule& N) {
    Morphism f{M, N, {}};
    for (size_t x = 0; x < M.dims.size(); ++x)
        f.comps.push_back(Matrix(N.dims[x], M.dims[x]));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h{f.source, g.target, {}};
    for (size_t x = 0; x < f.comps.size(); ++x)
        h.comps.push_back(mat_mul(f.source.field, g.comps[x], f.comps[x]));
    return h;
}

bool is_mono(const Morphism& f) {
    for (size_t x = 0; x < f.comps.size(); ++x)
        if (rank(f.source.field, f.comps[x]) != f.source.dims[x]) return false;
    return true;
}

bool is_epi(const Morphism& f) {
    for (size_t x = 0; x < f.comps.size(); ++x)
        if (rank(f.source.field, f.comps[x]) != f.target.dims[x]) return false;
    return true;
}

bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

Morphism invert_iso(const Morphism& f) {
    Morphism g{f.target, f.source, {}};
    for (const Matrix& c : f.comps) {
        if (c.rows != c.cols) throw Error("cannot invert a morphism between unequal dims");
        g.comps.push_back(mat_inverse(f.source.field, c));
    }
    return g;
}

DirectSum direct_sum(const PersistenceModule& M, const PersistenceModule& N) {
    if (!poset_equal(*M.poset, *N.poset) || M.field.p != N.field.p)
        throw PosetMismatch("direct sum needs matching poset and field");
    PersistenceModule S{M.poset, M.field, {}, {}};
    for (size_t x = 0; x < M.dims.size(); ++x) S.dims.push_back(M.dims[x] + N.dims[x]);
    for (size_t k = 0; k < M.maps.size(); ++k)
        S.maps.push_back(block_diag(M.maps[k], N.maps[k]));
    DirectSum out{S, {M, S, {}}, {N, S, {}}, {S, M, {}}, {S, N, {}}};
    for (size_t x = 0; x < M.dims.size(); ++x) {
        int a = M.dims[x], b = N.dims[x];
        out.embed_first.comps.push_back(vstack(Matrix::identity(a), Matrix(b, a)));
        out.embed_second.comps.push_back(vstack(Matrix(a, b), Matrix::identity(b)));
        out.project_first.comps.push_back(hstack(Matrix::identity(a), Matrix(a, b)));
        out.project_second.comps.push_back(hstack(Matrix(b, a), Matrix::identity(b)));
    }
    return out;
}

RestrictedModule restrict_module(const PersistenceModule& M, const std::vector<int>& subset) {
    const FinitePoset& P = *M.poset;
    std::vector<int> elems(subset);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int x : elems)
        if (x < 0 || x >= P.size)
            throw CarrierNotSubset("restriction element " + std::to_string(x) +
                                   " outside the poset");
    int k = static_cast<int>(elems.size());
    bool total = true;
    for (int i = 0; i < k && total; ++i)
        for (int j = 0; j < k && total; ++j)
            if (!P.leq(elems[i], elems[j]) && !P.leq(elems[j], elems[i])) total = false;
    // Reorder by the induced order: ascending along a chain, otherwise a
    // deterministic linear extension.
    std::vector<std::pair<int, int>> key;
    for (int x : elems) {
        int below = 0;
        for (int q : elems)
            if (q != x && P.leq(q, x)) ++below;
        key.emplace_back(below, x);
    }
    std::sort(key.begin(), key.end());
    for (int i = 0; i < k; ++i) elems[i] = key[i].second;

    PosetPtr Q;
    if (total && k >= 1) {
        Q = build_chain(k);
    } else {
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || !P.leq(elems[i], elems[j])) continue;
                bool minimal = true;
                for (int z = 0; z < k && minimal; ++z)
                    if (z != i && z != j && P.leq(elems[i], elems[z]) &&
                        P.leq(elems[z], elems[j]))
                        minimal = false;
                if (minimal) covers.emplace_back(i, j);
            }
        Q = build_custom(k, covers);
    }
    RestrictedModule out{{Q, M.field, {}, {}}, elems};
    for (int x : elems) out.module.dims.push_back(M.dims[x]);
    for (auto [s, d] : Q->covers)
        out.module.maps.push_back(map_between(M, elems[s], elems[d]));
    return out;
}

PersistenceModule dualize(const PersistenceModule& M) {
    PosetPtr op = build_opposite(M.poset);
    PersistenceModule D{op, M.field, M.dims, {}};
    for (auto [s, d] : op->covers) {
        int k = find_cover(*M.poset, d, s);
        D.maps.push_back(transpose(M.maps[k]));
    }
    return D;
}

bool is_submodule_family(const PersistenceModule& M, const SubmoduleFamily& fam) {
    if (fam.spaces.size() != M.dims.size())
        throw ShapeMismatch("family needs one subspace per element");
    for (size_t x = 0; x < fam.spaces.size(); ++x)
        if (fam.spaces[x].ambient != M.dims[x])
            throw ShapeMismatch("family subspace at element " + std::to_string(x) +
                                " has the wrong ambient dimension");
    for (size_t k = 0; k < M.maps.size(); ++k) {
        auto [s, d] = M.poset->covers[k];
        // Images of basis vectors must land in the target subspace.
        Matrix img = transpose(mat_mul(M.field, M.maps[k], transpose(fam.spaces[s].basis)));
        for (int r = 0; r < img.rows; ++r) {
            Matrix row(1, img.cols);
            for (int c = 0; c < img.cols; ++c) row.at(0, c) = img.at(r, c);
            if (!vector_in_subspace(M.field, fam.spaces[d], row)) return false;
        }
    }
    return true;
}

DirectionalSubmodules directional_submodules(const PersistenceModule& M) {
    const FinitePoset& P = *M.poset;
    if (P.kind != ShapeKind::Grid)
        throw NotAGrid("directional submodules need a Grid poset");
    int m = P.m, n = P.n;
    DirectionalSubmodules out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int x = i * n + j;
            out.im_left.spaces.push_back(image_basis(M.field, map_between(M, j, x)));
            out.im_down.spaces.push_back(image_basis(M.field, map_between(M, i * n, x)));
            out.ker_right.spaces.push_back(
                kernel_basis(M.field, map_between(M, x, (m - 1) * n + j)));
            out.ker_up.spaces.push_back(
                kernel_basis(M.field, map_between(M, x, i * n + (n - 1))));
        }
    return out;
}

bool modules_equal(const PersistenceModule& M, const PersistenceModule& N) {
    return poset_equal(*M.poset, *N.poset) && M.field.p == N.field.p && M.dims == N.dims &&
           M.maps == N.maps;
}

} // namespace pmd
