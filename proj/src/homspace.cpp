#include "pmd/homspace.hpp"

#include "pmd/rng.hpp"

namespace pmd {

namespace {

// Flattened variable layout for a morphism M -> N: component matrices in
// element order, row-major inside each component.
struct HomVars {
    std::vector<int> off;
    int total = 0;
};

HomVars hom_vars(const PersistenceModule& M, const PersistenceModule& N) {
    HomVars v;
    for (size_t x = 0; x < M.dims.size(); ++x) {
        v.off.push_back(v.total);
        v.total += N.dims[x] * M.dims[x];
    }
    return v;
}

int var_of(const HomVars& v, const PersistenceModule& M, int x, int r, int c) {
    return v.off[x] + r * M.dims[x] + c;
}

// One row block per cover a: x -> y, encoding N_a f_x - f_y M_a = 0.
Matrix commutation_matrix(const PersistenceModule& M, const PersistenceModule& N,
                          const HomVars& v) {
    const FieldSpec& F = M.field;
    int rows = 0;
    for (auto [s, d] : M.poset->covers) rows += N.dims[d] * M.dims[s];
    Matrix A(rows, v.total);
    int r0 = 0;
    for (size_t k = 0; k < M.poset->covers.size(); ++k) {
        auto [s, d] = M.poset->covers[k];
        for (int i = 0; i < N.dims[d]; ++i)
            for (int j = 0; j < M.dims[s]; ++j) {
                int row = r0 + i * M.dims[s] + j;
                for (int t = 0; t < N.dims[s]; ++t)
                    A.at(row, var_of(v, M, s, t, j)) =
                        F.add(A.at(row, var_of(v, M, s, t, j)), N.maps[k].at(i, t));
                for (int u = 0; u < M.dims[d]; ++u)
                    A.at(row, var_of(v, M, d, i, u)) =
                        F.sub(A.at(row, var_of(v, M, d, i, u)), M.maps[k].at(u, j));
            }
        r0 += N.dims[d] * M.dims[s];
    }
    return A;
}

Morphism unflatten(const PersistenceModule& M, const PersistenceModule& N, const HomVars& v,
                   const Matrix& flat, int row) {
    Morphism f{M, N, {}};
    for (size_t x = 0; x < M.dims.size(); ++x) {
        Matrix c(N.dims[x], M.dims[x]);
        for (size_t i = 0; i < c.a.size(); ++i)
            c.a[i] = flat.at(row, v.off[x] + static_cast<int>(i));
        f.comps.push_back(std::move(c));
    }
    return f;
}

} // namespace

std::vector<Morphism> hom_basis(const PersistenceModule& M, const PersistenceModule& N) {
    if (!poset_equal(*M.poset, *N.poset) || M.field.p != N.field.p)
        throw PosetMismatch("hom space needs matching poset and field");
    HomVars v = hom_vars(M, N);
    Subspace ker = kernel_basis(M.field, commutation_matrix(M, N, v));
    std::vector<Morphism> basis;
    for (int r = 0; r < ker.dim(); ++r) basis.push_back(unflatten(M, N, v, ker.basis, r));
    return basis;
}

std::vector<Morphism> end_basis(const PersistenceModule& M) { return hom_basis(M, M); }

std::optional<Morphism> retraction(const Morphism& f) {
    check_morphism(f);
    const PersistenceModule& I = f.source;
    const PersistenceModule& M = f.target;
    const FieldSpec& F = I.field;
    for (int d : I.dims)
        if (d > 1) throw NotAnInterval("retraction source must be an interval module");
    for (size_t k = 0; k < I.maps.size(); ++k) {
        auto [s, d] = I.poset->covers[k];
        if (I.dims[s] == 1 && I.dims[d] == 1 && !I.maps[k].is_identity())
            throw NotAnInterval("retraction source must be an interval module");
    }
    {
        std::vector<int> carrier;
        for (size_t x = 0; x < I.dims.size(); ++x)
            if (I.dims[x] == 1) carrier.push_back(static_cast<int>(x));
        if (!is_interval(*I.poset, carrier))
            throw NotAnInterval("retraction source must be an interval module");
    }
    if (!is_mono(f)) throw NotMono("retraction needs a pointwise injective morphism");

    // Solve the commutation system for g: M -> I together with g_x f_x = 1 at
    // every carrier point.
    HomVars v = hom_vars(M, I);
    Matrix A = commutation_matrix(M, I, v);
    Matrix B(A.rows, 1);
    for (size_t x = 0; x < I.dims.size(); ++x) {
        if (I.dims[x] != 1) continue;
        Matrix row(1, v.total), one(1, 1);
        for (int u = 0; u < M.dims[x]; ++u)
            row.at(0, var_of(v, M, static_cast<int>(x), 0, u)) = f.comps[x].at(u, 0);
        one.at(0, 0) = 1;
        A = vstack(A, row);
        B = vstack(B, one);
    }
    auto sol = solve_all(F, A, B);
    if (!sol) return std::nullopt;
    Matrix flat = transpose(sol->particular);
    return unflatten(M, I, v, flat, 0);
}

std::optional<Morphism> find_iso(const PersistenceModule& M, const PersistenceModule& N,
                                 std::uint64_t seed) {
    if (!poset_equal(*M.poset, *N.poset) || M.field.p != N.field.p)
        throw PosetMismatch("isomorphism search needs matching poset and field");
    if (M.dims != N.dims) return std::nullopt;
    std::vector<Morphism> basis = hom_basis(M, N);
    for (const Morphism& f : basis)
        if (is_iso(f)) return f;
    Rng rng(seed);
    for (int trial = 0; trial < 64 && !basis.empty(); ++trial) {
        Morphism f = zero_morphism(M, N);
        for (const Morphism& b : basis) {
            std::uint32_t c = rng.field_elt(M.field);
            for (size_t x = 0; x < f.comps.size(); ++x)
                f.comps[x] = mat_add(M.field, f.comps[x], mat_scale(M.field, c, b.comps[x]));
        }
        if (is_iso(f)) return f;
    }
    return std::nullopt;
}

} // namespace pmd
