#include "pmd/decomp.hpp"

#include <algorithm>

#include "pmd/poly.hpp"
#include "pmd/rng.hpp"

namespace pmd {

namespace {

Morphism morphism_add(const Morphism& f, const Morphism& g) {
    Morphism h = f;
    for (size_t x = 0; x < h.comps.size(); ++x)
        h.comps[x] = mat_add(f.source.field, h.comps[x], g.comps[x]);
    return h;
}

Morphism morphism_scale(std::uint32_t c, const Morphism& f) {
    Morphism h = f;
    for (auto& m : h.comps) m = mat_scale(f.source.field, c, m);
    return h;
}

Morphism shift_by(const Morphism& theta, std::uint32_t lambda) {
    Morphism h = theta;
    const FieldSpec& F = theta.source.field;
    for (size_t x = 0; x < h.comps.size(); ++x)
        h.comps[x] = mat_sub(F, h.comps[x],
                             mat_scale(F, lambda, Matrix::identity(h.comps[x].rows)));
    return h;
}

bool morphism_is_zero(const Morphism& f) {
    for (const auto& c : f.comps)
        if (!c.is_zero()) return false;
    return true;
}

// Coordinates of M_a applied to the span of rows(Bs) in the row basis Bd:
// the induced matrix of a structure map on a stable subspace family.
Matrix induced_map(const FieldSpec& F, const Matrix& Ma, const Subspace& Bs,
                   const Subspace& Bd) {
    Matrix images = transpose(mat_mul(F, Ma, transpose(Bs.basis)));
    return transpose(coordinates_in_basis(F, Bd.basis, images));
}

Poly morphism_charpoly(const Morphism& theta) {
    const FieldSpec& F = theta.source.field;
    Poly f{1};
    for (const Matrix& c : theta.comps) f = poly_mul(F, f, charpoly(F, c));
    return f;
}

} // namespace

FittingSplit fitting_split(const PersistenceModule& M, const Morphism& theta) {
    const FieldSpec& F = M.field;
    if (!modules_equal(theta.source, M) || !modules_equal(theta.target, M))
        throw NotEndomorphism("fitting split needs an endomorphism of the given module");
    try {
        check_morphism(theta);
    } catch (const Error&) {
        throw NotEndomorphism("fitting split needs a commuting endomorphism");
    }
    FittingSplit out;
    int n = 0;
    for (int d : M.dims) n = std::max(n, d);
    out.exponent = n;
    for (size_t x = 0; x < M.dims.size(); ++x) {
        Matrix pw = mat_pow(F, theta.comps[x], n);
        out.image_part.spaces.push_back(image_basis(F, pw));
        out.kernel_part.spaces.push_back(kernel_basis(F, pw));
        // Stabilization at n = max dim makes the two parts complementary.
        auto [meet, join] = subspace_meet_join(F, out.image_part.spaces.back(),
                                               out.kernel_part.spaces.back());
        if (meet.dim() != 0 || join.dim() != M.dims[x])
            throw Error("fitting split failed to stabilize");
    }
    out.prime = PersistenceModule{M.poset, F, {}, {}};
    out.double_prime = PersistenceModule{M.poset, F, {}, {}};
    for (size_t x = 0; x < M.dims.size(); ++x) {
        out.prime.dims.push_back(out.image_part.spaces[x].dim());
        out.double_prime.dims.push_back(out.kernel_part.spaces[x].dim());
    }
    for (size_t k = 0; k < M.maps.size(); ++k) {
        auto [s, d] = M.poset->covers[k];
        out.prime.maps.push_back(
            induced_map(F, M.maps[k], out.image_part.spaces[s], out.image_part.spaces[d]));
        out.double_prime.maps.push_back(
            induced_map(F, M.maps[k], out.kernel_part.spaces[s], out.kernel_part.spaces[d]));
    }
    out.embed_prime = Morphism{out.prime, M, {}};
    out.embed_double = Morphism{out.double_prime, M, {}};
    out.project_prime = Morphism{M, out.prime, {}};
    out.project_double = Morphism{M, out.double_prime, {}};
    for (size_t x = 0; x < M.dims.size(); ++x) {
        Matrix Ei = transpose(out.image_part.spaces[x].basis);
        Matrix Ek = transpose(out.kernel_part.spaces[x].basis);
        out.embed_prime.comps.push_back(Ei);
        out.embed_double.comps.push_back(Ek);
        // Inverse of the combined basis splits ambient coordinates into the
        // two blocks of part coordinates.
        Matrix inv = mat_inverse(F, hstack(Ei, Ek));
        Matrix pi(out.prime.dims[x], M.dims[x]);
        Matrix pk(out.double_prime.dims[x], M.dims[x]);
        for (int r = 0; r < pi.rows; ++r)
            for (int c = 0; c < pi.cols; ++c) pi.at(r, c) = inv.at(r, c);
        for (int r = 0; r < pk.rows; ++r)
            for (int c = 0; c < pk.cols; ++c) pk.at(r, c) = inv.at(pi.rows + r, c);
        out.project_prime.comps.push_back(pi);
        out.project_double.comps.push_back(pk);
    }
    return out;
}

namespace {

void decompose_into(const PersistenceModule& N, const Morphism& embed, const Morphism& project,
                    Rng& rng, std::vector<Summand>& out);

// Attempt one splitting endomorphism; recurse and report success when the
// split is nontrivial.
bool try_split(const PersistenceModule& N, const Morphism& embed, const Morphism& project,
               const Morphism& psi, Rng& rng, std::vector<Summand>& out) {
    if (morphism_is_zero(psi)) return false;
    FittingSplit fs = fitting_split(N, psi);
    if (total_dim(fs.prime) == 0 || total_dim(fs.double_prime) == 0) return false;
    decompose_into(fs.prime, compose(embed, fs.embed_prime),
                   compose(fs.project_prime, project), rng, out);
    decompose_into(fs.double_prime, compose(embed, fs.embed_double),
                   compose(fs.project_double, project), rng, out);
    return true;
}

void decompose_into(const PersistenceModule& N, const Morphism& embed, const Morphism& project,
                    Rng& rng, std::vector<Summand>& out) {
    if (total_dim(N) == 0) return;
    std::vector<Morphism> ends = end_basis(N);
    if (ends.size() == 1) {
        out.push_back(Summand{N, embed, project, Certificate{CertificateKind::EndDimOne, 0}});
        return;
    }
    for (const Morphism& theta : ends)
        for (std::uint32_t lambda : roots_in_field(N.field, morphism_charpoly(theta)))
            if (try_split(N, embed, project, shift_by(theta, lambda), rng, out)) return;
    const int max_trials = 32;
    for (int trial = 0; trial < max_trials; ++trial) {
        Morphism theta = zero_morphism(N, N);
        for (const Morphism& b : ends)
            theta = morphism_add(theta, morphism_scale(rng.field_elt(N.field), b));
        for (std::uint32_t lambda : roots_in_field(N.field, morphism_charpoly(theta)))
            if (try_split(N, embed, project, shift_by(theta, lambda), rng, out)) return;
    }
    out.push_back(
        Summand{N, embed, project, Certificate{CertificateKind::HeuristicExhausted, max_trials}});
}

} // namespace

Decomposition decompose(const PersistenceModule& M, std::uint64_t seed) {
    validate(M);
    Decomposition dec;
    dec.original = M;
    Rng rng(seed);
    decompose_into(M, identity_morphism(M), identity_morphism(M), rng, dec.summands);
    return dec;
}

namespace {

std::string dims_str(const std::vector<int>& dims) {
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

} // namespace

KrsResult krs_match(const Decomposition& A, const Decomposition& B, std::uint64_t seed) {
    // Group both summand lists into isomorphism classes. Summands are
    // indecomposable, so the direct witness search settles each pair.
    struct Class {
        PersistenceModule rep;
        std::vector<std::pair<int, Morphism>> in_a, in_b; // index, witness rep -> summand
    };
    std::vector<Class> classes;
    auto classify = [&](const PersistenceModule& S, int index, bool in_a) {
        for (size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].rep.dims != S.dims) continue;
            auto w = find_iso(classes[c].rep, S, seed + 7919 * c);
            if (!w) continue;
            (in_a ? classes[c].in_a : classes[c].in_b).emplace_back(index, *w);
            return;
        }
        classes.push_back(Class{S, {}, {}});
        (in_a ? classes.back().in_a : classes.back().in_b)
            .emplace_back(index, identity_morphism(S));
    };
    for (size_t i = 0; i < A.summands.size(); ++i)
        classify(A.summands[i].module, static_cast<int>(i), true);
    for (size_t j = 0; j < B.summands.size(); ++j)
        classify(B.summands[j].module, static_cast<int>(j), false);

    KrsResult res;
    for (const Class& c : classes) {
        if (c.in_a.size() != c.in_b.size()) {
            res.matched = false;
            res.pairs.clear();
            res.mismatch = "summand class with pointwise dims " + dims_str(c.rep.dims) +
                           " has multiplicity " + std::to_string(c.in_a.size()) +
                           " on the left and " + std::to_string(c.in_b.size()) +
                           " on the right";
            return res;
        }
        for (size_t t = 0; t < c.in_a.size(); ++t) {
            KrsPair pair;
            pair.a = c.in_a[t].first;
            pair.b = c.in_b[t].first;
            pair.witness = compose(c.in_b[t].second, invert_iso(c.in_a[t].second));
            res.pairs.push_back(pair);
        }
    }
    res.matched = true;
    std::sort(res.pairs.begin(), res.pairs.end(),
              [](const KrsPair& p, const KrsPair& q) { return p.a < q.a; });
    return res;
}

IsoCheck are_isomorphic(const PersistenceModule& M, const PersistenceModule& N,
                        std::uint64_t seed) {
    if (!poset_equal(*M.poset, *N.poset) || M.field.p != N.field.p)
        throw PosetMismatch("isomorphism test needs matching poset and field");
    if (M.dims != N.dims) return IsoCheck{false, std::nullopt};
    if (auto w = find_iso(M, N, seed)) return IsoCheck{true, w};
    Decomposition dm = decompose(M, seed + 1);
    Decomposition dn = decompose(N, seed + 2);
    KrsResult match = krs_match(dm, dn, seed + 3);
    if (!match.matched) return IsoCheck{false, std::nullopt};
    // Assemble a global witness from the pairing: sum of embed_B o w o proj_A.
    Morphism w = zero_morphism(M, N);
    for (const KrsPair& pair : match.pairs) {
        Morphism leg = compose(dn.summands[pair.b].embedding,
                               compose(pair.witness, dm.summands[pair.a].projection));
        w = morphism_add(w, leg);
    }
    if (!is_iso(w)) throw Error("assembled witness is not invertible");
    return IsoCheck{true, w};
}

} // namespace pmd
