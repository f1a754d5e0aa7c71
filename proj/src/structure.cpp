#include "pmd/structure.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pmd {

namespace {

std::string ids_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

const Matrix& cover_map(const PersistenceModule& M, int u, int v) {
    int k = find_cover(*M.poset, u, v);
    if (k < 0) throw Error("missing cover " + std::to_string(u) + "->" + std::to_string(v));
    return M.maps[k];
}

Matrix column_block(const Matrix& A, int from, int width) {
    Matrix out(A.rows, width);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < width; ++j) out.at(i, j) = A.at(i, from + j);
    return out;
}

} // namespace

std::vector<int> barcode_dims(const Barcode& bc, int poset_size) {
    std::vector<int> d(poset_size, 0);
    for (const Bar& b : bc.bars)
        for (int x : b.carrier) d[x] += b.multiplicity;
    return d;
}

std::vector<int> blocklist_dims(const BlockList& bl, int poset_size) {
    std::vector<int> d(poset_size, 0);
    for (const BlockEntry& b : bl.blocks)
        for (int x : b.carrier) d[x] += b.multiplicity;
    return d;
}

Barcode barcode_chain(const PersistenceModule& M) {
    if (M.poset->kind != ShapeKind::Chain)
        throw NotAChain("barcode_chain needs a Chain poset");
    const FieldSpec& F = M.field;
    const int n = M.poset->size;

    // One active bar per basis vector still alive; kept in birth order so the
    // oldest bar wins every dependence tie (elder rule).
    struct Active {
        int birth;
        Matrix vec; // column in the current space
    };
    std::vector<Active> active;
    std::map<std::pair<int, int>, int> closed; // (birth, death) -> count

    Matrix span_rows(0, M.dims[0]);
    Subspace span = Subspace::zero(M.dims[0]);
    for (int j = 0; j < M.dims[0]; ++j) {
        Matrix e(M.dims[0], 1);
        e.at(j, 0) = 1;
        active.push_back({0, e});
    }

    for (int x = 0; x + 1 < n; ++x) {
        const Matrix& A = cover_map(M, x, x + 1);
        std::vector<Active> next;
        span_rows = Matrix(0, M.dims[x + 1]);
        span = Subspace::zero(M.dims[x + 1]);
        for (const Active& act : active) {
            Matrix w = mat_mul(F, A, act.vec);
            Matrix row = transpose(w);
            if (vector_in_subspace(F, span, row)) {
                ++closed[{act.birth, x}];
            } else {
                span_rows = vstack(span_rows, row);
                span = row_space(F, span_rows);
                next.push_back({act.birth, std::move(w)});
            }
        }
        for (int j = 0; j < M.dims[x + 1]; ++j) {
            Matrix row(1, M.dims[x + 1]);
            row.at(0, j) = 1;
            if (vector_in_subspace(F, span, row)) continue;
            span_rows = vstack(span_rows, row);
            span = row_space(F, span_rows);
            next.push_back({x + 1, transpose(row)});
        }
        active = std::move(next);
    }
    for (const Active& act : active) ++closed[{act.birth, n - 1}];

    Barcode bc;
    for (const auto& [bd, count] : closed) {
        Bar bar;
        for (int x = bd.first; x <= bd.second; ++x) bar.carrier.push_back(x);
        bar.multiplicity = count;
        bc.bars.push_back(std::move(bar));
    }
    std::sort(bc.bars.begin(), bc.bars.end(),
              [](const Bar& p, const Bar& q) { return p.carrier < q.carrier; });
    return bc;
}

MiddleExactReport check_middle_exact(const PersistenceModule& M) {
    const FinitePoset& P = *M.poset;
    if (P.kind != ShapeKind::Grid && P.kind != ShapeKind::Triangle)
        throw NotGridLike("middle exactness is defined over Grid and TriangleRegion posets");
    const FieldSpec& F = M.field;

    MiddleExactReport rep;
    rep.ok = true;
    rep.all_short_exact = true;
    for (int i = 0; i + 1 < P.m; ++i) {
        for (int j = 0; j + 1 < P.n; ++j) {
            int a = P.coord_id(i, j);
            int b = P.coord_id(i + 1, j);
            int c = P.coord_id(i, j + 1);
            int d = P.coord_id(i + 1, j + 1);
            if (a < 0 || b < 0 || c < 0 || d < 0) continue;
            Matrix iota = vstack(cover_map(M, a, b), cover_map(M, a, c));
            Matrix pi = hstack(cover_map(M, b, d), mat_neg(F, cover_map(M, c, d)));
            SquareReport sq;
            sq.a = a;
            sq.b = b;
            sq.c = c;
            sq.d = d;
            sq.middle_exact = image_basis(F, iota) == kernel_basis(F, pi);
            sq.short_exact =
                sq.middle_exact && rank(F, iota) == M.dims[a] && rank(F, pi) == M.dims[d];
            if (!sq.middle_exact) {
                rep.ok = false;
                if (rep.first_failure < 0) rep.first_failure = (int)rep.squares.size();
            }
            if (!sq.short_exact) rep.all_short_exact = false;
            rep.squares.push_back(sq);
        }
    }
    return rep;
}

namespace {

void require_middle_exact(const PersistenceModule& M) {
    MiddleExactReport rep = check_middle_exact(M);
    if (rep.ok) return;
    const SquareReport& sq = rep.squares[rep.first_failure];
    throw NotMiddleExact("unit square at elements (" + std::to_string(sq.a) + ", " +
                         std::to_string(sq.b) + ", " + std::to_string(sq.c) + ", " +
                         std::to_string(sq.d) + ") is not exact in the middle");
}

BlockList blocks_from_summands(const PersistenceModule& M, const Decomposition& dec,
                               std::uint64_t seed) {
    std::map<std::vector<int>, int> counts;
    for (const Summand& s : dec.summands) {
        std::vector<int> support;
        bool thin = true;
        for (int x = 0; x < M.poset->size; ++x) {
            if (s.module.dims[x] > 0) support.push_back(x);
            if (s.module.dims[x] > 1) thin = false;
        }
        std::string label = "summand with support " + ids_to_string(support);
        if (!thin)
            throw NonBlockSummand(label + " has a point of dimension above one");
        if (!is_interval(*M.poset, support))
            throw NonBlockSummand(label + " is not supported on an interval");
        PersistenceModule ki = interval_module(M.poset, support, M.field);
        if (!are_isomorphic(s.module, ki, seed).isomorphic)
            throw NonBlockSummand(label + " is not isomorphic to the interval module");
        if (classify_block(support, *M.poset).empty())
            throw NonBlockSummand(label + " is an interval but not a block");
        ++counts[support];
    }
    BlockList bl;
    for (const auto& [carrier, mult] : counts) {
        BlockEntry e;
        e.carrier = carrier;
        e.types = classify_block(carrier, *M.poset);
        e.multiplicity = mult;
        bl.blocks.push_back(std::move(e));
    }
    return bl;
}

} // namespace

BlockList block_decompose(const PersistenceModule& M, std::uint64_t seed) {
    if (M.poset->kind != ShapeKind::Grid)
        throw NotAGrid("block_decompose needs a Grid poset");
    require_middle_exact(M);
    return blocks_from_summands(M, decompose(M, seed), seed);
}

BlockList verify_triangle_blocks(const PersistenceModule& M, std::uint64_t seed) {
    if (M.poset->kind != ShapeKind::Triangle)
        throw NotGridLike("verify_triangle_blocks needs a TriangleRegion poset");
    require_middle_exact(M);
    return blocks_from_summands(M, decompose(M, seed), seed);
}

PersistenceModule extend_zigzag(const PersistenceModule& M, const ZigzagPath& path) {
    if (M.poset->kind != ShapeKind::Zigzag)
        throw ShapeMismatch("extend_zigzag needs a module over a zigzag fence");
    if (path.steps_right != M.poset->zz_steps)
        throw ShapeMismatch("path steps do not match the fence of the module");
    path.validate();
    if (!path.crosses_corner_to_corner())
        throw PathDoesNotCrossWindow("extension needs a corner-to-corner path");

    const FieldSpec& F = M.field;
    const int H = path.y1 - path.y0 + 1;
    const int W = path.x1 - path.x0 + 1;
    PosetPtr G = build_grid(W, H);
    std::vector<RegionLabel> labels = region_split(path);
    std::vector<int> wid = fence_window_ids(path);

    std::vector<int> dims(G->size, 0);
    std::vector<Matrix> maps(G->covers.size());
    std::vector<char> assigned(G->covers.size(), 0);
    auto set_map = [&](int u, int v, Matrix A) {
        int k = find_cover(*G, u, v);
        if (k < 0 || assigned[k]) throw Error("extension cover bookkeeping failed");
        maps[k] = std::move(A);
        assigned[k] = 1;
    };
    // Unit square of a lower-left corner `a`, in window-grid ids.
    auto right_of = [&](int a) { return a + H; };
    auto up_of = [&](int a) { return a + 1; };

    // Path points carry the fence spaces; path covers carry the fence maps.
    for (size_t k = 0; k < wid.size(); ++k) dims[wid[k]] = M.dims[k];
    for (size_t st = 0; st < M.poset->zz_steps.size(); ++st) {
        if (M.poset->zz_steps[st])
            set_map(wid[st], wid[st + 1], M.maps[st]);
        else
            set_map(wid[st + 1], wid[st], M.maps[st]);
    }

    // Below the path the value at a is the kernel of the square above it, with
    // the two components of the kernel inclusion as outgoing maps. Squares
    // closer to the path are filled first.
    std::vector<int> lower, upper;
    for (int id = 0; id < G->size; ++id) {
        if (labels[id] == RegionLabel::RL) lower.push_back(id);
        if (labels[id] == RegionLabel::RU) upper.push_back(id);
    }
    auto coord_sum = [&](int id) { return id / H + id % H; };
    std::sort(lower.begin(), lower.end(), [&](int p, int q) {
        if (coord_sum(p) != coord_sum(q)) return coord_sum(p) > coord_sum(q);
        return p < q;
    });
    std::sort(upper.begin(), upper.end(), [&](int p, int q) {
        if (coord_sum(p) != coord_sum(q)) return coord_sum(p) < coord_sum(q);
        return p < q;
    });

    for (int a : lower) {
        int r = right_of(a), u = up_of(a), d = up_of(right_of(a));
        Matrix pi = hstack(maps[find_cover(*G, r, d)], mat_neg(F, maps[find_cover(*G, u, d)]));
        Subspace K = kernel_basis(F, pi);
        dims[a] = K.dim();
        set_map(a, r, transpose(column_block(K.basis, 0, dims[r])));
        set_map(a, u, transpose(column_block(K.basis, dims[r], dims[u])));
    }

    // Above the path the value at d is the cokernel of the square below it.
    // The signed split of the quotient map makes the new square exact by
    // construction.
    for (int d : upper) {
        int a = d - H - 1, r = d - 1, u = d - H;
        Matrix iota = vstack(maps[find_cover(*G, a, r)], maps[find_cover(*G, a, u)]);
        Matrix Q = quotient_map(F, image_basis(F, iota));
        dims[d] = Q.rows;
        set_map(r, d, column_block(Q, 0, dims[r]));
        set_map(u, d, mat_neg(F, column_block(Q, dims[r], dims[u])));
    }

    for (char flag : assigned)
        if (!flag) throw Error("extension left a cover unassigned");
    return PersistenceModule{G, F, std::move(dims), std::move(maps)};
}

PersistenceModule extend_zigzag(const PersistenceModule& M) {
    if (M.poset->kind != ShapeKind::Zigzag)
        throw ShapeMismatch("extend_zigzag needs a module over a zigzag fence");
    return extend_zigzag(M, ZigzagPath::from_steps(M.poset->zz_steps));
}

PersistenceModule restrict_to_fence(const PersistenceModule& E, const ZigzagPath& path) {
    path.validate();
    const int H = path.y1 - path.y0 + 1;
    const int W = path.x1 - path.x0 + 1;
    if (E.poset->kind != ShapeKind::Grid || E.poset->m != W || E.poset->n != H)
        throw ShapeMismatch("module is not over the window grid of the path");
    PosetPtr Z = build_zigzag(path.steps_right);
    std::vector<int> wid = fence_window_ids(path);
    std::vector<int> dims(Z->size);
    for (size_t k = 0; k < wid.size(); ++k) dims[k] = E.dims[wid[k]];
    std::vector<Matrix> maps(Z->covers.size());
    for (size_t st = 0; st < path.steps_right.size(); ++st) {
        if (path.steps_right[st])
            maps[st] = cover_map(E, wid[st], wid[st + 1]);
        else
            maps[st] = cover_map(E, wid[st + 1], wid[st]);
    }
    return PersistenceModule{Z, E.field, std::move(dims), std::move(maps)};
}

Barcode zigzag_barcode(const PersistenceModule& M, std::uint64_t seed) {
    if (M.poset->kind != ShapeKind::Zigzag)
        throw ShapeMismatch("zigzag_barcode needs a module over a zigzag fence");

    // Route one: decompose the fence module directly; every summand must be an
    // interval module and its support is a bar.
    Decomposition dec = decompose(M, seed);
    std::map<std::vector<int>, int> direct;
    for (const Summand& s : dec.summands) {
        std::vector<int> support;
        for (int x = 0; x < M.poset->size; ++x)
            if (s.module.dims[x] > 0) support.push_back(x);
        if (!is_interval(*M.poset, support) ||
            !are_isomorphic(s.module, interval_module(M.poset, support, M.field), seed)
                 .isomorphic)
            throw RouteDisagreement("direct summand with support " + ids_to_string(support) +
                                    " is not an interval module");
        ++direct[support];
    }

    // Route two: extend over the bounding window, block decompose there, and
    // trace the block carriers back along the path.
    ZigzagPath path = ZigzagPath::from_steps(M.poset->zz_steps);
    PersistenceModule E = extend_zigzag(M, path);
    BlockList bl = block_decompose(E, seed + 1);
    std::vector<int> wid = fence_window_ids(path);
    std::map<std::vector<int>, int> traced;
    for (const BlockEntry& e : bl.blocks) {
        std::vector<int> trace;
        for (size_t k = 0; k < wid.size(); ++k)
            if (std::binary_search(e.carrier.begin(), e.carrier.end(), wid[k]))
                trace.push_back((int)k);
        if (!trace.empty()) traced[trace] += e.multiplicity;
    }

    if (direct != traced) {
        for (const auto& [carrier, mult] : direct) {
            auto it = traced.find(carrier);
            int other = it == traced.end() ? 0 : it->second;
            if (other != mult)
                throw RouteDisagreement(
                    "bar " + ids_to_string(carrier) + " has multiplicity " +
                    std::to_string(mult) + " by decomposition and " + std::to_string(other) +
                    " by extension");
        }
        for (const auto& [carrier, mult] : traced)
            if (!direct.count(carrier))
                throw RouteDisagreement("bar " + ids_to_string(carrier) +
                                        " has multiplicity 0 by decomposition and " +
                                        std::to_string(mult) + " by extension");
    }

    Barcode bc;
    for (const auto& [carrier, mult] : direct) {
        Bar bar;
        bar.carrier = carrier;
        bar.multiplicity = mult;
        bc.bars.push_back(std::move(bar));
    }
    return bc;
}

} // namespace pmd
