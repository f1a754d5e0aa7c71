#include "pmd/poset.hpp"

#include <algorithm>
#include <set>

namespace pmd {

ZigzagPath ZigzagPath::from_steps(const std::vector<bool>& steps) {
    ZigzagPath p;
    p.steps_right = steps;
    int r = 0, d = 0;
    for (bool s : steps) (s ? r : d)++;
    p.sx = 0;
    p.sy = d;
    p.x0 = 0;
    p.y0 = 0;
    p.x1 = r;
    p.y1 = d;
    return p;
}

std::vector<std::pair<int, int>> ZigzagPath::points() const {
    std::vector<std::pair<int, int>> pts{{sx, sy}};
    int x = sx, y = sy;
    for (bool s : steps_right) {
        if (s)
            ++x;
        else
            --y;
        pts.emplace_back(x, y);
    }
    return pts;
}

bool ZigzagPath::crosses_corner_to_corner() const {
    auto pts = points();
    return pts.front() == std::make_pair(x0, y1) && pts.back() == std::make_pair(x1, y0);
}

void ZigzagPath::validate() const {
    if (x0 > x1 || y0 > y1) throw MalformedShape("zigzag window is empty");
    auto pts = points();
    for (auto [x, y] : pts)
        if (x < x0 || x > x1 || y < y0 || y > y1)
            throw MalformedShape("zigzag path leaves its window at (" + std::to_string(x) +
                                 "," + std::to_string(y) + ")");
    auto [ex, ey] = pts.front();
    if (ex != x0 && ey != y1)
        throw MalformedShape("zigzag path must enter the window on its top/left boundary");
    auto [qx, qy] = pts.back();
    if (qx != x1 && qy != y0)
        throw MalformedShape("zigzag path must exit the window on its bottom/right boundary");
}

int FinitePoset::coord_id(int i, int j) const {
    for (int e = 0; e < size; ++e)
        if (coords[e] == std::make_pair(i, j)) return e;
    return -1;
}

// Reflexive-transitive closure of the cover relation, plus sanity checks:
// acyclicity and cover minimality ("no cover implied by two others"). Covers
// end up sorted, the canonical order every module's map list follows.
static void finish_poset(FinitePoset& P) {
    int n = P.size;
    std::sort(P.covers.begin(), P.covers.end());
    P.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) P.leq_[i][i] = 1;
    for (size_t k = 0; k < P.covers.size(); ++k) {
        auto [s, d] = P.covers[k];
        if (s < 0 || s >= n || d < 0 || d >= n || s == d)
            throw MalformedShape("cover endpoints out of range");
        if (k > 0 && P.covers[k] == P.covers[k - 1])
            throw MalformedShape("duplicate cover " + std::to_string(s) + "->" +
                                 std::to_string(d));
        P.leq_[s][d] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (P.leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (P.leq_[k][j]) P.leq_[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && P.leq_[i][j] && P.leq_[j][i])
                throw MalformedShape("cover relation has a cycle through " + std::to_string(i));
    for (auto [s, d] : P.covers)
        for (int z = 0; z < n; ++z)
            if (z != s && z != d && P.leq_[s][z] && P.leq_[z][d])
                throw MalformedShape("cover " + std::to_string(s) + "->" + std::to_string(d) +
                                     " is implied by intermediate element " + std::to_string(z));
    if (P.coords.empty()) P.coords.assign(n, {0, 0});
}

PosetPtr build_chain(int n) {
    if (n < 1) throw MalformedShape("Chain size must be >= 1");
    auto P = std::make_shared<FinitePoset>();
    P->size = n;
    P->kind = ShapeKind::Chain;
    P->n = n;
    for (int i = 0; i + 1 < n; ++i) P->covers.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) P->coords.emplace_back(i, 0);
    finish_poset(*P);
    return P;
}

PosetPtr build_grid(int m, int n) {
    if (m < 1 || n < 1) throw MalformedShape("Grid dimensions must be >= 1");
    auto P = std::make_shared<FinitePoset>();
    P->size = m * n;
    P->kind = ShapeKind::Grid;
    P->m = m;
    P->n = n;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            P->coords.emplace_back(i, j);
            if (i + 1 < m) P->covers.emplace_back(i * n + j, (i + 1) * n + j);
            if (j + 1 < n) P->covers.emplace_back(i * n + j, i * n + j + 1);
        }
    finish_poset(*P);
    return P;
}

PosetPtr build_triangle(int m, int n, int cutoff) {
    if (m < 1 || n < 1) throw MalformedShape("TriangleRegion dimensions must be >= 1");
    auto P = std::make_shared<FinitePoset>();
    P->kind = ShapeKind::Triangle;
    P->m = m;
    P->n = n;
    P->cutoff = cutoff;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j > cutoff) P->coords.emplace_back(i, j);
    P->size = static_cast<int>(P->coords.size());
    if (P->size == 0) throw MalformedShape("TriangleRegion is empty: cutoff too large");
    for (int e = 0; e < P->size; ++e) {
        auto [i, j] = P->coords[e];
        int r = P->coord_id(i + 1, j);
        if (i + 1 < m && r >= 0) P->covers.emplace_back(e, r);
        int u = P->coord_id(i, j + 1);
        if (j + 1 < n && u >= 0) P->covers.emplace_back(e, u);
    }
    finish_poset(*P);
    return P;
}

PosetPtr build_zigzag(const std::vector<bool>& steps_right) {
    ZigzagPath path = ZigzagPath::from_steps(steps_right);
    path.validate();
    auto P = std::make_shared<FinitePoset>();
    P->kind = ShapeKind::Zigzag;
    P->zz_steps = steps_right;
    P->coords = path.points();
    P->size = static_cast<int>(P->coords.size());
    P->m = path.x1 + 1;
    P->n = path.y1 + 1;
    for (size_t k = 0; k < steps_right.size(); ++k) {
        // right step: p_k <= p_{k+1}; down step: p_{k+1} <= p_k
        if (steps_right[k])
            P->covers.emplace_back(static_cast<int>(k), static_cast<int>(k + 1));
        else
            P->covers.emplace_back(static_cast<int>(k + 1), static_cast<int>(k));
    }
    finish_poset(*P);
    return P;
}

PosetPtr build_opposite(const PosetPtr& P) {
    if (P->kind == ShapeKind::Opposite) return P->opposite_of;
    auto Q = std::make_shared<FinitePoset>();
    Q->size = P->size;
    Q->kind = ShapeKind::Opposite;
    Q->opposite_of = P;
    Q->coords = P->coords;
    Q->m = P->m;
    Q->n = P->n;
    Q->cutoff = P->cutoff;
    for (auto [s, d] : P->covers) Q->covers.emplace_back(d, s);
    finish_poset(*Q);
    return Q;
}

PosetPtr build_custom(int size, const std::vector<std::pair<int, int>>& covers) {
    if (size < 0) throw MalformedShape("Custom poset size must be >= 0");
    auto P = std::make_shared<FinitePoset>();
    P->size = size;
    P->kind = ShapeKind::Custom;
    P->covers = covers;
    finish_poset(*P);
    return P;
}

bool poset_equal(const FinitePoset& P, const FinitePoset& Q) {
    return P.size == Q.size && P.covers == Q.covers && P.leq_ == Q.leq_;
}

std::vector<int> topo_order(const FinitePoset& P) {
    std::vector<std::pair<int, int>> key(P.size);
    for (int x = 0; x < P.size; ++x) {
        int below = 0;
        for (int q = 0; q < P.size; ++q)
            if (q != x && P.leq(q, x)) ++below;
        key[x] = {below, x};
    }
    std::sort(key.begin(), key.end());
    std::vector<int> order;
    order.reserve(P.size);
    for (auto [cnt, x] : key) order.push_back(x);
    return order;
}

bool is_ideal(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<char> in(P.size, 0);
    for (int x : s) in[x] = 1;
    for (int x : s)
        for (int q = 0; q < P.size; ++q)
            if (P.leq(q, x) && !in[q]) return false;
    return true;
}

bool is_filter(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<char> in(P.size, 0);
    for (int x : s) in[x] = 1;
    for (int x : s)
        for (int q = 0; q < P.size; ++q)
            if (P.leq(x, q) && !in[q]) return false;
    return true;
}

bool is_convex(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<char> in(P.size, 0);
    for (int x : s) in[x] = 1;
    for (int p : s)
        for (int r : s)
            for (int q = 0; q < P.size; ++q)
                if (!in[q] && P.leq(p, q) && P.leq(q, r)) return false;
    return true;
}

bool is_connected(const FinitePoset& P, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::vector<int> stack{s[0]};
    std::set<int> seen{s[0]}, want(s.begin(), s.end());
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : s)
            if (!seen.count(v) && (P.leq(u, v) || P.leq(v, u))) {
                seen.insert(v);
                stack.push_back(v);
            }
    }
    return seen.size() == want.size();
}

bool is_interval(const FinitePoset& P, const std::vector<int>& s) {
    return !s.empty() && is_convex(P, s) && is_connected(P, s);
}

bool is_directed(const FinitePoset& P, const std::vector<int>& s) {
    for (int u : s)
        for (int v : s) {
            bool ok = false;
            for (int w : s)
                if (P.leq(u, w) && P.leq(v, w)) { ok = true; break; }
            if (!ok) return false;
        }
    return true;
}

std::vector<int> principal_ideal(const FinitePoset& P, int x) {
    std::vector<int> s;
    for (int q = 0; q < P.size; ++q)
        if (P.leq(q, x)) s.push_back(q);
    return s;
}

std::string block_type_name(BlockType t) {
    switch (t) {
        case BlockType::db: return "db";
        case BlockType::bb: return "bb";
        case BlockType::vb: return "vb";
        case BlockType::hb: return "hb";
    }
    return "?";
}

// Candidate blocks are parameterized by their factor ranges on the ambient
// m x n grid; the carrier must equal block-intersect-region exactly.
std::vector<BlockType> classify_block(const std::vector<int>& carrier, const FinitePoset& grid) {
    if (grid.kind != ShapeKind::Grid && grid.kind != ShapeKind::Triangle)
        throw NotGridLike("classify_block needs a Grid or TriangleRegion poset");
    std::set<int> cset(carrier.begin(), carrier.end());
    if (cset.empty()) throw CarrierNotSubset("classify_block: empty carrier");
    for (int x : carrier)
        if (x < 0 || x >= grid.size)
            throw CarrierNotSubset("classify_block: element " + std::to_string(x) +
                                   " outside the poset");
    int m = grid.m, n = grid.n;
    auto matches = [&](int ilo, int ihi, int jlo, int jhi) {
        std::set<int> bset;
        for (int e = 0; e < grid.size; ++e) {
            auto [i, j] = grid.coords[e];
            if (i >= ilo && i <= ihi && j >= jlo && j <= jhi) bset.insert(e);
        }
        return bset == cset;
    };
    std::vector<BlockType> tags;
    bool db = false, bb = false, vb = false, hb = false;
    for (int a = 0; a < m && !db; ++a)
        for (int b = 0; b < n && !db; ++b) db = matches(0, a, 0, b);
    for (int a = 0; a < m && !bb; ++a)
        for (int b = 0; b < n && !bb; ++b) bb = matches(a, m - 1, b, n - 1);
    for (int a1 = 0; a1 < m && !vb; ++a1)
        for (int a2 = a1; a2 < m && !vb; ++a2) vb = matches(a1, a2, 0, n - 1);
    for (int b1 = 0; b1 < n && !hb; ++b1)
        for (int b2 = b1; b2 < n && !hb; ++b2) hb = matches(0, m - 1, b1, b2);
    if (db) tags.push_back(BlockType::db);
    if (bb) tags.push_back(BlockType::bb);
    if (vb) tags.push_back(BlockType::vb);
    if (hb) tags.push_back(BlockType::hb);
    return tags;
}

std::vector<RegionLabel> region_split(const ZigzagPath& path) {
    path.validate();
    auto pts = path.points();
    std::set<std::pair<int, int>> on_path(pts.begin(), pts.end());
    int h = path.y1 - path.y0 + 1;
    std::vector<RegionLabel> labels;
    labels.reserve(static_cast<size_t>(path.x1 - path.x0 + 1) * h);
    for (int x = path.x0; x <= path.x1; ++x)
        for (int y = path.y0; y <= path.y1; ++y) {
            if (on_path.count({x, y})) {
                labels.push_back(RegionLabel::Z);
                continue;
            }
            bool above = false, below = false;
            for (auto [px, py] : pts) {
                if (px <= x && py <= y) above = true;
                if (x <= px && y <= py) below = true;
            }
            if (above == below)
                throw MalformedShape("window point (" + std::to_string(x) + "," +
                                     std::to_string(y) + ") is not separated by the path");
            labels.push_back(above ? RegionLabel::RU : RegionLabel::RL);
        }
    return labels;
}

std::vector<int> fence_window_ids(const ZigzagPath& path) {
    int h = path.y1 - path.y0 + 1;
    std::vector<int> ids;
    for (auto [x, y] : path.points()) ids.push_back((x - path.x0) * h + (y - path.y0));
    return ids;
}

} // namespace pmd
