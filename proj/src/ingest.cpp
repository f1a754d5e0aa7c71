#include "pmd/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "pmd/rng.hpp"
#include "pmd/structure.hpp"

namespace pmd {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

int rational_cmp(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num * b.den;
    __int128 r = (__int128)b.num * a.den;
    if (l < r) return -1;
    return l > r ? 1 : 0;
}

namespace {

long long parse_int_strict(const std::string& text) {
    long long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError("bad integer '" + text + "'");
    return v;
}

} // namespace

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return make_rational(parse_int_strict(text), 1);
    if (text.find('/', slash + 1) != std::string::npos)
        throw ParseError("bad rational '" + text + "'");
    return make_rational(parse_int_strict(text.substr(0, slash)),
                         parse_int_strict(text.substr(slash + 1)));
}

std::string rational_to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

void require_strictly_sorted(const std::vector<Rational>& v, const char* what) {
    if (v.empty()) throw MalformedShape(std::string(what) + " grid is empty");
    for (size_t i = 1; i < v.size(); ++i)
        if (rational_cmp(v[i - 1], v[i]) >= 0)
            throw MalformedShape(std::string(what) + " grid must be strictly increasing");
}

// Union-find whose root is always the member with the least (value, index)
// key, so the oldest component survives each merge.
struct ElderForest {
    const std::vector<Rational>& values;
    std::vector<int> parent; // -1 = not yet present

    explicit ElderForest(const std::vector<Rational>& v)
        : values(v), parent(v.size(), -1) {}

    bool elder(int a, int b) const {
        int c = rational_cmp(values[a], values[b]);
        return c < 0 || (c == 0 && a < b);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (elder(a, b))
            parent[b] = a;
        else
            parent[a] = b;
    }
};

} // namespace

PersistenceModule sublevel_h0(const SampledFunction& f, const FieldSpec& F) {
    if (f.values.empty()) throw MalformedShape("sampled function needs at least one sample");
    require_strictly_sorted(f.sublevel_thresholds, "threshold");
    const int n = (int)f.values.size();
    const int T = (int)f.sublevel_thresholds.size();

    PersistenceModule M = zero_module(build_chain(T), F);
    ElderForest uf(f.values);
    std::vector<int> prev_roots;
    for (int j = 0; j < T; ++j) {
        const Rational& t = f.sublevel_thresholds[j];
        for (int k = 0; k < n; ++k) {
            if (uf.parent[k] != -1 || rational_cmp(f.values[k], t) > 0) continue;
            uf.parent[k] = k;
            if (k > 0 && uf.parent[k - 1] != -1) uf.unite(k - 1, k);
            if (k + 1 < n && uf.parent[k + 1] != -1) uf.unite(k, k + 1);
        }
        std::vector<int> roots;
        for (int k = 0; k < n; ++k)
            if (uf.parent[k] != -1 && uf.find(k) == k) roots.push_back(k);
        std::sort(roots.begin(), roots.end(), [&](int a, int b) { return uf.elder(a, b); });
        std::vector<int> index_of(n, -1);
        for (size_t r = 0; r < roots.size(); ++r) index_of[roots[r]] = (int)r;

        M.dims[j] = (int)roots.size();
        if (j > 0) {
            Matrix A((int)roots.size(), (int)prev_roots.size());
            for (size_t c = 0; c < prev_roots.size(); ++c)
                A.at(index_of[uf.find(prev_roots[c])], (int)c) = 1;
            M.maps[j - 1] = std::move(A);
        }
        prev_roots = std::move(roots);
    }
    validate(M);
    return M;
}

namespace {

// Pieces of the sample interval in left-to-right order: vertex k at 2k, the
// open segment (x_k, x_{k+1}) at 2k+1. On each piece the interpolation is
// linear, so its trace on {s < f < t} is empty or a single interval, touching
// vertex k exactly when s < f(k) < t.
struct InterlevelPieces {
    const std::vector<Rational>& v;

    int count() const { return 2 * (int)v.size() - 1; }
    bool present(const Rational& s, const Rational& t, int piece) const {
        int k = piece / 2;
        if (piece % 2 == 0)
            return rational_cmp(s, v[k]) < 0 && rational_cmp(v[k], t) < 0;
        const Rational& lo = rational_cmp(v[k], v[k + 1]) <= 0 ? v[k] : v[k + 1];
        const Rational& hi = rational_cmp(v[k], v[k + 1]) <= 0 ? v[k + 1] : v[k];
        return rational_cmp(lo, t) < 0 && rational_cmp(s, hi) < 0;
    }
    // piece -> component index, components numbered left to right; -1 absent.
    std::vector<int> components(const Rational& s, const Rational& t) const {
        std::vector<int> comp(count(), -1);
        int current = -1;
        bool in_run = false;
        for (int p = 0; p < count(); ++p) {
            if (!present(s, t, p)) {
                in_run = false;
                continue;
            }
            if (!in_run) ++current;
            in_run = true;
            comp[p] = current;
        }
        return comp;
    }
};

} // namespace

PersistenceModule interlevel_h0(const SampledFunction& f, const FieldSpec& F) {
    if (f.values.empty()) throw MalformedShape("sampled function needs at least one sample");
    require_strictly_sorted(f.s_grid, "s");
    require_strictly_sorted(f.t_grid, "t");
    if (rational_cmp(f.s_grid.back(), f.t_grid.front()) >= 0)
        throw OverlapConditionViolated("need max(s grid) < min(t grid) so all windows overlap");

    const int m = (int)f.s_grid.size();
    const int p = (int)f.t_grid.size();
    InterlevelPieces pieces{f.values};

    PosetPtr G = build_grid(m, p);
    // Element (i, j) carries the window (s_{m-1-i}, t_j): larger i relaxes the
    // lower bound, larger j the upper bound, so both cover arrows enlarge.
    std::vector<std::vector<int>> comp(G->size);
    PersistenceModule M = zero_module(G, F);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < p; ++j) {
            int id = i * p + j;
            comp[id] = pieces.components(f.s_grid[m - 1 - i], f.t_grid[j]);
            int d = 0;
            for (int c : comp[id]) d = std::max(d, c + 1);
            M.dims[id] = d;
        }
    for (size_t k = 0; k < G->covers.size(); ++k) {
        auto [src, dst] = G->covers[k];
        Matrix A(M.dims[dst], M.dims[src]);
        std::vector<char> seen(M.dims[src], 0);
        for (int piece = 0; piece < pieces.count(); ++piece) {
            int c = comp[src][piece];
            if (c < 0 || seen[c]) continue;
            seen[c] = 1;
            if (comp[dst][piece] < 0)
                throw Error("interlevel component vanished along an inclusion");
            A.at(comp[dst][piece], c) = 1;
        }
        M.maps[k] = std::move(A);
    }
    validate(M);
    if (!check_middle_exact(M).ok)
        throw Error("interlevel module failed middle exactness; this is a bug");
    return M;
}

GeneratedModule random_module(const GeneratorSpec& spec, const FieldSpec& F) {
    if (!spec.poset) throw InvalidCarrier("generator spec has no poset");
    const FinitePoset& P = *spec.poset;

    std::map<std::vector<int>, int> truth;
    PersistenceModule M = zero_module(spec.poset, F);
    for (const auto& [raw, mult] : spec.carriers) {
        if (mult < 1) throw InvalidCarrier("carrier multiplicity must be positive");
        std::vector<int> carrier = raw;
        std::sort(carrier.begin(), carrier.end());
        if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end())
            throw InvalidCarrier("carrier has repeated elements");
        for (int x : carrier)
            if (x < 0 || x >= P.size) throw InvalidCarrier("carrier element out of range");
        if (!is_interval(P, carrier)) throw InvalidCarrier("carrier is not an interval");
        for (int c = 0; c < mult; ++c)
            M = direct_sum(M, interval_module(spec.poset, carrier, F)).sum;
        truth[carrier] += mult;
    }

    GeneratedModule out;
    Rng rng(spec.seed);
    for (int d : M.dims)
        out.conjugators.push_back(spec.scramble ? rng.invertible_matrix(F, d)
                                                : Matrix::identity(d));
    std::vector<Matrix> inv;
    for (const Matrix& C : out.conjugators) inv.push_back(mat_inverse(F, C));
    for (size_t k = 0; k < M.maps.size(); ++k) {
        auto [s, d] = P.covers[k];
        M.maps[k] = mat_mul(F, out.conjugators[d], mat_mul(F, M.maps[k], inv[s]));
    }
    out.module = std::move(M);
    for (auto& [carrier, mult] : truth) out.ground_truth.emplace_back(carrier, mult);
    return out;
}

} // namespace pmd
