#include "pmd/poly.hpp"

#include <algorithm>

namespace pmd {

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const FieldSpec& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = F.add(h[i + j], F.mul(f[i], g[j]));
    }
    return poly_trim(std::move(h));
}

Poly poly_mod(const FieldSpec& F, Poly f, const Poly& g) {
    f = poly_trim(std::move(f));
    Poly gg = poly_trim(g);
    if (gg.empty()) throw Error("poly_mod: division by zero polynomial");
    if (gg.size() == 1) return {};
    std::uint32_t lead_inv = F.inv(gg.back());
    while (f.size() >= gg.size()) {
        std::uint32_t q = F.mul(f.back(), lead_inv);
        size_t off = f.size() - gg.size();
        for (size_t j = 0; j < gg.size(); ++j)
            f[off + j] = F.sub(f[off + j], F.mul(q, gg[j]));
        f = poly_trim(std::move(f));
        if (f.empty()) break;
    }
    return f;
}

static Poly poly_monic(const FieldSpec& F, Poly f) {
    f = poly_trim(std::move(f));
    if (f.empty() || f.back() == 1) return f;
    std::uint32_t inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
    return f;
}

Poly poly_gcd(const FieldSpec& F, Poly f, Poly g) {
    f = poly_trim(std::move(f));
    g = poly_trim(std::move(g));
    while (!g.empty()) {
        Poly r = poly_mod(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(F, std::move(f));
}

Poly poly_powmod(const FieldSpec& F, Poly b, std::uint64_t e, const Poly& m) {
    Poly r{1};
    b = poly_mod(F, std::move(b), m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, b), m);
        b = poly_mod(F, poly_mul(F, b, b), m);
        e >>= 1;
    }
    return r;
}

std::uint32_t poly_eval(const FieldSpec& F, const Poly& f, std::uint32_t x) {
    std::uint32_t v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = F.add(F.mul(v, x), *it);
    return v;
}

Poly poly_divide_linear(const FieldSpec& F, const Poly& f, std::uint32_t r) {
    // Synthetic division by (x - r); remainder must vanish.
    if (f.empty()) return {};
    Poly q(f.size() - 1, 0);
    std::uint32_t carry = 0;
    for (size_t i = f.size(); i-- > 1;) {
        carry = F.add(f[i], F.mul(carry, r));
        q[i - 1] = carry;
    }
    if (F.add(f[0], F.mul(carry, r)) != 0) throw Error("poly_divide_linear: not a root");
    return poly_trim(std::move(q));
}

Poly charpoly(const FieldSpec& F, const Matrix& A) {
    if (A.rows != A.cols) throw Error("charpoly: non-square matrix");
    int n = A.rows;
    // Berkowitz: iterate over leading principal submatrices; p holds descending
    // coefficients of the current characteristic polynomial.
    std::vector<std::uint32_t> p{1};
    for (int k = 1; k <= n; ++k) {
        // t_0 = 1, t_1 = -A[k-1][k-1], t_m = -(R . A_{k-1}^{m-2} . S) for m >= 2,
        // with R the row left of the diagonal entry and S the column above it.
        std::vector<std::uint32_t> t(k + 1, 0);
        t[0] = 1;
        t[1] = F.neg(A.at(k - 1, k - 1));
        std::vector<std::uint32_t> w(k - 1);
        for (int i = 0; i < k - 1; ++i) w[i] = A.at(i, k - 1); // S column
        for (int m = 2; m <= k; ++m) {
            std::uint32_t dot = 0;
            for (int i = 0; i < k - 1; ++i) dot = F.add(dot, F.mul(A.at(k - 1, i), w[i]));
            t[m] = F.neg(dot);
            if (m == k) break;
            std::vector<std::uint32_t> w2(k - 1, 0);
            for (int i = 0; i < k - 1; ++i) {
                if (!w[i]) continue;
                for (int r = 0; r < k - 1; ++r)
                    w2[r] = F.add(w2[r], F.mul(A.at(r, i), w[i]));
            }
            w = std::move(w2);
        }
        std::vector<std::uint32_t> np(k + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = std::max(0, i - k); j < k && j <= i; ++j)
                np[i] = F.add(np[i], F.mul(t[i - j], p[j]));
        p = std::move(np);
    }
    Poly out(n + 1, 0);
    for (int i = 0; i <= n; ++i) out[n - i] = p[i];
    return poly_trim(std::move(out));
}

// Exact quotient f / g for a known divisor.
static Poly poly_div_exact(const FieldSpec& F, Poly f, const Poly& g) {
    f = poly_trim(std::move(f));
    if (f.size() < g.size()) return {};
    Poly q(f.size() - g.size() + 1, 0);
    std::uint32_t li = F.inv(g.back());
    while (!f.empty() && f.size() >= g.size()) {
        std::uint32_t c = F.mul(f.back(), li);
        size_t off = f.size() - g.size();
        q[off] = c;
        for (size_t j = 0; j < g.size(); ++j) f[off + j] = F.sub(f[off + j], F.mul(c, g[j]));
        f = poly_trim(std::move(f));
    }
    return poly_trim(std::move(q));
}

static void extract_roots(const FieldSpec& F, Poly g, std::vector<std::uint32_t>& out) {
    // g is a monic product of distinct linear factors.
    for (;;) {
        int d = poly_deg(g);
        if (d <= 0) return;
        if (d == 1) {
            out.push_back(F.neg(g[0]));
            return;
        }
        if (F.p == 2) {
            if (poly_eval(F, g, 0) == 0) out.push_back(0);
            if (poly_eval(F, g, 1) == 0) out.push_back(1);
            return;
        }
        // Deterministic equal-degree split: sweep shifts until the quadratic
        // character separates the roots. Guaranteed for p >= 3.
        for (std::uint32_t a = 0;; ++a) {
            Poly h = poly_powmod(F, Poly{a, 1}, (F.p - 1) / 2, g);
            if (h.empty()) h = Poly{0};
            h[0] = F.sub(h[0], 1);
            Poly d1 = poly_gcd(F, g, h);
            int dd = poly_deg(d1);
            if (dd > 0 && dd < poly_deg(g)) {
                Poly q = poly_div_exact(F, g, d1);
                extract_roots(F, std::move(d1), out);
                g = std::move(q);
                break;
            }
            if (a == F.p - 1) throw Error("roots_in_field: split sweep exhausted");
        }
    }
}

std::vector<std::uint32_t> roots_in_field(const FieldSpec& F, const Poly& f) {
    Poly ff = poly_trim(f);
    std::vector<std::uint32_t> out;
    if (poly_deg(ff) <= 0) return out;
    // gcd(f, x^p - x) collects exactly the distinct roots in F_p.
    Poly xp = poly_powmod(F, Poly{0, 1}, F.p, ff);
    xp.resize(std::max<size_t>(xp.size(), 2), 0);
    xp[1] = F.sub(xp[1], 1);
    Poly g = poly_gcd(F, ff, poly_trim(std::move(xp)));
    extract_roots(F, std::move(g), out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pmd
