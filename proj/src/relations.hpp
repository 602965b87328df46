#pragma once
// Count-matrix encoding of row-standard tableaux and the straightening relations on it.

#include "qspecht/homcalc.hpp"

#include <string>
#include <vector>

namespace qs::detail {

// c[r*L + v] = number of entries equal to v+1 in row r+1
struct Shape {
    std::vector<int> rows;
    int L = 0;
    int R() const { return static_cast<int>(rows.size()); }
};

inline int at(const std::string& c, const Shape& s, int r, int v) {
    return static_cast<unsigned char>(c[r * s.L + v]);
}
inline void put(std::string& c, const Shape& s, int r, int v, int x) {
    c[r * s.L + v] = static_cast<char>(static_cast<unsigned char>(x));
}

std::string encode(const Tableau& t, int L);
Tableau decode(const std::string& c, const Shape& s);
bool ss_code(const std::string& c, const Shape& s);
long potential(const std::string& c, const Shape& s);
bool toomany_code(const std::string& c, const Shape& s);

struct QRing {
    using value = mpq_class;
    mpq_class q;
    std::vector<mpq_class> pos, neg;           // q^k, q^-k caches
    std::vector<std::vector<mpq_class>> gauss;  // q-Pascal table
    explicit QRing(mpq_class q_) : q(std::move(q_)) {}
    const mpq_class& pw(int k);
    const mpq_class& gb(int m, int j);
    static mpq_class one() { return 1; }
};

struct LRing {
    using value = LaurentPoly;
    LaurentPoly pw(int k) { return LaurentPoly::monomial(k); }
    LaurentPoly gb(int m, int j) { return gauss_binom(m, j); }
    static LaurentPoly one() { return LaurentPoly(1); }
};

template <class V>
using Terms = std::vector<std::pair<std::string, V>>;

// Expresses Theta_S as a combination of Theta_U (variant 1: entries d move from row r+1 to row r;
// variant 2: from row r to row r+1, needs equal row lengths). r is 0-based here.
template <class Ring>
Terms<typename Ring::value> relation(const std::string& c, const Shape& s, int r, int d, int variant, Ring& ring) {
    using V = typename Ring::value;
    Terms<V> out;
    const int L = s.L;
    int src = variant == 1 ? r + 1 : r;  // row holding the d's that move
    int dst = variant == 1 ? r : r + 1;  // row receiving them and giving back g
    if (variant == 2 && s.rows[r] != s.rows[r + 1]) return out;
    int k = at(c, s, src, d);
    if (k == 0) return out;
    V pref = ring.one();
    if (k % 2) pref = -pref;
    if (variant == 1) {
        int less = 0;
        for (int u = 0; u < d; ++u) less += at(c, s, src, u);
        pref *= ring.pw(-(k * (k + 1) / 2) - k * less);
    } else {
        int gt = 0;
        for (int u = d + 1; u < L; ++u) gt += at(c, s, src, u);
        pref *= ring.pw(-(k * (k - 1) / 2) - k * gt);
    }
    // prefix sums of the source row
    std::vector<int> below(L + 1, 0), above(L + 1, 0);
    for (int u = 0; u < L; ++u) below[u + 1] = below[u] + at(c, s, src, u);  // below[u] = #entries < u
    for (int u = L - 1; u >= 0; --u) above[u] = above[u + 1] + at(c, s, src, u);  // above[u+1] = #entries > u
    std::vector<int> g(L, 0);
    std::vector<int> cap(L, 0);
    for (int u = 0; u < L; ++u) cap[u] = u == d ? 0 : at(c, s, dst, u);
    std::vector<int> suffix(L + 1, 0);
    for (int u = L - 1; u >= 0; --u) suffix[u] = suffix[u + 1] + cap[u];
    auto emit = [&]() {
        V coef = pref;
        int gbar = 0;
        for (int u = 0; u < d; ++u) gbar += g[u];
        coef *= ring.pw(variant == 1 ? gbar : -gbar);
        for (int u = 0; u < L; ++u) {
            if (g[u] == 0) continue;
            int e = variant == 1 ? g[u] * below[u] : g[u] * above[u + 1];
            if (e) coef *= ring.pw(e);
            coef *= ring.gb(at(c, s, src, u) + g[u], g[u]);
        }
        if (coef == V(0)) return;
        std::string nc = c;
        put(nc, s, src, d, 0);
        put(nc, s, dst, d, at(c, s, dst, d) + k);
        for (int u = 0; u < L; ++u) {
            if (!g[u]) continue;
            put(nc, s, dst, u, at(nc, s, dst, u) - g[u]);
            put(nc, s, src, u, at(nc, s, src, u) + g[u]);
        }
        out.emplace_back(std::move(nc), std::move(coef));
    };
    auto rec = [&](auto&& self, int u, int left) -> void {
        if (left == 0) { emit(); return; }
        if (u == L || suffix[u] < left) return;
        int hi = std::min(cap[u], left);
        for (int x = hi; x >= 0; --x) {
            g[u] = x;
            self(self, u + 1, left - x);
        }
        g[u] = 0;
    };
    rec(rec, 0, k);
    return out;
}

// psi_{d,t} on one tableau (d 0-based: entries d+2 -> d+1 in 1-based terms)
template <class Ring>
Terms<typename Ring::value> psi_terms(const std::string& c, const Shape& s, int d, int t, Ring& ring) {
    using V = typename Ring::value;
    Terms<V> out;
    const int R = s.R();
    std::vector<int> x(R, 0), capx(R), lower(R + 1, 0), suffix(R + 1, 0);
    for (int j = 0; j < R; ++j) capx[j] = at(c, s, j, d + 1);
    for (int j = R - 1; j >= 0; --j) {
        lower[j] = lower[j + 1] + at(c, s, j, d);  // lower[j] = # d's in rows >= j
        suffix[j] = suffix[j + 1] + capx[j];
    }
    auto emit = [&]() {
        V coef = ring.one();
        std::string nc = c;
        for (int j = 0; j < R; ++j) {
            if (!x[j]) continue;
            int Td = at(c, s, j, d);
            int e = lower[j + 1] * x[j];
            if (e) coef *= ring.pw(e);
            coef *= ring.gb(Td + x[j], Td);
            put(nc, s, j, d, Td + x[j]);
            put(nc, s, j, d + 1, at(c, s, j, d + 1) - x[j]);
        }
        if (coef == V(0)) return;
        out.emplace_back(std::move(nc), std::move(coef));
    };
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (left == 0) { emit(); return; }
        if (j == R || suffix[j] < left) return;
        for (int v = std::min(capx[j], left); v >= 0; --v) {
            x[j] = v;
            self(self, j + 1, left - v);
        }
        x[j] = 0;
    };
    rec(rec, 0, t);
    return out;
}

}  // namespace qs::detail
