#include "qspecht/homcalc.hpp"

#include "relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qs {

namespace detail {

std::string encode(const Tableau& t, int L) {
    std::string c(t.size() * L, '\0');
    for (size_t r = 0; r < t.size(); ++r) {
        if (t[r].size() > 255) throw std::invalid_argument("row too long for the count encoding");
        for (int v : t[r]) {
            if (v < 1 || v > L) throw std::invalid_argument("tableau entry outside the type range");
            c[r * L + v - 1] = static_cast<char>(static_cast<unsigned char>(c[r * L + v - 1]) + 1);
        }
    }
    return c;
}

Tableau decode(const std::string& c, const Shape& s) {
    Tableau t(s.R());
    for (int r = 0; r < s.R(); ++r)
        for (int v = 0; v < s.L; ++v) t[r].insert(t[r].end(), at(c, s, r, v), v + 1);
    return t;
}

bool ss_code(const std::string& c, const Shape& s) {
    // row r+1 is column-strict under row r iff for every v:
    // #entries <= v in row r+1  <=  #entries < v in row r
    for (int r = 0; r + 1 < s.R(); ++r) {
        int lo = 0, hi = 0;  // hi: # <= v in row r+1, lo: # < v in row r
        for (int v = 0; v < s.L; ++v) {
            hi += at(c, s, r + 1, v);
            if (hi > lo) return false;
            lo += at(c, s, r, v);
        }
    }
    return true;
}

long potential(const std::string& c, const Shape& s) {
    long tot = 0;
    std::vector<long> rowcum(s.R(), 0);
    for (int v = 0; v < s.L; ++v) {
        long acc = 0;
        for (int r = 0; r < s.R(); ++r) {
            rowcum[r] += at(c, s, r, v);
            acc += rowcum[r];
            tot += acc;
        }
    }
    return tot;
}

bool toomany_code(const std::string& c, const Shape& s) {
    for (int v = 0; v < s.L; ++v) {
        int m = 0;
        for (int r = 0; r < s.R(); ++r) m += at(c, s, r, v);
        if (m == 0) continue;
        bool all_short = true;
        for (int r = 0; r < s.R(); ++r)
            if (at(c, s, r, v) && s.rows[r] >= m) { all_short = false; break; }
        if (all_short) return true;
    }
    return false;
}

const mpq_class& QRing::pw(int k) {
    auto& v = k >= 0 ? pos : neg;
    unsigned idx = k >= 0 ? k : -k;
    if (v.empty()) v.push_back(1);
    while (v.size() <= idx) v.push_back(k >= 0 ? mpq_class(v.back() * q) : mpq_class(v.back() / q));
    return v[idx];
}

const mpq_class& QRing::gb(int m, int j) {
    static const mpq_class zero = 0;
    if (m < 0 || j < 0 || j > m) return zero;
    while ((int)gauss.size() <= m) {
        int k = (int)gauss.size();
        std::vector<mpq_class> row(k + 1);
        row[0] = 1;
        row[k] = 1;
        for (int i = 1; i < k; ++i) row[i] = gauss[k - 1][i - 1] + pw(i) * gauss[k - 1][i];
        gauss.push_back(std::move(row));
    }
    return gauss[m][j];
}

}  // namespace detail

using detail::Shape;

static Shape shape_of(const Partition& mu, int L) {
    Shape s;
    s.rows = mu.parts();
    s.L = L;
    return s;
}

bool is_row_standard(const Tableau& t) {
    for (const auto& row : t) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 1) return false;
            if (i && row[i] < row[i - 1]) return false;
        }
    }
    for (size_t r = 1; r < t.size(); ++r)
        if (t[r].size() > t[r - 1].size()) return false;
    return true;
}

bool is_semistandard(const Tableau& t) {
    if (!is_row_standard(t)) return false;
    for (size_t r = 1; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c)
            if (t[r][c] <= t[r - 1][c]) return false;
    return true;
}

Partition tableau_shape(const Tableau& t) {
    std::vector<int> p;
    for (const auto& r : t) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
}

Composition tableau_type(const Tableau& t, int length) {
    Composition nu(length, 0);
    for (const auto& r : t)
        for (int v : r) {
            if (v < 1 || v > length) throw std::invalid_argument("entry outside type range");
            ++nu[v - 1];
        }
    return nu;
}

std::string tableau_str(const Tableau& t) {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < t.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (size_t i = 0; i < t[r].size(); ++i) os << (i ? "," : "") << t[r][i];
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Tableau> enumerate_tableaux(const Partition& mu, const Composition& nu, bool semistandard_only) {
    int total = 0;
    for (int x : nu) {
        if (x < 0) throw std::invalid_argument("negative type entry");
        total += x;
    }
    if (total != mu.n()) throw std::invalid_argument("shape and type have different sizes");
    const int R = mu.length(), L = static_cast<int>(nu.size());
    Shape s = shape_of(mu, L);
    std::vector<Tableau> out;
    std::string c(R * L, '\0');
    std::vector<int> left = nu;
    // fill row by row, value by value
    auto rec = [&](auto&& self, int r, int v, int room) -> void {
        if (r == R) {
            if (!semistandard_only || detail::ss_code(c, s)) out.push_back(detail::decode(c, s));
            return;
        }
        if (v == L) {
            if (room == 0) self(self, r + 1, 0, r + 1 < R ? mu(r + 2) : 0);
            return;
        }
        int maxx = std::min(room, left[v]);
        // remaining values must fit the remaining room
        for (int x = maxx; x >= 0; --x) {
            c[r * L + v] = static_cast<char>(x);
            left[v] -= x;
            if (semistandard_only && r > 0) {
                // partial column-strictness check up to value v
                int lo = 0, hi = 0;
                bool ok = true;
                for (int u = 0; u <= v; ++u) {
                    hi += detail::at(c, s, r, u);
                    if (hi > lo) { ok = false; break; }
                    lo += detail::at(c, s, r - 1, u);
                }
                if (ok) self(self, r, v + 1, room - x);
            } else {
                self(self, r, v + 1, room - x);
            }
            left[v] += x;
        }
        c[r * L + v] = 0;
    };
    if (R == 0) {
        out.push_back(Tableau{});
        return out;
    }
    rec(rec, 0, 0, mu(1));
    std::sort(out.begin(), out.end());
    return out;
}

Composition lambda_dt(const Composition& lam, int d, int t) {
    int l = 0;
    for (size_t i = 0; i < lam.size(); ++i)
        if (lam[i] > 0) l = static_cast<int>(i) + 1;
    if (d < 1 || d >= static_cast<int>(lam.size())) throw std::invalid_argument("d out of range");
    if (t < 1 || t > lam[d]) throw std::invalid_argument("t out of range");
    (void)l;
    Composition r = lam;
    r[d - 1] += t;
    r[d] -= t;
    return r;
}

Composition lambda_dt(const Partition& lam, int d, int t) {
    if (d < 1 || d >= lam.length()) throw std::invalid_argument("d out of range");
    return lambda_dt(Composition(lam.parts()), d, t);
}

HomSum single(const Partition& shape, const Composition& type, const Tableau& t, const mpq_class& c) {
    HomSum s;
    s.shape = shape;
    s.type = type;
    if (tableau_shape(t) != shape) throw std::invalid_argument("tableau does not have the given shape");
    if (!is_row_standard(t)) throw std::invalid_argument("tableau is not row-standard");
    if (tableau_type(t, static_cast<int>(type.size())) != type) throw std::invalid_argument("tableau has the wrong type");
    if (c != 0) s.terms[t] = c;
    return s;
}

HomSum specialize(const GenericHomSum& g, const mpq_class& q) {
    HomSum s;
    s.shape = g.shape;
    s.type = g.type;
    for (const auto& [t, c] : g.terms) s.add(t, eval_at(c, q));
    return s;
}

bool is_canonical(const HomSum& s) {
    for (const auto& [t, c] : s.terms)
        if (!is_semistandard(t)) return false;
    return true;
}

template <class Ring, class Sum>
static Sum compose_impl(int d, int t, const Sum& phi, bool shortcut, Ring& ring) {
    Composition nt = lambda_dt(phi.type, d, t);
    Sum out;
    out.shape = phi.shape;
    out.type = nt;
    if (shortcut && !dominates_unchecked(phi.shape.parts(), sorted_desc(nt))) return out;
    Shape s = shape_of(phi.shape, static_cast<int>(phi.type.size()));
    for (const auto& [tab, c] : phi.terms) {
        std::string code = detail::encode(tab, s.L);
        for (auto& [nc, v] : detail::psi_terms(code, s, d - 1, t, ring)) {
            auto coef = c;
            coef *= v;
            out.add(detail::decode(nc, s), coef);
        }
    }
    return out;
}

HomSum compose_psi(int d, int t, const HomSum& phi, bool shortcut, const mpq_class& q) {
    detail::QRing ring(q);
    return compose_impl(d, t, phi, shortcut, ring);
}

GenericHomSum compose_psi_generic(int d, int t, const GenericHomSum& phi, bool shortcut) {
    detail::LRing ring;
    return compose_impl(d, t, phi, shortcut, ring);
}

template <class Ring, class Sum>
static Sum step_impl(const Tableau& t, const Composition& type, int r, int d, int variant, Ring& ring) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    Partition mu = tableau_shape(t);
    if (!is_row_standard(t)) throw std::invalid_argument("tableau is not row-standard");
    if (r < 1 || r >= mu.length()) throw std::invalid_argument("r out of range");
    if (d < 1 || d > static_cast<int>(type.size())) throw std::invalid_argument("d out of range");
    if (variant == 2 && mu(r) != mu(r + 1)) throw std::invalid_argument("variant 2 needs equal row lengths");
    Shape s = shape_of(mu, static_cast<int>(type.size()));
    Sum out;
    out.shape = mu;
    out.type = type;
    std::string code = detail::encode(t, s.L);
    for (auto& [nc, v] : detail::relation(code, s, r - 1, d - 1, variant, ring)) out.add(detail::decode(nc, s), v);
    return out;
}

HomSum straighten_step(const Tableau& t, const Composition& type, int r, int d, int variant, const mpq_class& q) {
    detail::QRing ring(q);
    return step_impl<detail::QRing, HomSum>(t, type, r, d, variant, ring);
}

GenericHomSum straighten_step_generic(const Tableau& t, const Composition& type, int r, int d, int variant) {
    detail::LRing ring;
    return step_impl<detail::LRing, GenericHomSum>(t, type, r, d, variant, ring);
}

bool is_zero_by_toomany(const Tableau& t) {
    int L = 0;
    for (const auto& r : t)
        for (int v : r) L = std::max(L, v);
    if (L == 0) return false;
    Shape s = shape_of(tableau_shape(t), L);
    return detail::toomany_code(detail::encode(t, L), s);
}

long default_budget() {
    if (const char* e = std::getenv("QSPECHT_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 20000000;
}

}  // namespace qs
