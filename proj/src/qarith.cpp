#include "qspecht/qarith.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qs {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& c) {
    LaurentPoly p;
    if (c != 0) p.c_[exponent] = c;
    return p;
}

mpz_class LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int e, const mpz_class& v) {
    if (v == 0) return;
    auto [it, fresh] = c_.emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : c_) {
        std::string coef = v.get_str();
        if (!s.empty()) s += (v < 0) ? " - " : " + ";
        else if (v < 0) s += "-";
        mpz_class a = abs(v);
        if (e == 0) { s += a.get_str(); continue; }
        if (a != 1) s += a.get_str() + "*";
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

LaurentPoly q_int(int m) {
    if (m < 0) throw std::invalid_argument("q_int needs m >= 0");
    LaurentPoly p;
    for (int i = 0; i < m; ++i) p += LaurentPoly::monomial(i);
    return p;
}

LaurentPoly q_factorial(int m) {
    LaurentPoly p(1);
    for (int i = 1; i <= m; ++i) p *= q_int(i);
    return p;
}

namespace {
std::mutex g_gauss_mu;
std::vector<std::vector<LaurentPoly>> g_gauss;  // g_gauss[m][j]
}  // namespace

LaurentPoly gauss_binom(int m, int j) {
    if (m < 0 || j < 0 || j > m) return LaurentPoly();
    std::lock_guard<std::mutex> lk(g_gauss_mu);
    while ((int)g_gauss.size() <= m) {
        int k = (int)g_gauss.size();
        std::vector<LaurentPoly> row(k + 1);
        row[0] = LaurentPoly(1);
        row[k] = LaurentPoly(1);
        for (int i = 1; i < k; ++i)
            row[i] = g_gauss[k - 1][i - 1] + LaurentPoly::monomial(i) * g_gauss[k - 1][i];
        g_gauss.push_back(std::move(row));
    }
    return g_gauss[m][j];
}

mpq_class q_power(const mpq_class& q, int k) {
    if (q == 0 && k < 0) throw std::domain_error("0 to a negative power");
    mpq_class r = 1, b = q;
    unsigned long e = k < 0 ? -(long)k : k;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    if (k < 0) r = 1 / r;
    return r;
}

mpz_class eval_minus_one(const LaurentPoly& p) {
    mpz_class s = 0;
    for (const auto& [e, v] : p.coeffs()) s += (e % 2 == 0) ? v : mpz_class(-v);
    return s;
}

mpq_class eval_at(const LaurentPoly& p, const mpq_class& q) {
    mpq_class s = 0;
    for (const auto& [e, v] : p.coeffs()) s += mpq_class(v) * q_power(q, e);
    return s;
}

namespace {
std::mutex g_at_mu;
std::map<std::pair<std::string, std::string>, std::vector<std::vector<mpq_class>>> g_at;
}  // namespace

mpq_class gauss_at(int m, int j, const mpq_class& q) {
    if (m < 0 || j < 0 || j > m) return 0;
    std::lock_guard<std::mutex> lk(g_at_mu);
    auto& tab = g_at[{q.get_num().get_str(), q.get_den().get_str()}];
    while ((int)tab.size() <= m) {
        int k = (int)tab.size();
        std::vector<mpq_class> row(k + 1);
        row[0] = 1;
        row[k] = 1;
        mpq_class qi = 1;
        for (int i = 1; i < k; ++i) {
            qi *= q;
            row[i] = tab[k - 1][i - 1] + qi * tab[k - 1][i];
        }
        tab.push_back(std::move(row));
    }
    return tab[m][j];
}

mpz_class gauss_minus_one(int m, int j) {
    mpq_class v = gauss_at(m, j, mpq_class(-1));
    return v.get_num();
}

}  // namespace qs
