#include "qspecht/mainhom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qs {

namespace {

int sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<int> multiset_of(const Composition& type) {
    std::vector<int> v;
    for (size_t k = 0; k < type.size(); ++k) v.insert(v.end(), type[k], static_cast<int>(k) + 1);
    return v;
}

// cells of a (2^{s-1}) tableau in chain order, skipping (1,2) and (2,2)
std::vector<std::pair<int, int>> chain_cells(int rows) {
    std::vector<std::pair<int, int>> c{{0, 0}, {1, 0}};
    for (int k = 2; k < rows; ++k) {
        c.emplace_back(k, 0);
        c.emplace_back(k, 1);
    }
    return c;
}

TailTableau chain_fill(int i, int j, const Composition& type) {
    const int rows = static_cast<int>(type.size()) - 1;
    if (rows < 2) throw std::invalid_argument("the chain construction needs s >= 3");
    if (!(1 <= i && i < j && j <= static_cast<int>(type.size()))) throw std::invalid_argument("need 1 <= i < j <= s");
    auto ms = multiset_of(type);
    for (int v : {i, j}) {
        auto it = std::find(ms.begin(), ms.end(), v);
        if (it == ms.end()) throw std::invalid_argument("pair not available in this type");
        ms.erase(it);
    }
    TailTableau t(rows, {0, 0});
    t[0][1] = i;
    t[1][1] = j;
    auto cells = chain_cells(rows);
    for (size_t k = 0; k < cells.size(); ++k) t[cells[k].first][cells[k].second] = ms[k];
    return t;
}

bool split_at(const TailTableau& t, int i) {
    int top = 0, bot = 1 << 30;
    for (int k = 0; k < i; ++k) top = std::max({top, t[k][0], t[k][1]});
    for (size_t k = i; k < t.size(); ++k) bot = std::min({bot, t[k][0], t[k][1]});
    return top < bot;
}

TailTableau tails_odd(const TailTableau& S, const TailTableau& T, const MHParams& p) {
    TailTableau tails = S;
    for (int k = p.s; k <= p.s + p.f - 1; ++k) tails.push_back({k + 1, k + 1});
    for (const auto& r : T) tails.push_back({r[0] + p.s + p.f, r[1] + p.s + p.f});
    return tails;
}

}  // namespace

void validate(const MHParams& p) {
    if (p.f < 0) throw std::invalid_argument("f must be >= 0");
    if (p.g < 2) throw std::invalid_argument("g must be >= 2");
    if (p.s < 2 || p.s_prime < p.s) throw std::invalid_argument("need s' >= s >= 2");
    bool odd = p.s % 2 == 1 && p.s_prime % 2 == 1;
    bool even = p.s == 2 && p.s_prime % 2 == 0 && p.f == 0;
    if (!odd && !even) throw std::invalid_argument("need s, s' odd, or s = 2 with s' even and f = 0");
}

bool is_odd_regime(const MHParams& p) { return p.s % 2 == 1; }

std::string to_string(const MHParams& p) {
    return "(" + std::to_string(p.s) + "," + std::to_string(p.s_prime) + "," + std::to_string(p.f) + "," +
           std::to_string(p.g) + ")";
}

std::pair<Partition, Partition> mu_lambda_of(const MHParams& p) {
    validate(p);
    const int m = p.g + p.f + p.s_prime;
    std::vector<int> mu{m + 1, m + 1}, lam;
    mu.insert(mu.end(), p.s - 2, m);
    lam.insert(lam.end(), p.s, m);
    for (int v = m - 1; v >= p.g + p.s_prime; --v) {
        mu.push_back(v);
        lam.push_back(v);
    }
    for (int v = p.g; v >= 3; --v) mu.push_back(v);
    for (int v = p.g; v >= 2; --v) lam.push_back(v);
    return {Partition(mu), Partition(lam)};
}

std::vector<std::pair<int, int>> index_set(int s) {
    if (s < 3 || s % 2 == 0) throw std::invalid_argument("index set needs odd s >= 3");
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            if (j % 2 == 1 || i >= 3) out.emplace_back(i, j);
    return out;
}

long m_coeff(int i, int j, int s) {
    if (s < 3 || s % 2 == 0) throw std::invalid_argument("m_coeff needs odd s >= 3");
    if (i == 2 && j == 3) return (s - 1) / 2;
    return sign(j + 1);
}

Composition nu_d(int d, int s) {
    if (d < 1 || d > s - 1) throw std::invalid_argument("need 1 <= d <= s-1");
    Composition nu(s, 2);
    nu[0] = nu[1] = 1;
    nu[d - 1] += 1;
    nu[d] -= 1;
    return nu;
}

TailTableau s_tableau(int i, int j, int s) {
    Composition type(s, 2);
    type[0] = type[1] = 1;
    return chain_fill(i, j, type);
}

TailTableau s_d_tableau(int d, int i, int j, int s) {
    if (d == 1 && (i == 2 || j == 2)) throw std::invalid_argument("S^1(i,j) is excluded when 2 is in {i,j}");
    return chain_fill(i, j, nu_d(d, s));
}

int count_chain_fillings(int i, int j, const Composition& type) {
    const int rows = static_cast<int>(type.size()) - 1;
    auto ms = multiset_of(type);
    for (int v : {i, j}) {
        auto it = std::find(ms.begin(), ms.end(), v);
        if (it == ms.end()) return 0;
        ms.erase(it);
    }
    auto cells = chain_cells(rows);
    std::sort(ms.begin(), ms.end());
    int count = 0;
    do {
        TailTableau t(rows, {0, 0});
        t[0][1] = i;
        t[1][1] = j;
        for (size_t k = 0; k < cells.size(); ++k) t[cells[k].first][cells[k].second] = ms[k];
        bool ok = true;
        for (size_t k = 1; k < cells.size() && ok; ++k)
            ok = t[cells[k - 1].first][cells[k - 1].second] <= t[cells[k].first][cells[k].second];
        count += ok;
    } while (std::next_permutation(ms.begin(), ms.end()));
    return count;
}

int first_split_row(const TailTableau& t) {
    for (int i = 1; i <= static_cast<int>(t.size()); ++i)
        if (split_at(t, i)) return i;
    return static_cast<int>(t.size());
}

std::vector<ATableau> enumerate_A(int g) {
    if (g < 2) throw std::invalid_argument("g must be >= 2");
    const int rows = g - 1;
    std::vector<int> left(rows + 1, 2);
    TailTableau cur(rows, {0, 0});
    std::vector<ATableau> out;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == rows) {
            int first = 0;
            for (int i = 1; i <= rows; ++i) {
                bool sp = split_at(cur, i);
                if (sp && !first) first = i;
                if (first && !sp) return;
            }
            out.push_back({cur, sign(first)});
            return;
        }
        // row k+1 (1-based) has entries >= k
        for (int a = std::max(1, k); a <= rows; ++a) {
            if (!left[a]) continue;
            --left[a];
            for (int b = a; b <= rows; ++b) {
                if (!left[b]) continue;
                // first entry of row r < second entry of row r+1, for 2 <= r <= g-2
                if (k >= 2 && !(cur[k - 1][0] < b)) continue;
                --left[b];
                cur[k] = {a, b};
                self(self, k + 1);
                ++left[b];
            }
            ++left[a];
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const ATableau& x, const ATableau& y) { return x.rows < y.rows; });
    return out;
}

std::optional<Tableau> decode_usable(const Partition& mu, const TailTableau& tails) {
    if (static_cast<int>(tails.size()) != mu.length()) throw std::invalid_argument("one tail per row expected");
    Tableau t(mu.length());
    for (int k = 0; k < mu.length(); ++k) {
        if (mu(k + 1) < 2) throw std::invalid_argument("usable rows need length >= 2");
        t[k].assign(mu(k + 1) - 2, k + 1);
        t[k].push_back(tails[k][0]);
        t[k].push_back(tails[k][1]);
    }
    if (!is_row_standard(t)) return std::nullopt;
    return t;
}

std::optional<Tableau> u_tableau(int i, int j, const TailTableau& T, const MHParams& p) {
    validate(p);
    if (!is_odd_regime(p)) throw std::invalid_argument("u_tableau needs the odd regime");
    return decode_usable(mu_lambda_of(p).first, tails_odd(s_tableau(i, j, p.s), T, p));
}

std::optional<Tableau> u_d_tableau(int d, int i, int j, const TailTableau& T, const MHParams& p) {
    validate(p);
    if (!is_odd_regime(p)) throw std::invalid_argument("u_d_tableau needs the odd regime");
    return decode_usable(mu_lambda_of(p).first, tails_odd(s_d_tableau(d, i, j, p.s), T, p));
}

Tableau u_tableau_even(const TailTableau& T, const MHParams& p) {
    validate(p);
    if (is_odd_regime(p)) throw std::invalid_argument("u_tableau_even needs the even regime");
    TailTableau tails{{1, 2}};
    for (const auto& r : T) tails.push_back({r[0] + 2, r[1] + 2});
    auto u = decode_usable(mu_lambda_of(p).first, tails);
    if (!u) throw std::logic_error("even-regime tableau is not row-standard");
    return *u;
}

HomSum build_theta(const MHParams& p) {
    auto [mu, lam] = mu_lambda_of(p);
    HomSum out;
    out.shape = mu;
    out.type = Composition(lam.parts());
    auto A = enumerate_A(p.g);
    if (!is_odd_regime(p)) {
        for (const auto& T : A) out.add(u_tableau_even(T.rows, p), T.sgn);
        return out;
    }
    for (auto [i, j] : index_set(p.s)) {
        long m = m_coeff(i, j, p.s);
        for (const auto& T : A)
            if (auto u = u_tableau(i, j, T.rows, p)) out.add(*u, mpq_class(m * T.sgn));
    }
    return out;
}

MainhomReport verify_mainhom(const MHParams& p, Straightener& st) {
    MainhomReport r;
    r.params = p;
    std::tie(r.mu, r.lambda) = mu_lambda_of(p);
    HomSum theta = build_theta(p);
    r.support = theta.terms.size();
    r.all_semistandard = is_canonical(theta);
    long before = st.relations_used();
    r.kernel = kernel_intersection_check(theta, r.lambda, st, true);
    r.relations_used = st.relations_used() - before;
    const int l = p.s + p.f + p.g - 2;
    std::set<std::pair<int, int>> skipped(r.kernel.skipped_by_dominance.begin(), r.kernel.skipped_by_dominance.end());
    for (int d = 1; d < r.lambda.length(); ++d)
        for (int t = 1; t <= r.lambda(d + 1); ++t) {
            bool listed = (t == 1 && d <= l) || (t == 2 && d >= p.s + 1 && d <= l);
            if (!listed && !skipped.count({d, t})) r.outside_list_not_killed.emplace_back(d, t);
        }
    return r;
}

bool CancellationReport::all_hold() const { return failures() == 0; }

int CancellationReport::count(const std::string& name) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.name == name; }));
}

int CancellationReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.holds; }));
}

char topbit_case(int d, int i, int j) {
    if (d >= 3 && j == d && i < d) return 'a';
    if (d >= 4 && j == d + 1 && i < d) return 'b';
    if (d >= 4 && i < d && j != d && j != d + 1) return 'c';
    if (d >= 3 && i == d && j == d + 1) return 'd';
    if (d >= 2 && i == d && j >= d + 2) return 'e';
    if (d >= 2 && i == d + 1 && j >= d + 2) return 'f';
    if (d >= 3 && i >= d + 2) return 'g';
    if (d == 3 && i == 2 && j >= 5) return 'h';
    if (d == 2 && i == 2 && j == 3) return 'i';
    if (d == 2 && i >= 4) return 'j';
    if (d == 1 && i == 2) return 'k';
    if (d == 1 && i == 3) return 'l';
    if (d == 1 && i >= 4) return 'm';
    return 0;
}

CancellationReport verify_paper_cancellations(const MHParams& p, Straightener& st) {
    validate(p);
    if (!is_odd_regime(p)) throw std::invalid_argument("the cancellation propositions concern the odd regime");
    auto [mu, lam] = mu_lambda_of(p);
    const Composition type(lam.parts());
    const int m = p.g + p.f + p.s_prime;
    const mpq_class q = st.options().q;
    auto A = enumerate_A(p.g);
    auto I = index_set(p.s);
    CancellationReport rep;

    auto theta = [&](int i, int j, const TailTableau& T) -> std::optional<HomSum> {
        auto u = u_tableau(i, j, T, p);
        if (!u) return std::nullopt;
        return single(mu, type, *u);
    };
    auto zero_after = [&](int d, int t, const HomSum& phi) {
        return st.semistandardize(compose_psi(d, t, phi, false, q)).is_zero();
    };

    // Prop. topbit
    for (int d = 1; d <= p.s - 1; ++d) {
        const Composition nt = lambda_dt(type, d, 1);
        for (auto [i, j] : I) {
            char c = topbit_case(d, i, j);
            if (!c) continue;
            std::vector<std::pair<int, std::pair<int, int>>> rhs;  // (sign, (i', j'))
            switch (c) {
                case 'a': rhs = {{sign(m), {i, d}}}; break;
                case 'b': rhs = {{sign(m), {i, d}}}; break;
                case 'd': rhs = {{sign(m + d + 1), {2, d}}}; break;
                case 'e': rhs = {{sign(m + 1), {d, j}}}; break;
                case 'f': rhs = {{sign(m), {d, j}}}; break;
                case 'h': rhs = {{sign(m + 1), {2, 3}}}; break;
                case 'j': rhs = {{sign(m + i), {2, i}}}; break;
                case 'l': rhs = {{sign(m), {1, j}}}; break;
                case 'm': rhs = {{sign(m + i), {1, i}}, {sign(m + i + 1), {1, j}}}; break;
                default: break;
            }
            for (const auto& T : A) {
                auto lhs = theta(i, j, T.rows);
                if (!lhs) {
                    ++rep.skipped;
                    continue;
                }
                HomSum r;
                r.shape = mu;
                r.type = nt;
                bool ok = true;
                for (const auto& [sg, ij] : rhs) {
                    auto u = u_d_tableau(d, ij.first, ij.second, T.rows, p);
                    if (!u) { ok = false; break; }
                    r.add(*u, sg);
                }
                if (!ok) {
                    ++rep.skipped;
                    continue;
                }
                HomSum left = st.semistandardize(compose_psi(d, 1, *lhs, false, q));
                HomSum right = st.semistandardize(r);
                rep.checks.push_back({std::string("topbit(") + c + ")", d, 1, i, j, 0, 0, left == right});
            }
        }
    }

    // Cor. topcory
    for (const auto& T : A)
        for (int d = 1; d <= p.s - 1; ++d) {
            HomSum sum;
            sum.shape = mu;
            sum.type = type;
            for (auto [i, j] : I)
                if (auto u = u_tableau(i, j, T.rows, p)) sum.add(*u, mpq_class(m_coeff(i, j, p.s)));
            rep.checks.push_back({"topcory", d, 1, 0, 0, 0, 0, zero_after(d, 1, sum)});
        }

    // Props. middle and middle2
    for (auto [i, j] : I)
        for (const auto& T : A) {
            auto th = theta(i, j, T.rows);
            if (!th) {
                ++rep.skipped;
                continue;
            }
            for (int d = p.s; d <= p.s + p.f - 1; ++d)
                rep.checks.push_back({"middle", d, 1, i, j, 0, 0, zero_after(d, 1, *th)});
            for (int d = p.s + 1; d <= p.s + p.f; ++d)
                rep.checks.push_back({"middle2", d, 2, i, j, 0, 0, zero_after(d, 2, *th)});
        }

    // Props. bot1 and bot1ab
    const int base = p.s + p.f;
    for (auto [i, j] : I) {
        if (!u_tableau(i, j, A.front().rows, p)) {
            ++rep.skipped;
            continue;
        }
        for (int d = base; d <= base + p.g - 2; ++d)
            for (int t = 1; t <= 2; ++t) {
                HomSum sum;
                sum.shape = mu;
                sum.type = type;
                std::map<std::pair<int, int>, HomSum> groups;
                for (const auto& T : A) {
                    auto u = u_tableau(i, j, T.rows, p);
                    if (!u) continue;
                    sum.add(*u, T.sgn);
                    if (d <= base + p.g - 3) {
                        // the two entries above d+1 among tail rows base..d+1
                        std::vector<int> big;
                        for (int k = 0; k <= d + 1 - base; ++k)
                            for (int e : T.rows[k])
                                if (e + base > d + 1) big.push_back(e + base);
                        std::sort(big.begin(), big.end());
                        if (big.size() != 2) throw std::logic_error("unexpected tail content in bot1ab grouping");
                        auto& gsum = groups[{big[0], big[1]}];
                        gsum.shape = mu;
                        gsum.type = type;
                        gsum.add(*u, T.sgn);
                    }
                }
                rep.checks.push_back({"bot1", d, t, i, j, 0, 0, zero_after(d, t, sum)});
                for (const auto& [ab, gsum] : groups)
                    rep.checks.push_back({"bot1ab", d, t, i, j, ab.first, ab.second, zero_after(d, t, gsum)});
            }
    }
    return rep;
}

}  // namespace qs
