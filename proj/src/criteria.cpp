#include "qspecht/criteria.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qs {

bool is_fm_partition(const Partition& p) {
    if (!is_doubly_singular(p)) return false;
    int l = p.length();
    int a = 0, b = 0;
    for (int i = 1; i <= l; ++i) {
        if (p(i) - p(i + 1) >= 2) a = i;
        if (i < l && p(i) == p(i + 1)) b = i;
    }
    int c = l - a;
    for (int i = 1; i <= l; ++i)
        if (i != a && p(i) - p(i + 1) > 1) return false;
    if (!(p(b) >= a - 1 && a - 1 >= b)) return false;
    for (int i = 1; i < c; ++i)
        if (!(p(i) > p(i + 1))) return false;
    std::set<int> res;
    for (Node x : addable_nodes(p)) {
        if (c == 0 && (x.row == 1 || x.col == 1)) continue;
        res.insert(residue(x));
    }
    return res.size() <= 1;
}

bool is_cp_reducible(const Partition& p) {
    auto add = addable_nodes(p);
    auto rem = removable_nodes(p);
    for (Node u : add)
        for (Node v : rem) {
            int m = ladder_index(u), l = ladder_index(v);
            if (m > l && (m - l) % 2 == 0) return true;
        }
    return false;
}

static bool mh_valid(int s, int sp, int f, int g) {
    if (f < 0 || g < 2 || sp < s || s < 2) return false;
    bool odd = (s % 2 == 1) && (sp % 2 == 1);
    bool even = s == 2 && sp % 2 == 0 && f == 0;
    return odd || even;
}

static std::optional<MHParameters> mh_match_tail(const std::vector<int>& nu) {
    if (nu.empty()) return std::nullopt;
    int M = nu[0];
    size_t s = 0;
    while (s < nu.size() && nu[s] == M) ++s;
    std::vector<int> rest(nu.begin() + s, nu.end());
    if (rest.empty() || rest.back() != 2) return std::nullopt;
    // B: maximal tail run g, g-1, ..., 2
    size_t bstart = rest.size() - 1;
    while (bstart > 0 && rest[bstart - 1] == rest[bstart] + 1) --bstart;
    int g = rest[bstart];
    // A: M-1, M-2, ..., consecutive
    int f = static_cast<int>(bstart);
    for (int k = 0; k < f; ++k)
        if (rest[k] != M - 1 - k) return std::nullopt;
    int sp = M - f - g;
    if (!mh_valid(static_cast<int>(s), sp, f, g)) return std::nullopt;
    MHParameters r;
    r.s = static_cast<int>(s);
    r.s_prime = sp;
    r.f = f;
    r.g = g;
    return r;
}

std::optional<MHParameters> mh_parameters(const Partition& p) {
    int l = p.length();
    for (int x = 0; x < l; ++x) {
        if (x >= 1 && !(p(x) > p(x + 1))) continue;  // (x+1, lam_{x+1}+1) addable
        std::vector<int> nu(p.parts().begin() + x, p.parts().end());
        auto m = mh_match_tail(nu);
        if (m) {
            m->x = x;
            return m;
        }
    }
    return std::nullopt;
}

bool is_mh_reducible(const Partition& p) { return mh_parameters(p).has_value(); }

Partition mh_target_mu(const Partition& p, int x) {
    if (x < 0 || x >= p.length()) throw std::invalid_argument("invalid x");
    if (x >= 1 && !(p(x) > p(x + 1))) throw std::invalid_argument("invalid x");
    std::vector<int> nu(p.parts().begin() + x, p.parts().end());
    if (!mh_match_tail(nu)) throw std::invalid_argument("partition is not MH-reducible at this x");
    std::vector<int> mu = p.parts();
    mu[x] += 1;
    mu[x + 1] += 1;
    mu.back() -= 2;
    return Partition(mu);  // validates
}

bool is_llt_reducible(const Partition& p) {
    int l = p.length();
    if (is_2regular(p) || has_broken_ladder(p)) return false;
    if (p(1) < l + 1 || p(l) < 2) return false;
    for (int x = 1; x < l; ++x)
        if (p(x) - p(x + 1) > 1) return true;
    return false;
}

bool alternating_in(const Partition& mu, const Partition& lam) {
    for (int i = 1; i <= std::max(mu.length(), lam.length()); ++i)
        if (mu(i) > lam(i)) return false;
    for (int i = 1; i < lam.length(); ++i)
        if ((mu(i) - mu(i + 1)) % 2 == 0) return false;
    return true;
}

LLTTableau llt_tableau(const Partition& lam, const Partition& mu) {
    if (!alternating_in(mu, lam)) throw std::invalid_argument("mu is not alternating in lambda");
    LLTTableau T;
    T.shape = lam;
    T.entries.resize(lam.length());
    for (int r = 1; r <= lam.length(); ++r) T.entries[r - 1].assign(lam(r), -1);
    std::vector<int> cur(lam.length(), 0);
    for (int r = 1; r <= lam.length(); ++r) {
        cur[r - 1] = mu(r);
        for (int c = 1; c <= mu(r); ++c) T.entries[r - 1][c - 1] = 0;
    }
    for (int j = 1; cur != lam.parts(); ++j) {
        Partition m(cur);
        bool grew = false;
        for (Node x : addable_nodes(m)) {
            if (contains(lam, x)) {
                T.entries[x.row - 1][x.col - 1] = j;
                cur[x.row - 1] += 1;
                grew = true;
            }
        }
        if (!grew) throw std::logic_error("LLT growth stalled before reaching lambda");
    }
    return T;
}

long n_statistic(const Partition& lam, const Partition& mu) {
    LLTTableau T = llt_tableau(lam, mu);
    std::vector<int> last(lam.length());
    for (int m = 1; m <= lam.length(); ++m) last[m - 1] = T.entries[m - 1][lam(m) - 1];
    long N = 0;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam(r); ++c) {
            int j = T.entries[r - 1][c - 1];
            for (int m = 1; m < r; ++m) {
                int t = last[m - 1];
                if (t >= j) continue;
                N += ((t - j) % 2 != 0) ? 1 : -1;
            }
        }
    return N;
}

static int max_with_parity(int bound, int target_parity) {
    // maximal v <= bound with v = target_parity mod 2
    int v = bound;
    if (((v % 2) + 2) % 2 != target_parity) --v;
    return v;
}

LLTWitness llt_witness_pair(const Partition& lam) {
    if (!is_llt_reducible(lam)) throw std::invalid_argument("partition is not LLT-reducible");
    int l = lam.length();
    int x = 0;
    for (int i = 1; i < l; ++i)
        if (lam(i) - lam(i + 1) > 1) x = i;
    LLTWitness w;
    int target = lam(l) + l;
    if (lam(1) + 1 >= target) {
        w.case_no = 1;
        std::vector<int> sigma(x + 1, 0);
        // sigma_1 + 1 = target, sigma_i + i = target (mod 2)
        sigma[1] = max_with_parity(lam(1), (((target - 1) % 2) + 2) % 2);
        for (int i = 2; i <= x; ++i)
            sigma[i] = max_with_parity(std::min(lam(i), sigma[i - 1] - 1), (((target - i) % 2) + 2) % 2);
        std::vector<int> a, b;
        for (int i = 1; i <= x; ++i) {
            a.push_back(sigma[i]);
            b.push_back(sigma[i]);
        }
        for (int i = x + 1; i <= l; ++i) {
            a.push_back(lam(i));
            b.push_back(lam(i) - 2);
        }
        w.mu = Partition(a);
        w.mu_tilde = Partition(b);
    } else {
        w.case_no = 2;
        std::vector<int> a, b;
        for (int i = 1; i <= l; ++i) {
            a.push_back(lam(1) - i + 1);
            b.push_back(i <= x ? lam(1) - i + 1 : lam(1) - i - 1);
        }
        w.mu = Partition(a);
        w.mu_tilde = Partition(b);
    }
    return w;
}

bool is_pointed(const Partition& p) {
    auto sp = structure_params(p);
    return sp.a_star && sp.b && *sp.b + 1 == *sp.a_star;
}

Partition mu_reduction(const Partition& p) {
    if (!is_doubly_singular(p) || has_broken_ladder(p))
        throw std::invalid_argument("mu-reduction needs a doubly-singular partition without broken ladders");
    auto rem = removable_nodes(p);
    std::set<int> res;
    for (Node x : rem) res.insert(residue(x));
    std::vector<int> parts = p.parts();
    if (res.size() == 1) {
        for (Node x : rem) --parts[x.row - 1];
        return Partition(parts);
    }
    if (!is_pointed(p)) throw std::invalid_argument("removable nodes have mixed residues and partition is not pointed");
    int point_row = *structure_params(p).a_star;
    std::set<int> rest;
    for (Node x : rem)
        if (x.row != point_row) rest.insert(residue(x));
    if (rest.size() > 1) throw std::invalid_argument("removable nodes other than the point have mixed residues");
    for (Node x : rem)
        if (x.row != point_row) --parts[x.row - 1];
    return Partition(parts);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "irreducible";
        case Verdict::IrreduciblePerConjecture: return "irreducible-per-conjecture";
        case Verdict::Reducible: return "reducible";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::optional<ClassificationRecord> MemoStore::get(const Partition& p, int ch) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = m_.find({p.parts(), ch});
    if (it == m_.end()) return std::nullopt;
    return it->second;
}

void MemoStore::put(const ClassificationRecord& r) {
    std::lock_guard<std::mutex> lk(mu_);
    m_.emplace(std::make_pair(r.partition.parts(), r.p), r);
}

size_t MemoStore::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return m_.size();
}

std::vector<ClassificationRecord> MemoStore::snapshot() const {
    std::lock_guard<std::mutex> lk(mu_);
    std::vector<ClassificationRecord> out;
    for (const auto& [k, v] : m_) out.push_back(v);
    return out;
}

// char 0 reducibility of a 2-regular or 2-restricted partition
static bool carter_reducible(const Partition& p) {
    if (is_2regular(p)) return !is_alternating(p);
    return !is_alternating(conjugate(p));
}

std::optional<int> is_inductively_reducible(const Partition& p, MemoStore* store) {
    (void)store;
    for (int i = 0; i <= 1; ++i) {
        Partition q = remove_residue(p, i);
        if (q == p) continue;
        if (is_2regular(q) || is_2restricted(q)) {
            if (carter_reducible(q)) return i;
        } else if (!is_fm_partition(q) && !is_fm_partition(conjugate(q))) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::string> reducibility_witnesses(const Partition& p, MemoStore* store) {
    std::vector<std::string> w;
    Partition c = conjugate(p);
    if (has_broken_ladder(p)) w.push_back("BrokenLadder");
    if (is_cp_reducible(p)) w.push_back("CP");
    if (is_cp_reducible(c)) w.push_back("CPConjugate");
    if (is_mh_reducible(p)) w.push_back("MH");
    if (is_mh_reducible(c)) w.push_back("MHConjugate");
    if (is_llt_reducible(p)) w.push_back("LLT");
    if (is_llt_reducible(c)) w.push_back("LLTConjugate");
    if (auto i = is_inductively_reducible(p, store)) w.push_back("Inductive:" + std::to_string(*i));
    return w;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ClassificationRecord classify(const Partition& p, int ch, MemoStore* store) {
    if (ch != 0 && !is_prime(ch)) throw std::invalid_argument("characteristic must be 0 or a prime");
    if (store) {
        if (auto r = store->get(p, ch)) return *r;
    }
    ClassificationRecord r;
    r.partition = p;
    r.p = ch;
    r.cls = regularity_class(p);
    Partition c = conjugate(p);
    r.fm = is_fm_partition(p);
    r.fm_conjugate = is_fm_partition(c);
    if (r.cls != RegularityClass::DoublySingular) {
        if (ch != 0) {
            r.verdict = Verdict::Unknown;
        } else if (is_2regular(p)) {
            r.verdict = is_alternating(p) ? Verdict::Irreducible : Verdict::Reducible;
            if (r.verdict == Verdict::Reducible) r.witnesses.push_back("Carter");
        } else {
            r.verdict = is_alternating(c) ? Verdict::Irreducible : Verdict::Reducible;
            if (r.verdict == Verdict::Reducible) r.witnesses.push_back("CarterConjugate");
        }
    } else {
        r.witnesses = reducibility_witnesses(p, store);
        if (ch != 0 && !is_s_core(p, 2 * ch)) r.witnesses.push_back("NotCore:" + std::to_string(2 * ch));
        bool fm_any = r.fm || r.fm_conjugate;
        if (!r.witnesses.empty() || !fm_any) r.verdict = Verdict::Reducible;
        else r.verdict = Verdict::IrreduciblePerConjecture;
    }
    if (store) store->put(r);
    return r;
}

}  // namespace qs
