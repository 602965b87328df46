#include "qspecht/homcalc.hpp"

#include "relations.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qs {

using detail::Shape;
using Lin = std::vector<std::pair<std::string, mpq_class>>;

namespace {

struct Gen {
    int r, d, variant;
};

struct Ord {
    bool nonss;
    long negpot;
    std::string c;
    bool operator<(const Ord& o) const {
        if (nonss != o.nonss) return nonss < o.nonss;
        if (negpot != o.negpot) return negpot < o.negpot;
        return c < o.c;
    }
};

// Rewriting context for one shape and one type length.  Every relation is kept as a rule
// "leading tableau -> combination of smaller ones"; new relations are reduced against the
// existing rules first (incremental Gaussian elimination).
struct Context {
    Shape s;
    detail::QRing ring;
    std::unordered_map<std::string, Lin> rules;
    std::unordered_map<std::string, Lin> nf;  // fully semistandard expansions
    std::unordered_map<std::string, std::vector<Gen>> pending;  // relations not yet used

    Context(Shape sh, const mpq_class& q) : s(std::move(sh)), ring(q) {}

    Ord ord(const std::string& c) const { return {!detail::ss_code(c, s), -detail::potential(c, s), c}; }
};

}  // namespace

struct Straightener::Impl {
    StraightenOptions opt;
    std::map<std::pair<std::vector<int>, int>, std::unique_ptr<Context>> ctx;
    std::mt19937_64 rng;
    long used = 0;
    long fallbacks = 0;
    long budget = 0;

    explicit Impl(const StraightenOptions& o) : opt(o), rng(o.seed.value_or(0)) {
        budget = o.budget > 0 ? o.budget : default_budget();
    }

    Context& context(const Partition& mu, int L) {
        auto key = std::make_pair(mu.parts(), L);
        auto it = ctx.find(key);
        if (it == ctx.end()) {
            Shape s;
            s.rows = mu.parts();
            s.L = L;
            it = ctx.emplace(key, std::make_unique<Context>(s, opt.q)).first;
        }
        return *it->second;
    }

    // Which relations T has, as (row, entry, variant) triples; cheap to list, built on demand.
    // Relations whose other terms are all more dominant than T come first.
    std::vector<Gen> generators(Context& cx, const std::string& c) {
        std::vector<Gen> mono, other;
        const Shape& s = cx.s;
        for (int r = 0; r + 1 < s.R(); ++r) {
            int minr = s.L, maxn = -1;
            for (int v = 0; v < s.L; ++v)
                if (detail::at(c, s, r, v)) { minr = v; break; }
            for (int v = s.L - 1; v >= 0; --v)
                if (detail::at(c, s, r + 1, v)) { maxn = v; break; }
            for (int variant = 1; variant <= 2; ++variant) {
                if (variant == 2 && s.rows[r] != s.rows[r + 1]) continue;
                for (int d = 0; d < s.L; ++d) {
                    int src = variant == 1 ? r + 1 : r;
                    if (!detail::at(c, s, src, d)) continue;
                    bool is_mono = variant == 1 ? d <= minr : d >= maxn;
                    (is_mono ? mono : other).push_back({r, d, variant});
                }
            }
        }
        if (opt.seed) {
            std::shuffle(mono.begin(), mono.end(), rng);
            std::shuffle(other.begin(), other.end(), rng);
        }
        mono.insert(mono.end(), other.begin(), other.end());
        return mono;
    }

    Lin build(Context& cx, const std::string& c, const Gen& g) {
        auto terms = detail::relation(c, cx.s, g.r, g.d, g.variant, cx.ring);
        Lin rel;
        rel.reserve(terms.size() + 1);
        rel.emplace_back(c, mpq_class(1));
        for (auto& [u, v] : terms) rel.emplace_back(std::move(u), -v);
        return rel;
    }

    std::vector<Lin> relations(Context& cx, const std::string& c) {
        std::vector<Lin> out;
        for (const auto& g : generators(cx, c)) out.push_back(build(cx, c, g));
        return out;
    }

    void ensure(Context& cx, const std::string& c) {
        if (cx.pending.count(c)) return;
        auto gs = generators(cx, c);
        std::reverse(gs.begin(), gs.end());  // consumed from the back
        cx.pending[c] = std::move(gs);
    }

    Lin reduce(Context& cx, const Lin& in) {
        std::map<Ord, mpq_class> w;
        auto addto = [&](const std::string& c, const mpq_class& v) {
            if (v == 0) return;
            Ord o = cx.ord(c);
            auto [it, fresh] = w.emplace(std::move(o), v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) w.erase(it);
            }
        };
        for (const auto& [c, v] : in) addto(c, v);
        Lin out;
        while (!w.empty()) {
            auto it = std::prev(w.end());
            const bool nonss = it->first.nonss;
            std::string c = it->first.c;
            mpq_class v = it->second;
            w.erase(it);
            if (!nonss) {
                out.emplace_back(std::move(c), std::move(v));
                continue;
            }
            auto n = cx.nf.find(c);
            if (n != cx.nf.end()) {
                for (const auto& [u, x] : n->second) addto(u, v * x);
                continue;
            }
            auto r = cx.rules.find(c);
            if (r != cx.rules.end()) {
                for (const auto& [u, x] : r->second) addto(u, v * x);
                continue;
            }
            out.emplace_back(std::move(c), std::move(v));
        }
        return out;  // descending order
    }

    // returns the leading tableau of the new rule, or empty if the relation was redundant
    std::string add(Context& cx, const Lin& rel) {
        if (++used > budget) throw BudgetExceeded("straightening budget exceeded (" + std::to_string(budget) + " relations)");
        Lin e = reduce(cx, rel);
        if (e.empty()) return {};
        const std::string lead = e.front().first;
        if (detail::ss_code(lead, cx.s))
            throw std::logic_error("inconsistent straightening relations among semistandard tableaux");
        mpq_class c = e.front().second;
        Lin rhs;
        rhs.reserve(e.size() - 1);
        for (size_t i = 1; i < e.size(); ++i) rhs.emplace_back(e[i].first, -e[i].second / c);
        cx.rules[lead] = std::move(rhs);
        return lead;
    }

    void set_zero(Context& cx, const std::string& c) {
        cx.rules[c] = {};
        cx.nf[c] = {};
    }

    bool try_pending(Context& cx, const std::string& x, const std::string& target) {
        auto& q = cx.pending[x];
        while (!q.empty()) {
            Gen g = q.back();
            q.pop_back();
            add(cx, build(cx, x, g));
            if (cx.rules.count(target)) return true;
        }
        return false;
    }

    // W has no rule and its own relations are used up: bring in relations of other tableaux.
    void fallback(Context& cx, const std::string& W) {
        ++fallbacks;
        Ord ow = cx.ord(W);
        std::set<Ord> heap;
        std::unordered_set<std::string> seen{W};
        auto push_terms = [&](const std::string& x, bool above_only) {
            for (const auto& rel : relations(cx, x))
                for (const auto& [u, v] : rel) {
                    if (seen.count(u)) continue;
                    Ord o = cx.ord(u);
                    if (above_only && (!o.nonss || !(ow < o))) continue;
                    seen.insert(u);
                    heap.insert(std::move(o));
                }
        };
        // phase 1: tableaux above W, nearest first
        push_terms(W, true);
        while (!heap.empty()) {
            std::string x = heap.begin()->c;
            heap.erase(heap.begin());
            if (cx.rules.count(x) && cx.pending.count(x) && cx.pending[x].empty()) {
                push_terms(x, true);
                continue;
            }
            if (opt.use_toomany && detail::toomany_code(x, cx.s) && !cx.rules.count(x)) {
                set_zero(cx, x);
            } else {
                ensure(cx, x);
                if (try_pending(cx, x, W)) return;
            }
            push_terms(x, true);
        }
        // phase 2: everything reachable
        seen.clear();
        seen.insert(W);
        std::deque<std::string> queue{W};
        while (!queue.empty()) {
            std::string x = queue.front();
            queue.pop_front();
            ensure(cx, x);
            if (try_pending(cx, x, W)) return;
            for (const auto& rel : relations(cx, x))
                for (const auto& [u, v] : rel)
                    if (seen.insert(u).second) queue.push_back(u);
        }
        // phase 3: W may only occur on the right of relations of tableaux not reachable from it
        Composition type(cx.s.L, 0);
        for (int r = 0; r < cx.s.R(); ++r)
            for (int v = 0; v < cx.s.L; ++v) type[v] += detail::at(W, cx.s, r, v);
        for (const auto& t : enumerate_tableaux(Partition(cx.s.rows), type, false)) {
            std::string x = detail::encode(t, cx.s.L);
            ensure(cx, x);
            if (try_pending(cx, x, W)) return;
        }
        throw std::logic_error("straightening relations do not determine tableau " + tableau_str(detail::decode(W, cx.s)));
    }

    const Lin& resolve(Context& cx, const std::string& T) {
        auto n = cx.nf.find(T);
        if (n != cx.nf.end()) return n->second;
        if (detail::ss_code(T, cx.s)) {
            cx.nf[T] = Lin{{T, mpq_class(1)}};
            return cx.nf[T];
        }
        if (opt.use_toomany && detail::toomany_code(T, cx.s)) {
            set_zero(cx, T);
            return cx.nf[T];
        }
        for (;;) {
            Lin e = reduce(cx, Lin{{T, mpq_class(1)}});
            const std::string* W = nullptr;
            for (const auto& [u, v] : e)
                if (!detail::ss_code(u, cx.s)) { W = &u; break; }  // e is descending
            if (!W) {
                cx.nf[T] = std::move(e);
                return cx.nf[T];
            }
            std::string w = *W;
            if (opt.use_toomany && detail::toomany_code(w, cx.s)) {
                set_zero(cx, w);
                continue;
            }
            ensure(cx, w);
            if (try_pending(cx, w, w)) continue;
            fallback(cx, w);
        }
    }
};

Straightener::Straightener(StraightenOptions opt) : opt_(opt), impl_(std::make_unique<Impl>(opt)) {}
Straightener::~Straightener() = default;

long Straightener::relations_used() const { return impl_->used; }
long Straightener::fallbacks() const { return impl_->fallbacks; }

HomSum Straightener::semistandardize(const HomSum& phi) {
    std::lock_guard<std::mutex> lk(mu_);
    HomSum out;
    out.shape = phi.shape;
    out.type = phi.type;
    if (phi.terms.empty()) return out;
    int L = static_cast<int>(phi.type.size());
    Context& cx = impl_->context(phi.shape, L);
    for (const auto& [t, c] : phi.terms) {
        std::string code = detail::encode(t, L);
        const Lin& e = impl_->resolve(cx, code);
        for (const auto& [u, v] : e) out.add(detail::decode(u, cx.s), c * v);
    }
    return out;
}

HomSum Straightener::semistandardize(const Tableau& t, const Composition& type) {
    return semistandardize(single(tableau_shape(t), type, t));
}

}  // namespace qs
