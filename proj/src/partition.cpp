#include "qspecht/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qs {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

static int parse_int(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("malformed partition token '" + s + "'");
    if (s.size() > 6) throw std::invalid_argument("partition token too large '" + s + "'");
    return std::stoi(s);
}

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Partition parse_partition(const std::string& text) {
    std::string t = trim(text);
    std::vector<int> parts;
    if (t.empty()) return Partition();
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        auto caret = tok.find('^');
        int v, e = 1;
        if (caret == std::string::npos) {
            v = parse_int(tok);
        } else {
            v = parse_int(trim(tok.substr(0, caret)));
            e = parse_int(trim(tok.substr(caret + 1)));
            if (e < 1) throw std::invalid_argument("exponent must be >= 1");
        }
        if (v <= 0) throw std::invalid_argument("partition parts must be positive");
        parts.insert(parts.end(), e, v);
    }
    if (!t.empty() && t.back() == ',') throw std::invalid_argument("trailing comma");
    return Partition(parts);
}

std::string render_partition(const Partition& p) {
    std::string out;
    const auto& v = p.parts();
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(v[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p(1), 0);
    for (int x : p.parts())
        for (int k = 0; k < x; ++k) ++c[k];
    return Partition(c);
}

bool dominates_unchecked(const std::vector<int>& mu, const std::vector<int>& lam) {
    long sm = 0, sl = 0;
    size_t L = std::max(mu.size(), lam.size());
    for (size_t i = 0; i < L; ++i) {
        sm += i < mu.size() ? mu[i] : 0;
        sl += i < lam.size() ? lam[i] : 0;
        if (sm < sl) return false;
    }
    return true;
}

bool dominates(const Partition& mu, const Partition& lam) {
    if (mu.n() != lam.n()) throw std::invalid_argument("dominance needs partitions of the same size");
    return dominates_unchecked(mu.parts(), lam.parts());
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool contains(const Partition& p, Node x) {
    return x.row >= 1 && x.col >= 1 && x.col <= p(x.row);
}

std::vector<Node> addable_nodes(const Partition& p) {
    std::vector<Node> out;
    for (int r = 1; r <= p.length() + 1; ++r) {
        int c = p(r) + 1;
        if (r == 1 || p(r - 1) >= c) out.push_back({r, c});
    }
    return out;
}

std::vector<Node> removable_nodes(const Partition& p) {
    std::vector<Node> out;
    for (int r = 1; r <= p.length(); ++r)
        if (p(r) > p(r + 1)) out.push_back({r, p(r)});
    return out;
}

int residue(Node x) { return (((x.col - x.row) % 2) + 2) % 2; }
int ladder_index(Node x) { return x.row + x.col - 1; }

bool has_broken_ladder(const Partition& p) {
    // exists a < b with lam_a - lam_{a+1} >= 2 and lam_b = lam_{b+1} > 0
    int l = p.length();
    std::optional<int> first_gap;
    for (int a = 1; a <= l; ++a)
        if (p(a) - p(a + 1) >= 2) { first_gap = a; break; }
    if (!first_gap) return false;
    for (int b = *first_gap + 1; b < l; ++b)
        if (p(b) == p(b + 1) && p(b) > 0) return true;
    return false;
}

bool has_broken_ladder_scan(const Partition& p) {
    if (p.empty()) return false;
    int maxk = p(1) + p.length() - 1;
    for (int k = 1; k <= maxk; ++k) {
        std::vector<int> rows;
        for (int r = 1; r <= k; ++r)
            if (contains(p, {r, k + 1 - r})) rows.push_back(r);
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i] != rows[i - 1] + 1) return true;
    }
    return false;
}

Partition regularize(const Partition& p) {
    if (p.empty()) return p;
    std::map<int, int> count;
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p(r); ++c) ++count[r + c - 1];
    std::map<int, int> rowlen;
    std::set<Node> nodes;
    for (auto [k, m] : count)
        for (int r = 1; r <= m; ++r) nodes.insert({r, k + 1 - r});
    std::vector<int> parts;
    for (int r = 1;; ++r) {
        int c = 0;
        while (nodes.count({r, c + 1})) ++c;
        if (c == 0) break;
        parts.push_back(c);
    }
    Partition out(parts);
    if (out.n() != p.n()) throw std::logic_error("regularization did not produce a partition");
    return out;
}

bool is_2regular(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if (p(i) == p(i + 1)) return false;
    return true;
}

bool is_2restricted(const Partition& p) {
    for (int i = 1; i <= p.length(); ++i)
        if (p(i) - p(i + 1) > 1) return false;
    return true;
}

bool is_doubly_singular(const Partition& p) { return !is_2regular(p) && !is_2regular(conjugate(p)); }

RegularityClass regularity_class(const Partition& p) {
    bool reg = is_2regular(p), res = is_2restricted(p);
    if (reg && res) return RegularityClass::Both;
    if (reg) return RegularityClass::TwoRegular;
    if (res) return RegularityClass::TwoRestricted;
    return RegularityClass::DoublySingular;
}

std::string to_string(RegularityClass c) {
    switch (c) {
        case RegularityClass::TwoRegular: return "2-regular";
        case RegularityClass::TwoRestricted: return "2-restricted";
        case RegularityClass::DoublySingular: return "doubly-singular";
        case RegularityClass::Both: return "both-regular-and-restricted";
    }
    return "?";
}

bool is_alternating(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if ((p(i) - p(i + 1)) % 2 == 0) return false;
    return true;
}

int hook_length(const Partition& p, Node x) {
    if (!contains(p, x)) throw std::invalid_argument("node outside the diagram");
    Partition c = conjugate(p);
    return p(x.row) - x.row + c(x.col) - x.col + 1;
}

bool is_s_core(const Partition& p, int s) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    Partition c = conjugate(p);
    for (int r = 1; r <= p.length(); ++r)
        for (int col = 1; col <= p(r); ++col)
            if ((p(r) - r + c(col) - col + 1) % s == 0) return false;
    return true;
}

Partition remove_residue(const Partition& p, int i) {
    std::vector<int> parts = p.parts();
    for (Node x : removable_nodes(p))
        if (residue(x) == i) --parts[x.row - 1];
    return Partition(parts);
}

StructureParams structure_params(const Partition& p) {
    StructureParams sp;
    int l = p.length();
    for (int i = 1; i <= l; ++i) {
        if (p(i) - p(i + 1) >= 2) {
            if (!sp.a_star) sp.a_star = i;
            sp.a_low = i;
        }
        if (i < l && p(i) == p(i + 1)) sp.b = i;
    }
    if (sp.a_low) sp.c = l - *sp.a_low;
    return sp;
}

static void partitions_rec(int left, int maxpart, std::vector<int>& cur,
                           const std::function<void(const Partition&)>& fn) {
    if (left == 0) { fn(Partition(cur)); return; }
    for (int x = std::min(left, maxpart); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(left - x, x, cur, fn);
        cur.pop_back();
    }
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<int> cur;
    partitions_rec(n, n, cur, fn);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace qs
