#include "qspecht/homcalc.hpp"

#include <algorithm>

namespace qs {

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<mpq_class>>& a, int cols) {
    std::vector<int> piv;
    size_t row = 0;
    for (int c = 0; c < cols && row < a.size(); ++c) {
        size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        mpq_class inv = 1 / a[row][c];
        for (int k = c; k < cols; ++k) a[row][k] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int k = c; k < cols; ++k)
                if (a[row][k] != 0) a[i][k] -= f * a[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

}  // namespace

std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> a, int cols) {
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
    auto piv = rref(a, cols);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<mpq_class>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

int matrix_rank(std::vector<std::vector<mpq_class>> a, int cols) {
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
    return static_cast<int>(rref(a, cols).size());
}

KernelReport kernel_intersection_check(const HomSum& phi, const Partition& lam, Straightener& st, bool shortcut) {
    Composition type(lam.parts());
    if (phi.type != type) throw std::invalid_argument("homomorphism type differs from lambda");
    KernelReport rep;
    HomSum canon = st.semistandardize(phi);
    for (int d = 1; d < lam.length(); ++d)
        for (int t = 1; t <= lam(d + 1); ++t) {
            ++rep.total_pairs;
            if (shortcut && !dominates_unchecked(phi.shape.parts(), sorted_desc(lambda_dt(type, d, t)))) {
                rep.skipped_by_dominance.emplace_back(d, t);
                continue;
            }
            HomSum r = st.semistandardize(compose_psi(d, t, canon, false, st.options().q));
            if (!r.is_zero()) rep.failed_pairs.emplace_back(d, t);
        }
    return rep;
}

EHomBasis ehom_specht_basis(const Partition& mu, const Partition& lam, Straightener& st) {
    if (mu.n() != lam.n()) throw std::invalid_argument("mu and lambda have different sizes");
    Composition type(lam.parts());
    EHomBasis b;
    b.semistandard = enumerate_tableaux(mu, type, true);
    const int n = static_cast<int>(b.semistandard.size());
    if (n == 0) return b;
    std::vector<std::vector<mpq_class>> rows;
    for (int d = 1; d < lam.length(); ++d)
        for (int t = 1; t <= lam(d + 1); ++t) {
            Composition nt = lambda_dt(type, d, t);
            if (!dominates_unchecked(mu.parts(), sorted_desc(nt))) continue;
            std::map<Tableau, int> idx;
            std::vector<std::vector<mpq_class>> block;
            for (int j = 0; j < n; ++j) {
                HomSum img = st.semistandardize(
                    compose_psi(d, t, single(mu, type, b.semistandard[j]), false, st.options().q));
                for (const auto& [u, c] : img.terms) {
                    auto [it, fresh] = idx.emplace(u, static_cast<int>(block.size()));
                    if (fresh) block.emplace_back(n, 0);
                    block[it->second][j] = c;
                }
            }
            for (auto& r : block) rows.push_back(std::move(r));
        }
    b.basis = nullspace(std::move(rows), n);
    return b;
}

bool in_span(const EHomBasis& b, const HomSum& phi) {
    const int n = static_cast<int>(b.semistandard.size());
    std::vector<mpq_class> v(n, 0);
    for (const auto& [t, c] : phi.terms) {
        auto it = std::lower_bound(b.semistandard.begin(), b.semistandard.end(), t);
        if (it == b.semistandard.end() || *it != t) return false;
        v[it - b.semistandard.begin()] = c;
    }
    if (n == 0) return true;
    auto m = b.basis;
    int r0 = matrix_rank(m, n);
    m.push_back(std::move(v));
    return matrix_rank(std::move(m), n) == r0;
}

std::pair<Partition, Partition> row_removal_reduce(const Partition& mu, const Partition& lam) {
    int x = 0;
    while (x < mu.length() && x < lam.length() && mu(x + 1) == lam(x + 1)) ++x;
    std::vector<int> a(mu.parts().begin() + x, mu.parts().end());
    std::vector<int> b(lam.parts().begin() + x, lam.parts().end());
    return {Partition(a), Partition(b)};
}

}  // namespace qs
