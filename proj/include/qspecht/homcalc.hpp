#pragma once

#include "qspecht/partition.hpp"
#include "qspecht/qarith.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qs {

using Composition = std::vector<int>;
// A row-standard tableau: rows[r] is the weakly increasing row r+1.
using Tableau = std::vector<std::vector<int>>;

bool is_row_standard(const Tableau& t);
bool is_semistandard(const Tableau& t);
Partition tableau_shape(const Tableau& t);
Composition tableau_type(const Tableau& t, int length);
std::string tableau_str(const Tableau& t);  // "[[1,1],[2]]"

std::vector<Tableau> enumerate_tableaux(const Partition& mu, const Composition& nu, bool semistandard_only);

Composition lambda_dt(const Partition& lam, int d, int t);
Composition lambda_dt(const Composition& lam, int d, int t);

template <class C>
struct FormalSum {
    Partition shape;
    Composition type;
    std::map<Tableau, C> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Tableau& t, const C& c) {
        auto [it, fresh] = terms.emplace(t, c);
        if (!fresh) it->second += c;
        if (it->second == C(0)) terms.erase(it);
    }
    bool operator==(const FormalSum& o) const { return terms == o.terms; }
    bool operator!=(const FormalSum& o) const { return !(*this == o); }
};

using HomSum = FormalSum<mpq_class>;          // coefficients at a numeric q (default -1)
using GenericHomSum = FormalSum<LaurentPoly>;  // coefficients in Z[q, q^-1]

HomSum single(const Partition& shape, const Composition& type, const Tableau& t, const mpq_class& c = 1);
HomSum specialize(const GenericHomSum& s, const mpq_class& q);
bool is_canonical(const HomSum& s);

// Composition with psi_{d,t}.  With shortcut, returns zero unless mu dominates sorted lambda(d,t).
HomSum compose_psi(int d, int t, const HomSum& phi, bool shortcut = true, const mpq_class& q = -1);
GenericHomSum compose_psi_generic(int d, int t, const GenericHomSum& phi, bool shortcut = true);

// One application of the straightening relation, variant 1 or 2 (rows r, r+1; r is 1-based).
HomSum straighten_step(const Tableau& t, const Composition& type, int r, int d, int variant,
                       const mpq_class& q = -1);
GenericHomSum straighten_step_generic(const Tableau& t, const Composition& type, int r, int d, int variant);

bool is_zero_by_toomany(const Tableau& t);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long default_budget();  // QSPECHT_BUDGET env var or built-in default

struct StraightenOptions {
    mpq_class q = -1;
    std::optional<uint64_t> seed;  // shuffles the order in which relations are tried
    long budget = 0;               // 0: default_budget()
    bool use_toomany = true;
};

class Straightener {
public:
    explicit Straightener(StraightenOptions opt = {});
    ~Straightener();
    Straightener(const Straightener&) = delete;
    Straightener& operator=(const Straightener&) = delete;

    HomSum semistandardize(const HomSum& phi);
    HomSum semistandardize(const Tableau& t, const Composition& type);

    long relations_used() const;
    long fallbacks() const;
    const StraightenOptions& options() const { return opt_; }

private:
    struct Impl;
    StraightenOptions opt_;
    std::unique_ptr<Impl> impl_;
    std::mutex mu_;
};

struct KernelReport {
    int total_pairs = 0;
    std::vector<std::pair<int, int>> failed_pairs;
    std::vector<std::pair<int, int>> skipped_by_dominance;
};
KernelReport kernel_intersection_check(const HomSum& phi, const Partition& lam, Straightener& st,
                                       bool shortcut = true);

struct EHomBasis {
    std::vector<Tableau> semistandard;          // coordinates
    std::vector<std::vector<mpq_class>> basis;  // kernel vectors
    int dimension() const { return static_cast<int>(basis.size()); }
};
EHomBasis ehom_specht_basis(const Partition& mu, const Partition& lam, Straightener& st);
// true iff phi (canonical, shape mu, type lam) lies in the span of the basis
bool in_span(const EHomBasis& b, const HomSum& phi);

std::pair<Partition, Partition> row_removal_reduce(const Partition& mu, const Partition& lam);

// exact nullspace of a dense rational matrix (rows x cols)
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> a, int cols);
int matrix_rank(std::vector<std::vector<mpq_class>> a, int cols);

}  // namespace qs
