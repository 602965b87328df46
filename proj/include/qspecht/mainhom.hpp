#pragma once

#include "qspecht/homcalc.hpp"
#include "qspecht/partition.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qs {

struct MHParams {
    int s = 0, s_prime = 0, f = 0, g = 0;
    bool operator==(const MHParams& o) const {
        return s == o.s && s_prime == o.s_prime && f == o.f && g == o.g;
    }
};

void validate(const MHParams& p);  // throws std::invalid_argument
bool is_odd_regime(const MHParams& p);
std::string to_string(const MHParams& p);  // "(3,3,0,2)"

std::pair<Partition, Partition> mu_lambda_of(const MHParams& p);

// rows of a (2^k) tableau, cells kept in position order
using TailTableau = std::vector<std::array<int, 2>>;

std::vector<std::pair<int, int>> index_set(int s);
long m_coeff(int i, int j, int s);

Composition nu_d(int d, int s);
TailTableau s_tableau(int i, int j, int s);
TailTableau s_d_tableau(int d, int i, int j, int s);
// number of tableaux of the given type satisfying the chain condition (brute force)
int count_chain_fillings(int i, int j, const Composition& type);

struct ATableau {
    TailTableau rows;
    int sgn = 1;
};
std::vector<ATableau> enumerate_A(int g);
int first_split_row(const TailTableau& t);  // 1-based; rows-count when only the last split holds

// Usable mu-tableau whose row k ends with tails[k]; nullopt when not row-standard.
std::optional<Tableau> decode_usable(const Partition& mu, const TailTableau& tails);

std::optional<Tableau> u_tableau(int i, int j, const TailTableau& T, const MHParams& p);
std::optional<Tableau> u_d_tableau(int d, int i, int j, const TailTableau& T, const MHParams& p);
Tableau u_tableau_even(const TailTableau& T, const MHParams& p);

HomSum build_theta(const MHParams& p);

struct MainhomReport {
    MHParams params;
    Partition mu, lambda;
    size_t support = 0;
    bool all_semistandard = false;
    KernelReport kernel;
    std::vector<std::pair<int, int>> outside_list_not_killed;
    long relations_used = 0;
    bool verified() const {
        return support > 0 && all_semistandard && kernel.failed_pairs.empty() && outside_list_not_killed.empty();
    }
};
MainhomReport verify_mainhom(const MHParams& p, Straightener& st);

struct CancellationCheck {
    std::string name;  // "topbit(a)", "topcory", "middle", "middle2", "bot1", "bot1ab"
    int d = 0, t = 1;
    int i = 0, j = 0;
    int a = 0, b = 0;
    bool holds = false;
};
struct CancellationReport {
    std::vector<CancellationCheck> checks;
    int skipped = 0;  // instances involving a tableau that is not row-standard
    bool all_hold() const;
    int count(const std::string& name) const;
    int failures() const;
};
// topbit case letter for (d,i,j), or 0 when no case applies
char topbit_case(int d, int i, int j);
CancellationReport verify_paper_cancellations(const MHParams& p, Straightener& st);

}  // namespace qs
