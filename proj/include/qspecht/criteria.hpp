#pragma once

#include "qspecht/partition.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qs {

bool is_fm_partition(const Partition& p);
bool is_cp_reducible(const Partition& p);

struct MHParameters {
    int x = 0, s = 0, s_prime = 0, f = 0, g = 0;
    bool operator==(const MHParameters& o) const {
        return x == o.x && s == o.s && s_prime == o.s_prime && f == o.f && g == o.g;
    }
};
std::optional<MHParameters> mh_parameters(const Partition& p);
bool is_mh_reducible(const Partition& p);
Partition mh_target_mu(const Partition& p, int x);

bool is_llt_reducible(const Partition& p);
bool alternating_in(const Partition& mu, const Partition& lam);

struct LLTTableau {
    Partition shape;
    std::vector<std::vector<int>> entries;  // entries[r-1][c-1]
};
LLTTableau llt_tableau(const Partition& lam, const Partition& mu);
long n_statistic(const Partition& lam, const Partition& mu);

struct LLTWitness {
    Partition mu, mu_tilde;
    int case_no = 1;
};
LLTWitness llt_witness_pair(const Partition& lam);

bool is_pointed(const Partition& p);
Partition mu_reduction(const Partition& p);

enum class Verdict { Irreducible, IrreduciblePerConjecture, Reducible, Unknown };
std::string to_string(Verdict v);

struct ClassificationRecord {
    Partition partition;
    int p = 0;
    RegularityClass cls = RegularityClass::Both;
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> witnesses;
    bool fm = false;
    bool fm_conjugate = false;
};

// Memo store for classification records, keyed by (partition, p).
class MemoStore {
public:
    std::optional<ClassificationRecord> get(const Partition& p, int ch) const;
    void put(const ClassificationRecord& r);  // insert-if-absent
    size_t size() const;
    std::vector<ClassificationRecord> snapshot() const;

private:
    mutable std::mutex mu_;
    std::map<std::pair<std::vector<int>, int>, ClassificationRecord> m_;
};

// returns i in {0,1}
std::optional<int> is_inductively_reducible(const Partition& p, MemoStore* store = nullptr);

// witnesses from the doubly-singular search (BrokenLadder, CP, ..., Inductive:i)
std::vector<std::string> reducibility_witnesses(const Partition& p, MemoStore* store = nullptr);

bool is_prime(int p);
ClassificationRecord classify(const Partition& p, int ch = 0, MemoStore* store = nullptr);

}  // namespace qs
