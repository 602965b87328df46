#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates, strips trailing zeros
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based, reads 0 beyond the last part
    int operator()(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct Node {
    int row = 1;
    int col = 1;
    bool operator==(const Node& o) const { return row == o.row && col == o.col; }
    bool operator<(const Node& o) const { return row != o.row ? row < o.row : col < o.col; }
};

Partition parse_partition(const std::string& text);
std::string render_partition(const Partition& p);  // "3,2^3"

Partition conjugate(const Partition& p);
bool dominates(const Partition& mu, const Partition& lam);  // throws on size mismatch
bool dominates_unchecked(const std::vector<int>& mu, const std::vector<int>& lam);
std::vector<int> sorted_desc(std::vector<int> v);

std::vector<Node> addable_nodes(const Partition& p);
std::vector<Node> removable_nodes(const Partition& p);
bool contains(const Partition& p, Node x);

int residue(Node x);
int ladder_index(Node x);

bool has_broken_ladder(const Partition& p);       // (a,b) criterion
bool has_broken_ladder_scan(const Partition& p);  // per-ladder scan
Partition regularize(const Partition& p);

enum class RegularityClass { TwoRegular, TwoRestricted, DoublySingular, Both };
std::string to_string(RegularityClass c);
bool is_2regular(const Partition& p);
bool is_2restricted(const Partition& p);
bool is_doubly_singular(const Partition& p);
RegularityClass regularity_class(const Partition& p);

bool is_alternating(const Partition& p);
int hook_length(const Partition& p, Node x);
bool is_s_core(const Partition& p, int s);
Partition remove_residue(const Partition& p, int i);

struct StructureParams {
    std::optional<int> a_star;
    std::optional<int> a_low;
    std::optional<int> b;
    std::optional<int> c;
};
StructureParams structure_params(const Partition& p);

// reverse lexicographic order: (n), (n-1,1), ..., (1^n)
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> enumerate_partitions(int n);

}  // namespace qs
