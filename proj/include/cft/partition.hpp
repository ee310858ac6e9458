#pragma once

// Integer partitions index the graded bases: parts >= 1 for highest weight
// modules, parts >= 2 for the vacuum module of the vertex algebra.
// Canonical order is descending lexicographic, so level 2 lists [2] before
// [1,1] and level 4 runs [4],[3,1],[2,2],[2,1,1],[1,1,1,1].

#include <compare>
#include <string>
#include <vector>

namespace cft {

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool is_empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    int first() const { return parts_.front(); }
    Partition tail() const;
    Partition prepended(int part) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    // Canonical (descending lexicographic) order.
    friend bool operator<(const Partition& a, const Partition& b);

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n with parts >= min_part, in canonical order.
std::vector<Partition> partitions_of(int n, int min_part = 1);

// Number of partitions of n with parts >= min_part.
std::size_t partition_count(int n, int min_part = 1);

}  // namespace cft
