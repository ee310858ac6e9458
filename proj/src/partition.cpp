#include "cft/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cft {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::tail() const {
    if (parts_.empty()) throw std::logic_error("Partition::tail on empty partition");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepended(int part) const {
    if (!parts_.empty() && part < parts_.front())
        throw std::logic_error("Partition::prepended would break ordering");
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(part);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) {
    const auto& x = a.parts_;
    const auto& y = b.parts_;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
        if (x[i] != y[i]) return x[i] > y[i];
    return x.size() > y.size();
}

namespace {

void generate(int remaining, int max_part, int min_part, std::vector<int>& acc,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        acc.push_back(p);
        generate(remaining - p, p, min_part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int min_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    if (min_part < 1) throw std::invalid_argument("partitions_of: min_part must be >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    generate(n, n, min_part, acc, out);
    return out;
}

std::size_t partition_count(int n, int min_part) { return partitions_of(n, min_part).size(); }

}  // namespace cft
