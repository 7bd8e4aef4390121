#include "adjmatch/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "adjmatch/errors.hpp"

namespace adjmatch {

namespace {

void emit_partitions(std::uint32_t remaining, std::uint32_t max_part,
                     std::vector<std::uint32_t>& mult,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{mult});
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++mult[part - 1];
        emit_partitions(remaining - part, part, mult, out);
        --mult[part - 1];
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("enumerate_partitions: k must be >= 1");
    std::vector<Partition> out;
    std::vector<std::uint32_t> mult(k, 0);
    emit_partitions(k, k, mult, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.multiplicity > b.multiplicity;  // descending lexicographic
    });
    for (const auto& p : out) {
        if (p.sum() != k || p.parts() + p.glued_matches() != k) {
            throw InternalInconsistencyError("enumerate_partitions: malformed partition");
        }
    }
    return out;
}

std::uint64_t PartitionTally::forced_matches(const std::vector<Partition>& partitions) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        m += static_cast<std::uint64_t>(counts[i]) * partitions[i].glued_matches();
    }
    return m;
}

void PartitionTally::validate(const std::vector<Partition>& partitions) const {
    if (counts.size() != partitions.size()) {
        throw std::invalid_argument("PartitionTally: counts/partition size mismatch");
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total != deck.ranks) {
        throw std::invalid_argument("PartitionTally: counts must sum to ranks");
    }
    if (forced_matches(partitions) > deck.max_matches()) {
        throw std::invalid_argument("PartitionTally: forced matches out of range");
    }
}

}  // namespace adjmatch
