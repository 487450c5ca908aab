#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "horochow/errors.hpp"

namespace horochow {

/// Integer partition: weakly decreasing positive parts.  Trailing zeros are
/// stripped on construction, so the empty partition has no parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    /// Parse comma-separated parts; "0" or "" denotes the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// Part at 1-based index i, zero when i exceeds the length.
    int part(int i) const;
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;

    /// True when the Young diagram fits in a `rows` x `cols` box.
    bool fits_in_box(int rows, int cols) const;

    /// Conjugate (transposed) partition.
    Partition conjugate() const;

    /// Comma-separated parts, "0" for the empty partition.
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic order on the padded part vectors.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

/// Partition with strictly decreasing parts (shifted-diagram shapes).
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts)
        : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(std::vector<int> parts);
    /// Validating conversion.
    explicit StrictPartition(const Partition& p);

    static StrictPartition parse(const std::string& text);

    const std::vector<int>& parts() const { return base_.parts(); }
    const Partition& as_partition() const { return base_; }
    int length() const { return base_.length(); }
    int weight() const { return base_.weight(); }
    int part(int i) const { return base_.part(i); }
    bool empty() const { return base_.empty(); }

    std::string str() const { return base_.str(); }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend std::strong_ordering operator<=>(const StrictPartition& a,
                                            const StrictPartition& b) {
        return a.base_ <=> b.base_;
    }

private:
    Partition base_;
};

/// All partitions of `weight` with at most `max_parts` parts, each part at
/// most `max_part`; lexicographically descending.
std::vector<Partition> partitions_of(int weight, int max_parts, int max_part);

/// All strict partitions of `weight` (no bounds), lexicographically descending.
std::vector<StrictPartition> strict_partitions_of(int weight);

}  // namespace horochow
