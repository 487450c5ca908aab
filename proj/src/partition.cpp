#include "horochow/partition.hpp"

#include <algorithm>
#include <numeric>

namespace horochow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw Error("malformed partition: " + text);
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] >= parts_[i - 1]) return false;
    return true;
}

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (auto c = a.part(i) <=> b.part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

StrictPartition::StrictPartition(std::vector<int> parts) : base_(std::move(parts)) {
    if (!base_.is_strict()) throw Error("parts must be strictly decreasing");
}

StrictPartition::StrictPartition(const Partition& p) : base_(p) {
    if (!base_.is_strict()) throw Error("parts must be strictly decreasing");
}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(Partition::parse(text));
}

namespace {

void enumerate(int remaining, int max_part, int max_parts, bool strict,
               std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    if (max_parts == 0) return;
    int hi = std::min(remaining, max_part);
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, strict ? p - 1 : p, max_parts - 1, strict, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_parts, int max_part) {
    std::vector<std::vector<int>> raw;
    std::vector<int> acc;
    if (weight >= 0) enumerate(weight, max_part, max_parts, false, acc, raw);
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

std::vector<StrictPartition> strict_partitions_of(int weight) {
    std::vector<std::vector<int>> raw;
    std::vector<int> acc;
    if (weight >= 0) enumerate(weight, weight, weight, true, acc, raw);
    std::vector<StrictPartition> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

}  // namespace horochow
