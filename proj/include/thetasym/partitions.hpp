#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace thetasym {

/// An integer partition: weakly decreasing non-negative parts, stored in
/// canonical form (no trailing zeros).  The empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; parts beyond the last are 0.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Sum of the parts.
    int norm() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram: part i of the dual counts the parts
/// of p that are > i.
Partition dual(const Partition& p);

/// Lexicographic comparison by first differing part (shorter side padded
/// with zeros).
std::strong_ordering lex_cmp(const Partition& a, const Partition& b);

/// Multiset union of the parts of a and b, sorted decreasingly.
Partition union_parts(const Partition& a, const Partition& b);

/// Multiset union with a single extra part.
Partition union_part(const Partition& a, int extra);

/// lam "precedes" mu part-wise: mu_i - 1 <= lam_i <= mu_i for all i.
bool precq(const Partition& lam, const Partition& mu);

/// lam interleaves mu: mu_{i+1} <= lam_i <= mu_i for all i.  Equivalent
/// to precq(dual(lam), dual(mu)), i.e. mu / lam is a horizontal strip
/// when lam is contained in mu.
bool interleaves(const Partition& lam, const Partition& mu);

/// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

/// An ordered pair of partitions [top|bottom].
struct BiPartition {
    Partition top;
    Partition bottom;

    int norm() const { return top.norm() + bottom.norm(); }
    BiPartition transposed() const { return {bottom, top}; }

    bool operator==(const BiPartition&) const = default;
};

BiPartition bipartition_union(const BiPartition& a, const BiPartition& b);

/// All bipartitions of total size n (count = sum_k p(k) p(n-k)).
std::vector<BiPartition> bipartitions_of(int n);

/// Text forms: parts joined by ',', the empty partition written '-';
/// a bipartition is 'top|bottom'.
std::string to_string(const Partition& p);
std::string to_string(const BiPartition& bp);
Partition parse_partition(const std::string& text);
BiPartition parse_bipartition(const std::string& text);

} // namespace thetasym
