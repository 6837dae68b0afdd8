#pragma once

#include "thetasym/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetasym {

/// An ordered dual pair of one symplectic and one even-orthogonal group.
class DualPair {
public:
    DualPair(GroupTag first, GroupTag second);

    const GroupTag& first() const { return first_; }
    const GroupTag& second() const { return second_; }

    /// Sign of the orthogonal member.
    Eps eps() const;

    /// In stable range when twice the first member's rank is at most the
    /// second member's Witt index.
    bool stable_range() const;

    DualPair reversed() const { return DualPair(second_, first_); }

    bool operator==(const DualPair&) const = default;

private:
    GroupTag first_;
    GroupTag second_;
};

/// The d with delta = 4d+1 (Sp), 4d (O+), 4d+2 (O-) for the first member.
int d_of(const DualPair& pair, int delta);

/// tau = n'-n+2d (eps +) or n'-n-1-2d (eps -); the net norm growth of
/// the upsilon image across the relation.
int tau(const DualPair& pair, int delta);

/// Defect of symbols related to a defect-delta symbol of the first
/// member: 1-delta (eps +) or -1-delta (eps -).
int related_defect(const DualPair& pair, int delta);

/// Membership of (s, s') in the relation, s in the first member's family
/// and s' in the second's.  Symmetric: swapping both arguments and the
/// pair gives the same answer.
bool related(const Symbol& s, const Symbol& sprime, const DualPair& pair);

/// One norm-level of the relation set: the members whose upsilon image
/// loses exactly k boxes on the source's leading row.
struct ThetaBlock {
    int k = 0;
    /// Ordered by (removal row, addition row) lexicographically; when
    /// tau >= 0 this puts theta_k(s) first.
    std::vector<Symbol> members;
    /// theta_k(s); absent when tau < 0 (theta_k is undefined there).
    std::optional<Symbol> distinguished;
    /// Members whose ord attains the maximum over the whole relation set.
    std::vector<Symbol> max_order_members;
};

/// theta_k(s): the k-th canonical member, via the upsilon-level rule
/// (eps +): [lam | mu] -> [mu u {tau+k} | (lam_2,...) u {lam_1 - k}],
/// (eps -): [lam | mu] -> [(mu_2,...) u {mu_1 - k} | lam u {tau+k}].
/// Requires tau >= 0 and 0 <= k <= lam_1 (eps +) / mu_1 (eps -).
Symbol theta_k_map(const Symbol& s, const DualPair& pair, int k);

/// All blocks k = 0..lam_1 (eps +) / mu_1 (eps -), built constructively
/// from horizontal-strip removals and additions.
std::vector<ThetaBlock> theta_set(const Symbol& s, const DualPair& pair);

/// Members of all blocks, flattened in block order.
std::vector<Symbol> theta_members(const std::vector<ThetaBlock>& blocks);

/// Partitions reachable from p by removing exactly `boxes` boxes, no two
/// in one column (the interleaving condition), lexicographically ascending.
std::vector<Partition> strip_removals(const Partition& p, int boxes);

/// Partitions reachable from p by adding exactly `boxes` boxes, no two in
/// one column, lexicographically ascending.
std::vector<Partition> strip_additions(const Partition& p, int boxes);

/// Text form "O+8,Sp10" (matrix sizes).
std::string to_string(const DualPair& pair);
DualPair parse_pair(const std::string& text);

} // namespace thetasym
