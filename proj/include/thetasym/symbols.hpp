#pragma once

#include "thetasym/partitions.hpp"

#include <compare>
#include <string>
#include <vector>

namespace thetasym {

/// A beta-set: strictly decreasing non-negative integers (possibly empty).
class BetaSet {
public:
    BetaSet() = default;
    explicit BetaSet(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int entry(std::size_t i) const { return entries_.at(i); }
    int sum() const;

    auto operator<=>(const BetaSet&) const = default;

private:
    std::vector<int> entries_;
};

/// A raw two-row array of beta-sets, not necessarily reduced.  Used to
/// express the shift equivalence (top, bottom) ~ (top+1 u {0}, bottom+1 u {0}).
struct SymbolRows {
    BetaSet top;
    BetaSet bottom;
};

SymbolRows shift(const SymbolRows& rows, int times = 1);
int rank_of(const SymbolRows& rows);
int defect_of(const SymbolRows& rows);

/// A symbol: an equivalence class of two-row arrays under shift, stored as
/// the reduced representative (0 not present in both rows at once).
/// Construction reduces automatically.
class Symbol {
public:
    Symbol() = default;
    Symbol(BetaSet top, BetaSet bottom);

    const BetaSet& top() const { return top_; }
    const BetaSet& bottom() const { return bottom_; }

    /// rank = sum of all entries - floor(((m1+m2-1)/2)^2)
    int rank() const;
    /// defect = m1 - m2 (sign matters)
    int defect() const;

    /// All entries of both rows, merged and sorted decreasingly (multiset).
    std::vector<int> entries() const;

    Symbol transposed() const { return Symbol(bottom_, top_); }

    auto operator<=>(const Symbol&) const = default;

private:
    BetaSet top_;
    BetaSet bottom_;
};

/// Reduced representative of a raw two-row array.
Symbol reduce(const SymbolRows& rows);

enum class GroupKind { Sp, OPlus, OMinus };

/// Sign attached to the orthogonal behaviour: Plus for split even
/// orthogonal, Minus for non-split.
enum class Eps { Plus, Minus };

/// A classical group in one of the three Witt series, identified by kind
/// and half matrix size (Sp10 / O+8 / O-4 denote matrix sizes 10, 8, 4).
struct GroupTag {
    GroupKind kind = GroupKind::Sp;
    int half_rank = 0;

    bool operator==(const GroupTag&) const = default;
};

/// floor(d^2/4): the rank a defect-d symbol at norm zero carries.
int defect_floor(int defect);

/// Defect residue admissible for a group kind: 1 mod 4 for Sp, 0 for O+,
/// 2 for O-.
bool defect_matches(GroupKind kind, int defect);

/// The group whose character family the symbol labels.
GroupTag group_of(const Symbol& s);

/// Witt index of the series member (O- of size 2m has index m-1).
int witt_index(const GroupTag& g);

/// Defects d with defect_matches and floor(d^2/4) <= n, descending.
std::vector<int> family_defects(const GroupTag& g);

/// The norm-respecting bijection onto bipartitions: subtract the staircase
/// (m-i) from each row and drop zeros.  Requires nothing beyond reducedness,
/// which Symbol guarantees.
BiPartition upsilon(const Symbol& s);

/// Inverse of upsilon at a prescribed defect.
Symbol upsilon_inv(const BiPartition& bp, int defect);

/// All symbols of the given rank and defect, in a fixed deterministic order.
std::vector<Symbol> enumerate_family(int rank, int defect);

/// Total order on a fixed family S_{n,d}: compare (norm, lex, lex) of the
/// upsilon rows, the side depending on eps.  Throws if the symbols are not
/// in one family or (eps, d mod 4) is not one of the supported cases.
std::strong_ordering linear_cmp(const Symbol& a, const Symbol& b, Eps eps);

/// Sort a family in place by linear_cmp.
void sort_family(std::vector<Symbol>& family, Eps eps);

/// True for defect 0/1 symbols whose rows interlace weakly:
/// a1 >= b1 >= a2 >= b2 >= ...
bool is_special(const Symbol& s);

struct SpecialClosure {
    Symbol special;                // entries redistributed alternately
    std::vector<Symbol> family;    // all admissible row assignments
};

/// The special symbol sharing the entry multiset of s, together with every
/// symbol of an admissible defect built from the same entries.
SpecialClosure special_closure(const Symbol& s);

/// Text forms: rows joined by ';', each row as a partition-style list with
/// '-' for an empty row (e.g. "2,0;1", "-;3,2,1,0").  Groups as Sp10, O+8.
std::string to_string(const Symbol& s);
std::string to_string(const GroupTag& g);
Symbol parse_symbol(const std::string& text);
GroupTag parse_group(const std::string& text);

} // namespace thetasym
