#pragma once

#include "thetasym/theta.hpp"

#include <optional>
#include <vector>

namespace thetasym {

/// theta_0(s): the canonical member of the lowest block.  Uses the closed
/// symbol-level forms when tau == 0 or tau clears the addition row, and
/// cross-checks them against the general rule.  Requires tau >= 0.
Symbol theta_zero(const Symbol& s, const DualPair& pair);

/// ord profile of the canonical members theta_0..theta_K together with the
/// inserted-entry diagnostics alpha (growing row) and beta (shrinking row).
struct PeakDiagnostics {
    std::vector<int> ords;
    std::vector<int> alpha;
    std::vector<int> beta;
    int k0 = 0;    // least k attaining the maximal ord
    bool tie = false;  // theta_{k0} and theta_{k0+1} share the maximum
};

/// Requires tau >= 0.  Checks that the ord profile rises strictly, peaks
/// on at most two adjacent members, then falls strictly.
PeakDiagnostics find_k0(const Symbol& s, const DualPair& pair);

/// theta-underline: theta_0 when tau >= 0; when tau < 0 it is the inverse
/// of the reversed pair's theta_0, defined iff -tau occurs in the upsilon
/// row that theta_0 of the reversed pair extends.
std::optional<Symbol> underline_theta(const Symbol& s, const DualPair& pair);

struct TableRow {
    Symbol source;
    std::vector<ThetaBlock> blocks;
    int theta_flat_size = 0;     // total member count across blocks
    std::optional<Symbol> underline;
    std::optional<Symbol> overline;
    std::optional<int> k0;      // peak block; absent when tau < 0
    std::optional<bool> tie;    // peak shared by two blocks; absent when tau < 0
};

struct CorrespondenceTable {
    DualPair pair;
    int delta = 0;
    std::vector<TableRow> rows;  // sources ascending in the linear order
    std::vector<Symbol> used;    // overline targets in assignment order
};

/// theta-overline on one defect class.  Sources are processed in the
/// linear order; each takes the linear-least element among the highest-ord
/// members of its relation set minus the already-assigned targets.  The
/// remainder being non-empty and the choice landing in the least available
/// block are enforced, not assumed.  When tau < 0 the assignment is the
/// inverse of the reversed pair's table.
CorrespondenceTable build_table(const DualPair& pair, int delta);

/// Tables for every defect class of the first member, descending defect.
std::vector<CorrespondenceTable> build_family_tables(const DualPair& pair);

/// theta-overline of a single symbol (nullopt when unmatched).
std::optional<Symbol> overline_theta(const Symbol& s, const DualPair& pair);

/// Sources of `family` that the table leaves without an overline image.
std::vector<Symbol> table_coverage_violations(const std::vector<Symbol>& family,
                                              const CorrespondenceTable& table);

/// First occurrence of a fixed source symbol against a series of target
/// groups: the least half-ranks at which the relation set is non-empty and
/// at which each one-to-one map becomes defined.
struct FirstOccurrence {
    int n_theta = -1;
    int n_underline = -1;
    int n_overline = -1;
    std::optional<Symbol> underline_image;
    std::optional<Symbol> overline_image;
};

/// include_overline=false skips the costlier overline scan (n_overline
/// stays -1); the theta/underline agreement is asserted either way.
FirstOccurrence first_occurrence(const Symbol& s, GroupKind series,
                                 bool include_overline = true);

} // namespace thetasym
