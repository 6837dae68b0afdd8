#pragma once

#include "thetasym/correspond.hpp"

#include <string>
#include <vector>

namespace thetasym {

/// Outcome of one exhaustive property sweep.
struct SweepReport {
    std::string property;
    long long cases = 0;                  // individual checks performed
    std::vector<std::string> violations;  // one line per failed check

    bool ok() const { return violations.empty(); }
};

/// Identifiers accepted by run_property, in display order.
const std::vector<std::string>& property_ids();

/// Runs the named sweep.  First-member half-ranks range over 0..max_rank,
/// second-member half-ranks over 0..2*max_rank.  `threads` caps the worker
/// count and is further capped by THETA_SYMBOLS_THREADS; sweeps shard into
/// one job per (pair, defect) family.
SweepReport run_property(const std::string& id, int max_rank, int threads = 1);

/// Audit of a correspondence table (stored or freshly built): duplicate
/// underline/overline targets and images outside the source's relation
/// set.  Recomputes the relation sets when the table carries none.
std::vector<std::string> check_table_injectivity(const CorrespondenceTable& table);

} // namespace thetasym
