#pragma once

#include "thetasym/correspond.hpp"
#include "thetasym/verify.hpp"

#include <string>
#include <vector>

namespace thetasym {

enum class Format { Plain, Json, Csv };

/// Accepts "plain", "json" or "csv".
Format parse_format(const std::string& text);

/// Marker suffixes used in plain/csv output:
///   !max  member of maximal ord within the whole relation set
///   *sel  the target assigned to this source
///   ~cut  member already assigned to another source
std::string render_enum(const GroupTag& g, int delta,
                        const std::vector<Symbol>& family, Format format);

std::string render_theta_set(const Symbol& s, const DualPair& pair, Format format);

std::string render_table(const CorrespondenceTable& table, Format format);

/// All defect classes of the pair's first member, one table each.
std::string render_tables(const DualPair& pair,
                          const std::vector<CorrespondenceTable>& tables,
                          Format format);

std::string render_first_occurrence(const Symbol& s, GroupKind series,
                                    const FirstOccurrence& fo, Format format);

std::string render_reports(const std::vector<SweepReport>& reports, int max_rank,
                           Format format);

/// Inverse of render_table(..., Format::Json).  Rows carry no block data;
/// consumers recompute relation sets on demand.
CorrespondenceTable parse_table_json(const std::string& text);

} // namespace thetasym
