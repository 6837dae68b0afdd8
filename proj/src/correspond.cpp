#include "thetasym/correspond.hpp"

#include "thetasym/degree_order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace thetasym {

namespace {

BetaSet shift_row_up(const BetaSet& row) {
    std::vector<int> out;
    out.reserve(row.size() + 1);
    for (int e : row.entries()) out.push_back(e + 1);
    out.push_back(0);
    return BetaSet(out);
}

BetaSet prepend_entry(int value, const BetaSet& row) {
    std::vector<int> out;
    out.reserve(row.size() + 1);
    out.push_back(value);
    for (int e : row.entries()) out.push_back(e);
    return BetaSet(out);
}

Partition remove_one(const Partition& p, int value) {
    std::vector<int> parts = p.parts();
    auto pos = std::find(parts.begin(), parts.end(), value);
    if (pos == parts.end()) throw std::logic_error("part to remove is absent");
    parts.erase(pos);
    return Partition(parts);
}

bool has_part(const Partition& p, int value) {
    const auto& parts = p.parts();
    return std::find(parts.begin(), parts.end(), value) != parts.end();
}

/// Member -> block index over a relation set.
std::map<Symbol, int> block_index(const std::vector<ThetaBlock>& blocks) {
    std::map<Symbol, int> out;
    for (const ThetaBlock& block : blocks)
        for (const Symbol& m : block.members) out.emplace(m, block.k);
    return out;
}

} // namespace

Symbol theta_zero(const Symbol& s, const DualPair& pair) {
    int t = tau(pair, s.defect());
    if (t < 0) throw std::invalid_argument("theta_0 needs tau >= 0");
    Symbol general = theta_k_map(s, pair, 0);
    BiPartition u = upsilon(s);
    const Partition& addition_row = pair.eps() == Eps::Plus ? u.bottom : u.top;
    std::optional<Symbol> closed;
    if (pair.eps() == Eps::Plus) {
        if (t == 0)
            closed = Symbol(shift_row_up(s.bottom()), s.top());
        else if (t >= addition_row.part(0))
            closed = Symbol(prepend_entry(t + static_cast<int>(s.bottom().size()), s.bottom()),
                            s.top());
    } else {
        if (t == 0)
            closed = Symbol(s.bottom(), shift_row_up(s.top()));
        else if (t >= addition_row.part(0))
            closed = Symbol(s.bottom(),
                            prepend_entry(t + static_cast<int>(s.top().size()), s.top()));
    }
    if (closed && *closed != general)
        throw std::logic_error("closed form of theta_0 disagrees with the general rule");
    return general;
}

PeakDiagnostics find_k0(const Symbol& s, const DualPair& pair) {
    int t = tau(pair, s.defect());
    if (t < 0) throw std::invalid_argument("peak search needs tau >= 0");
    BiPartition u = upsilon(s);
    Eps eps = pair.eps();
    const Partition& lam = u.top;
    const Partition& mu = u.bottom;
    int m1 = static_cast<int>(s.top().size());
    int m2 = static_cast<int>(s.bottom().size());
    const Partition& removal_row = eps == Eps::Plus ? lam : mu;
    int cap = removal_row.part(0);

    PeakDiagnostics out;
    for (int k = 0; k <= cap; ++k) {
        out.ords.push_back(ord_closed(theta_k_map(s, pair, k)));
        if (eps == Eps::Plus) {
            int below = 0;
            for (int j = 1; j <= m2; ++j)
                if (mu.part(j - 1) <= t + k) ++below;
            out.alpha.push_back(t + k + below);
            int pos = 1;
            for (int i = 2; i <= m1; ++i)
                if (lam.part(i - 1) >= lam.part(0) - k) ++pos;
            out.beta.push_back(lam.part(0) - k + m1 - pos);
        } else {
            int below = 0;
            for (int i = 1; i <= m1; ++i)
                if (lam.part(i - 1) <= t + k) ++below;
            out.beta.push_back(t + k + below);
            int pos = 1;
            for (int j = 2; j <= m2; ++j)
                if (mu.part(j - 1) >= mu.part(0) - k) ++pos;
            out.alpha.push_back(mu.part(0) - k + m2 - pos);
        }
    }

    const std::vector<int>& inserted_up = eps == Eps::Plus ? out.alpha : out.beta;
    const std::vector<int>& inserted_down = eps == Eps::Plus ? out.beta : out.alpha;
    for (int k = 0; k < cap; ++k) {
        if (inserted_up[k] >= inserted_up[k + 1] || inserted_down[k] <= inserted_down[k + 1])
            throw std::logic_error("inserted entries lost monotonicity");
    }

    out.k0 = static_cast<int>(
        std::max_element(out.ords.begin(), out.ords.end()) - out.ords.begin());
    out.tie = out.k0 < cap && out.ords[out.k0 + 1] == out.ords[out.k0];
    int plateau_end = out.tie ? out.k0 + 1 : out.k0;
    for (int k = 0; k < out.k0; ++k)
        if (out.ords[k] >= out.ords[k + 1]) throw std::logic_error("ord profile not rising");
    for (int k = plateau_end; k < cap; ++k)
        if (out.ords[k] <= out.ords[k + 1]) throw std::logic_error("ord profile not falling");
    return out;
}

std::optional<Symbol> underline_theta(const Symbol& s, const DualPair& pair) {
    if (group_of(s) != pair.first())
        throw std::invalid_argument("symbol is not in the pair's first family");
    int t = tau(pair, s.defect());
    if (t >= 0) return theta_zero(s, pair);
    BiPartition u = upsilon(s);
    int dprime = related_defect(pair, s.defect());
    if (pair.eps() == Eps::Plus) {
        if (!has_part(u.top, -t)) return std::nullopt;
        return upsilon_inv(BiPartition{u.bottom, remove_one(u.top, -t)}, dprime);
    }
    if (!has_part(u.bottom, -t)) return std::nullopt;
    return upsilon_inv(BiPartition{remove_one(u.bottom, -t), u.top}, dprime);
}

CorrespondenceTable build_table(const DualPair& pair, int delta) {
    int t = tau(pair, delta);
    std::vector<Symbol> sources = enumerate_family(pair.first().half_rank, delta);
    sort_family(sources, pair.eps());
    CorrespondenceTable table{pair, delta, {}, {}};

    if (t >= 0) {
        std::set<Symbol> used;
        for (const Symbol& s : sources) {
            TableRow row;
            row.source = s;
            row.blocks = theta_set(s, pair);
            row.theta_flat_size = static_cast<int>(theta_members(row.blocks).size());
            row.underline = theta_zero(s, pair);
            PeakDiagnostics peak = find_k0(s, pair);
            row.k0 = peak.k0;
            row.tie = peak.tie;

            std::map<Symbol, int> blocks_of = block_index(row.blocks);
            std::vector<Symbol> avail;
            for (const auto& [member, k] : blocks_of)
                if (!used.count(member)) avail.push_back(member);
            if (avail.empty())
                throw std::logic_error("relation set exhausted before its source was paired");
            int best = ord_closed(avail.front());
            for (const Symbol& m : avail) best = std::max(best, ord_closed(m));
            std::optional<Symbol> chosen;
            int least_block = 0;
            for (const Symbol& m : avail) {
                if (ord_closed(m) != best) continue;
                int kb = blocks_of.at(m);
                if (!chosen) {
                    chosen = m;
                    least_block = kb;
                    continue;
                }
                if (linear_cmp(m, *chosen, pair.eps()) < 0) chosen = m;
                least_block = std::min(least_block, kb);
            }
            if (blocks_of.at(*chosen) != least_block)
                throw std::logic_error("paired target is not in the least available block");
            used.insert(*chosen);
            table.used.push_back(*chosen);
            row.overline = *chosen;
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    CorrespondenceTable reversed = build_table(pair.reversed(), related_defect(pair, delta));
    for (const Symbol& s : sources) {
        TableRow row;
        row.source = s;
        row.blocks = theta_set(s, pair);
        row.theta_flat_size = static_cast<int>(theta_members(row.blocks).size());
        row.underline = underline_theta(s, pair);
        for (const TableRow& rev : reversed.rows)
            if (rev.overline && *rev.overline == s) {
                row.overline = rev.source;
                break;
            }
        if (row.overline) table.used.push_back(*row.overline);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<CorrespondenceTable> build_family_tables(const DualPair& pair) {
    std::vector<CorrespondenceTable> out;
    for (int delta : family_defects(pair.first())) out.push_back(build_table(pair, delta));
    return out;
}

std::optional<Symbol> overline_theta(const Symbol& s, const DualPair& pair) {
    if (group_of(s) != pair.first())
        throw std::invalid_argument("symbol is not in the pair's first family");
    CorrespondenceTable table = build_table(pair, s.defect());
    for (const TableRow& row : table.rows)
        if (row.source == s) return row.overline;
    throw std::logic_error("symbol missing from its own family table");
}

std::vector<Symbol> table_coverage_violations(const std::vector<Symbol>& family,
                                              const CorrespondenceTable& table) {
    std::vector<Symbol> out;
    for (const Symbol& s : family) {
        bool covered = false;
        for (const TableRow& row : table.rows)
            if (row.source == s && row.overline) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    return out;
}

namespace {

/// The symbol whose theta-underline image is s, at the least possible
/// target rank in the series.
Symbol least_underline_source(const Symbol& s, Eps eps) {
    const BetaSet& a = s.top();
    const BetaSet& b = s.bottom();
    if (eps == Eps::Plus) {
        if (a.empty()) return Symbol(shift_row_up(b), BetaSet());
        std::vector<int> rest(a.entries().begin() + 1, a.entries().end());
        return Symbol(b, BetaSet(rest));
    }
    if (b.empty()) return Symbol(BetaSet(), shift_row_up(a));
    std::vector<int> rest(b.entries().begin() + 1, b.entries().end());
    return Symbol(BetaSet(rest), a);
}

} // namespace

FirstOccurrence first_occurrence(const Symbol& s, GroupKind series,
                                 bool include_overline) {
    GroupTag g = group_of(s);
    if ((g.kind == GroupKind::Sp) == (series == GroupKind::Sp))
        throw std::invalid_argument("series must be dual to the symbol's own group");
    Eps eps = (g.kind == GroupKind::OMinus || series == GroupKind::OMinus) ? Eps::Minus
                                                                           : Eps::Plus;
    Symbol preimage = least_underline_source(s, eps);
    GroupTag pg = group_of(preimage);
    if (pg.kind != series)
        throw std::logic_error("least preimage landed outside the series");

    FirstOccurrence out;
    int bound = 2 * s.rank() + std::abs(s.defect());
    for (int n = 0; n <= bound; ++n) {
        DualPair pair(g, GroupTag{series, n});
        if (out.n_theta < 0 && !theta_members(theta_set(s, pair)).empty()) out.n_theta = n;
        if (out.n_underline < 0) {
            std::optional<Symbol> img = underline_theta(s, pair);
            if (img) {
                out.n_underline = n;
                out.underline_image = img;
            }
        }
        if (include_overline && out.n_overline < 0) {
            std::optional<Symbol> img = overline_theta(s, pair);
            if (img) {
                out.n_overline = n;
                out.overline_image = img;
            }
        }
        if (out.n_theta >= 0 && out.n_underline >= 0 &&
            (!include_overline || out.n_overline >= 0))
            break;
    }
    if (out.n_theta < 0 || out.n_underline < 0 ||
        (include_overline && out.n_overline < 0))
        throw std::logic_error("first occurrence not found within the search bound");
    if (out.n_underline != out.n_theta)
        throw std::logic_error("underline map missed the first non-empty relation set");
    if (out.n_underline != pg.half_rank || *out.underline_image != preimage)
        throw std::logic_error("first underline image disagrees with its closed form");
    return out;
}

} // namespace thetasym
