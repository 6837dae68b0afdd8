#include "thetasym/symbols.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thetasym {

namespace {

bool strictly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] <= v[i + 1]) return false;
    }
    return v.empty() || v.back() >= 0;
}

bool contains_zero(const BetaSet& b) {
    return !b.empty() && b.entries().back() == 0;
}

std::vector<int> parse_row(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c != ' ') t.push_back(c);
    }
    if (t == "-") return {};
    if (t.empty()) throw std::invalid_argument("empty row (use '-' for an empty row)");
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t comma = t.find(',', pos);
        std::string item = (comma == std::string::npos) ? t.substr(pos) : t.substr(pos, comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bad row entry: '" + item + "'");
        }
        out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string row_to_string(const BetaSet& b) {
    if (b.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(b.entry(i));
    }
    return out;
}

int mod4(int defect) {
    return ((defect % 4) + 4) % 4;
}

} // namespace

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!strictly_decreasing(entries_)) {
        throw std::invalid_argument("beta-set entries must be strictly decreasing and non-negative");
    }
}

int BetaSet::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

SymbolRows shift(const SymbolRows& rows, int times) {
    if (times < 0) throw std::invalid_argument("shift count must be non-negative");
    SymbolRows out = rows;
    for (int t = 0; t < times; ++t) {
        auto bump = [](const BetaSet& b) {
            std::vector<int> e = b.entries();
            for (int& x : e) ++x;
            e.push_back(0);
            return BetaSet(std::move(e));
        };
        out.top = bump(out.top);
        out.bottom = bump(out.bottom);
    }
    return out;
}

int rank_of(const SymbolRows& rows) {
    int q = static_cast<int>(rows.top.size() + rows.bottom.size()) - 1;
    return rows.top.sum() + rows.bottom.sum() - (q * q) / 4;
}

int defect_of(const SymbolRows& rows) {
    return static_cast<int>(rows.top.size()) - static_cast<int>(rows.bottom.size());
}

Symbol reduce(const SymbolRows& rows) {
    return Symbol(rows.top, rows.bottom);
}

Symbol::Symbol(BetaSet top, BetaSet bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    while (contains_zero(top_) && contains_zero(bottom_)) {
        auto drop = [](const BetaSet& b) {
            std::vector<int> e = b.entries();
            e.pop_back();
            for (int& x : e) --x;
            return BetaSet(std::move(e));
        };
        top_ = drop(top_);
        bottom_ = drop(bottom_);
    }
}

int Symbol::rank() const {
    return rank_of({top_, bottom_});
}

int Symbol::defect() const {
    return defect_of({top_, bottom_});
}

std::vector<int> Symbol::entries() const {
    std::vector<int> out = top_.entries();
    out.insert(out.end(), bottom_.entries().begin(), bottom_.entries().end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

int defect_floor(int defect) {
    return (defect * defect) / 4;
}

bool defect_matches(GroupKind kind, int defect) {
    switch (kind) {
        case GroupKind::Sp: return mod4(defect) == 1;
        case GroupKind::OPlus: return mod4(defect) == 0;
        case GroupKind::OMinus: return mod4(defect) == 2;
    }
    return false;
}

GroupTag group_of(const Symbol& s) {
    switch (mod4(s.defect())) {
        case 1: return {GroupKind::Sp, s.rank()};
        case 0: return {GroupKind::OPlus, s.rank()};
        case 2: return {GroupKind::OMinus, s.rank()};
        default: throw std::invalid_argument("symbol defect 3 mod 4 labels no group in the three series");
    }
}

int witt_index(const GroupTag& g) {
    return g.kind == GroupKind::OMinus ? g.half_rank - 1 : g.half_rank;
}

std::vector<int> family_defects(const GroupTag& g) {
    std::vector<int> out;
    int bound = 2 * g.half_rank + 2;
    for (int d = bound; d >= -bound; --d) {
        if (defect_matches(g.kind, d) && defect_floor(d) <= g.half_rank) out.push_back(d);
    }
    return out;
}

BiPartition upsilon(const Symbol& s) {
    auto strip = [](const BetaSet& b) {
        int m = static_cast<int>(b.size());
        std::vector<int> parts;
        for (int i = 1; i <= m; ++i) parts.push_back(b.entry(i - 1) - (m - i));
        return Partition(std::move(parts));
    };
    return {strip(s.top()), strip(s.bottom())};
}

Symbol upsilon_inv(const BiPartition& bp, int defect) {
    int l1 = static_cast<int>(bp.top.size());
    int l2 = static_cast<int>(bp.bottom.size());
    int m1 = std::max(l1, l2 + defect);
    int m2 = m1 - defect;
    std::vector<int> a, b;
    for (int i = 1; i <= m1; ++i) a.push_back(bp.top.part(i - 1) + (m1 - i));
    for (int j = 1; j <= m2; ++j) b.push_back(bp.bottom.part(j - 1) + (m2 - j));
    Symbol s(BetaSet(std::move(a)), BetaSet(std::move(b)));
    if (s.defect() != defect) throw std::logic_error("upsilon_inv produced a wrong defect");
    return s;
}

std::vector<Symbol> enumerate_family(int rank, int defect) {
    std::vector<Symbol> out;
    int norm = rank - defect_floor(defect);
    if (norm < 0) return out;
    for (const BiPartition& bp : bipartitions_of(norm)) {
        out.push_back(upsilon_inv(bp, defect));
    }
    return out;
}

std::strong_ordering linear_cmp(const Symbol& a, const Symbol& b, Eps eps) {
    if (a.rank() != b.rank() || a.defect() != b.defect()) {
        throw std::invalid_argument("linear order compares members of one family only");
    }
    int r = mod4(a.defect());
    if (eps == Eps::Plus ? (r != 0 && r != 1) : (r != 1 && r != 2)) {
        throw std::invalid_argument("linear order: defect class incompatible with sign");
    }
    BiPartition ua = upsilon(a);
    BiPartition ub = upsilon(b);
    const Partition& pa = eps == Eps::Plus ? ua.top : ua.bottom;
    const Partition& pb = eps == Eps::Plus ? ub.top : ub.bottom;
    const Partition& sa = eps == Eps::Plus ? ua.bottom : ua.top;
    const Partition& sb = eps == Eps::Plus ? ub.bottom : ub.top;
    if (auto c = pa.norm() <=> pb.norm(); c != 0) return c;
    if (auto c = lex_cmp(pa, pb); c != 0) return c;
    return lex_cmp(sa, sb);
}

void sort_family(std::vector<Symbol>& family, Eps eps) {
    std::sort(family.begin(), family.end(),
              [eps](const Symbol& a, const Symbol& b) { return linear_cmp(a, b, eps) < 0; });
}

bool is_special(const Symbol& s) {
    int d = s.defect();
    if (d != 0 && d != 1) return false;
    const BetaSet& a = s.top();
    const BetaSet& b = s.bottom();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a.entry(i) < b.entry(i)) return false;
        if (i + 1 < a.size() && b.entry(i) < a.entry(i + 1)) return false;
    }
    return true;
}

SpecialClosure special_closure(const Symbol& s) {
    std::vector<int> z = s.entries();
    std::vector<int> alt_top, alt_bottom;
    for (std::size_t i = 0; i < z.size(); ++i) {
        (i % 2 == 0 ? alt_top : alt_bottom).push_back(z[i]);
    }
    SpecialClosure out;
    out.special = Symbol(BetaSet(alt_top), BetaSet(alt_bottom));

    std::vector<int> doubles, singles;
    for (std::size_t i = 0; i < z.size();) {
        if (i + 1 < z.size() && z[i] == z[i + 1]) {
            doubles.push_back(z[i]);
            i += 2;
        } else {
            singles.push_back(z[i]);
            i += 1;
        }
    }
    int m = static_cast<int>(z.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << singles.size()); ++mask) {
        std::vector<int> top = doubles, bottom = doubles;
        for (std::size_t i = 0; i < singles.size(); ++i) {
            (mask & (std::size_t{1} << i) ? top : bottom).push_back(singles[i]);
        }
        std::sort(top.begin(), top.end(), std::greater<int>());
        std::sort(bottom.begin(), bottom.end(), std::greater<int>());
        int d = static_cast<int>(top.size()) - static_cast<int>(bottom.size());
        bool admissible = (m % 2 == 1) ? mod4(d) == 1 : d % 2 == 0;
        if (!admissible) continue;
        out.family.emplace_back(BetaSet(std::move(top)), BetaSet(std::move(bottom)));
    }
    std::sort(out.family.begin(), out.family.end(), [](const Symbol& a, const Symbol& b) {
        if (a.defect() != b.defect()) return a.defect() > b.defect();
        return a < b;
    });
    return out;
}

std::string to_string(const Symbol& s) {
    return row_to_string(s.top()) + ";" + row_to_string(s.bottom());
}

std::string to_string(const GroupTag& g) {
    switch (g.kind) {
        case GroupKind::Sp: return "Sp" + std::to_string(2 * g.half_rank);
        case GroupKind::OPlus: return "O+" + std::to_string(2 * g.half_rank);
        case GroupKind::OMinus: return "O-" + std::to_string(2 * g.half_rank);
    }
    throw std::logic_error("unreachable group kind");
}

Symbol parse_symbol(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos) {
        throw std::invalid_argument("symbol text needs exactly one ';': '" + text + "'");
    }
    return Symbol(BetaSet(parse_row(text.substr(0, semi))),
                  BetaSet(parse_row(text.substr(semi + 1))));
}

GroupTag parse_group(const std::string& text) {
    GroupKind kind;
    std::size_t off;
    if (text.rfind("Sp", 0) == 0) {
        kind = GroupKind::Sp;
        off = 2;
    } else if (text.rfind("O+", 0) == 0) {
        kind = GroupKind::OPlus;
        off = 2;
    } else if (text.rfind("O-", 0) == 0) {
        kind = GroupKind::OMinus;
        off = 2;
    } else {
        throw std::invalid_argument("group must start with Sp, O+ or O-: '" + text + "'");
    }
    std::string num = text.substr(off);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad group size: '" + text + "'");
    }
    int size = std::stoi(num);
    if (size % 2 != 0) throw std::invalid_argument("group matrix size must be even: '" + text + "'");
    return {kind, size / 2};
}

} // namespace thetasym
