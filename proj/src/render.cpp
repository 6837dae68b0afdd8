#include "thetasym/render.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetasym {

namespace {

using nlohmann::json;

std::string kind_str(GroupKind kind) {
    switch (kind) {
        case GroupKind::Sp: return "Sp";
        case GroupKind::OPlus: return "O+";
        case GroupKind::OMinus: return "O-";
    }
    throw std::logic_error("unreachable group kind");
}

std::string quoted(const std::string& field) { return "\"" + field + "\""; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Members already assigned to a different source when this row is read:
/// earlier rows for a forward table, any other row for an inverted one.
std::set<Symbol> cut_before(const CorrespondenceTable& table, std::size_t row_index) {
    std::set<Symbol> cut;
    bool forward = tau(table.pair, table.delta) >= 0;
    for (std::size_t j = 0; j < table.rows.size(); ++j) {
        if (forward ? j >= row_index : j == row_index) continue;
        if (table.rows[j].overline) cut.insert(*table.rows[j].overline);
    }
    return cut;
}

std::string member_text(const Symbol& m, const ThetaBlock& block,
                        const std::optional<Symbol>& selected,
                        const std::set<Symbol>& cut) {
    std::string out = "(" + to_string(m) + ")";
    if (std::find(block.max_order_members.begin(), block.max_order_members.end(), m) !=
        block.max_order_members.end())
        out += "!max";
    if (selected && *selected == m) out += "*sel";
    if (cut.count(m)) out += "~cut";
    return out;
}

std::string blocks_text(const std::vector<ThetaBlock>& blocks,
                        const std::optional<Symbol>& selected,
                        const std::set<Symbol>& cut) {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ' ';
        os << "k=" << blocks[i].k << " {";
        for (const Symbol& m : blocks[i].members)
            os << ' ' << member_text(m, blocks[i], selected, cut);
        os << " }";
    }
    return os.str();
}

std::string opt_text(const std::optional<Symbol>& s) {
    return s ? to_string(*s) : "-";
}

json opt_json(const std::optional<Symbol>& s) {
    return s ? json(to_string(*s)) : json(nullptr);
}

std::string table_header(const CorrespondenceTable& table) {
    std::ostringstream os;
    os << "# pair=" << to_string(table.pair) << " delta=" << table.delta
       << " delta'=" << related_defect(table.pair, table.delta)
       << " tau=" << tau(table.pair, table.delta);
    return os.str();
}

json table_json(const CorrespondenceTable& table) {
    json rows = json::array();
    for (const TableRow& row : table.rows) {
        json r;
        r["source"] = to_string(row.source);
        r["underline"] = opt_json(row.underline);
        r["overline"] = opt_json(row.overline);
        r["k0"] = row.k0 ? json(*row.k0) : json(nullptr);
        r["tie"] = row.tie ? json(*row.tie) : json(nullptr);
        rows.push_back(std::move(r));
    }
    json j;
    j["pair"] = to_string(table.pair);
    j["delta"] = table.delta;
    j["rows"] = std::move(rows);
    return j;
}

std::string table_plain(const CorrespondenceTable& table) {
    std::ostringstream os;
    os << table_header(table) << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const TableRow& row = table.rows[i];
        os << "(" << to_string(row.source) << ") | "
           << blocks_text(row.blocks, row.overline, cut_before(table, i)) << " | under="
           << opt_text(row.underline) << " over=" << opt_text(row.overline) << " k0=";
        if (row.k0) os << *row.k0;
        else os << '-';
        os << " tie=";
        if (row.tie) os << (*row.tie ? "true" : "false");
        else os << '-';
        os << "\n";
    }
    return os.str();
}

std::string table_csv(const CorrespondenceTable& table) {
    std::ostringstream os;
    os << "# pair=" << to_string(table.pair) << " delta=" << table.delta << "\n";
    os << "source,underline,overline,k0,tie\n";
    for (const TableRow& row : table.rows) {
        os << quoted(to_string(row.source)) << ','
           << (row.underline ? quoted(to_string(*row.underline)) : std::string()) << ','
           << (row.overline ? quoted(to_string(*row.overline)) : std::string()) << ',';
        if (row.k0) os << *row.k0;
        os << ',';
        if (row.tie) os << (*row.tie ? "true" : "false");
        os << "\n";
    }
    return os.str();
}

} // namespace

Format parse_format(const std::string& text) {
    if (text == "plain") return Format::Plain;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format: " + text);
}

std::string render_enum(const GroupTag& g, int delta,
                        const std::vector<Symbol>& family, Format format) {
    if (format == Format::Json) {
        json j;
        j["group"] = to_string(g);
        j["delta"] = delta;
        json list = json::array();
        for (const Symbol& s : family) list.push_back(to_string(s));
        j["symbols"] = std::move(list);
        return dump(j);
    }
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "# group=" << to_string(g) << " delta=" << delta << "\n";
        os << "symbol\n";
        for (const Symbol& s : family) os << quoted(to_string(s)) << "\n";
        return os.str();
    }
    for (const Symbol& s : family) os << to_string(s) << "\n";
    return os.str();
}

std::string render_theta_set(const Symbol& s, const DualPair& pair, Format format) {
    int delta = s.defect();
    std::vector<ThetaBlock> blocks = theta_set(s, pair);
    CorrespondenceTable table = build_table(pair, delta);
    std::size_t mine = table.rows.size();
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].source == s) mine = i;
    if (mine == table.rows.size())
        throw std::logic_error("symbol missing from its own defect family");
    std::optional<Symbol> selected = table.rows[mine].overline;
    std::set<Symbol> cut = cut_before(table, mine);
    int t = tau(pair, delta);

    if (format == Format::Json) {
        json j;
        j["symbol"] = to_string(s);
        j["pair"] = to_string(pair);
        j["tau"] = t;
        j["selected"] = opt_json(selected);
        json cut_list = json::array();
        for (const Symbol& c : cut) cut_list.push_back(to_string(c));
        j["cut"] = std::move(cut_list);
        json block_list = json::array();
        for (const ThetaBlock& block : blocks) {
            json b;
            b["k"] = block.k;
            json members = json::array();
            for (const Symbol& m : block.members) members.push_back(to_string(m));
            b["members"] = std::move(members);
            b["theta_k"] = opt_json(block.distinguished);
            json maxers = json::array();
            for (const Symbol& m : block.max_order_members) maxers.push_back(to_string(m));
            b["max_order"] = std::move(maxers);
            block_list.push_back(std::move(b));
        }
        j["blocks"] = std::move(block_list);
        return dump(j);
    }

    std::ostringstream os;
    if (format == Format::Csv) {
        os << "# symbol=" << to_string(s) << " pair=" << to_string(pair) << " tau=" << t
           << "\n";
        os << "k,member,theta_k,max,sel,cut\n";
        for (const ThetaBlock& block : blocks)
            for (const Symbol& m : block.members) {
                bool is_head = block.distinguished && *block.distinguished == m;
                bool is_max = std::find(block.max_order_members.begin(),
                                        block.max_order_members.end(),
                                        m) != block.max_order_members.end();
                bool is_sel = selected && *selected == m;
                os << block.k << ',' << quoted(to_string(m)) << ','
                   << (is_head ? "true" : "false") << ',' << (is_max ? "true" : "false")
                   << ',' << (is_sel ? "true" : "false") << ','
                   << (cut.count(m) ? "true" : "false") << "\n";
            }
        return os.str();
    }
    os << "# symbol=" << to_string(s) << " pair=" << to_string(pair) << " tau=" << t
       << "\n";
    for (const ThetaBlock& block : blocks) {
        os << "k=" << block.k << " {";
        for (const Symbol& m : block.members)
            os << ' ' << member_text(m, block, selected, cut);
        os << " }\n";
    }
    return os.str();
}

std::string render_table(const CorrespondenceTable& table, Format format) {
    if (format == Format::Json) return dump(table_json(table));
    if (format == Format::Csv) return table_csv(table);
    return table_plain(table);
}

std::string render_tables(const DualPair& pair,
                          const std::vector<CorrespondenceTable>& tables,
                          Format format) {
    if (format == Format::Json) {
        json j;
        j["pair"] = to_string(pair);
        json list = json::array();
        for (const CorrespondenceTable& t : tables) list.push_back(table_json(t));
        j["tables"] = std::move(list);
        return dump(j);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) os << "\n";
        os << (format == Format::Csv ? table_csv(tables[i]) : table_plain(tables[i]));
    }
    return os.str();
}

std::string render_first_occurrence(const Symbol& s, GroupKind series,
                                    const FirstOccurrence& fo, Format format) {
    if (format == Format::Json) {
        json j;
        j["symbol"] = to_string(s);
        j["series"] = kind_str(series);
        j["n_theta"] = fo.n_theta;
        j["n_underline"] = fo.n_underline;
        j["n_overline"] = fo.n_overline;
        j["underline_image"] = opt_json(fo.underline_image);
        j["overline_image"] = opt_json(fo.overline_image);
        return dump(j);
    }
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "symbol,series,n_theta,n_underline,n_overline,underline_image,"
              "overline_image\n";
        os << quoted(to_string(s)) << ',' << kind_str(series) << ',' << fo.n_theta << ','
           << fo.n_underline << ',' << fo.n_overline << ','
           << (fo.underline_image ? quoted(to_string(*fo.underline_image)) : std::string())
           << ','
           << (fo.overline_image ? quoted(to_string(*fo.overline_image)) : std::string())
           << "\n";
        return os.str();
    }
    os << "symbol=" << to_string(s) << " series=" << kind_str(series) << "\n";
    os << "n_theta=" << fo.n_theta << "\n";
    os << "n_underline=" << fo.n_underline << " image=" << opt_text(fo.underline_image)
       << "\n";
    os << "n_overline=" << fo.n_overline << " image=" << opt_text(fo.overline_image)
       << "\n";
    return os.str();
}

std::string render_reports(const std::vector<SweepReport>& reports, int max_rank,
                           Format format) {
    if (format == Format::Json) {
        json j;
        j["max_rank"] = max_rank;
        json list = json::array();
        for (const SweepReport& r : reports) {
            json e;
            e["property"] = r.property;
            e["cases"] = r.cases;
            e["ok"] = r.ok();
            e["violations"] = r.violations;
            list.push_back(std::move(e));
        }
        j["reports"] = std::move(list);
        return dump(j);
    }
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "property,cases,violations,ok\n";
        for (const SweepReport& r : reports)
            os << r.property << ',' << r.cases << ',' << r.violations.size() << ','
               << (r.ok() ? "true" : "false") << "\n";
        return os.str();
    }
    for (const SweepReport& r : reports) {
        os << r.property << ": cases=" << r.cases << " violations=" << r.violations.size()
           << (r.ok() ? " PASS" : " FAIL") << "\n";
        for (const std::string& v : r.violations) os << "  " << v << "\n";
    }
    return os.str();
}

CorrespondenceTable parse_table_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad table JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("pair") || !j.contains("rows"))
        throw std::invalid_argument("table JSON needs 'pair' and 'rows'");
    CorrespondenceTable table{parse_pair(j.at("pair").get<std::string>()),
                              j.value("delta", 0),
                              {},
                              {}};
    for (const json& r : j.at("rows")) {
        TableRow row;
        row.source = parse_symbol(r.at("source").get<std::string>());
        if (r.contains("underline") && !r.at("underline").is_null())
            row.underline = parse_symbol(r.at("underline").get<std::string>());
        if (r.contains("overline") && !r.at("overline").is_null())
            row.overline = parse_symbol(r.at("overline").get<std::string>());
        if (r.contains("k0") && !r.at("k0").is_null()) row.k0 = r.at("k0").get<int>();
        if (r.contains("tie") && !r.at("tie").is_null()) row.tie = r.at("tie").get<bool>();
        if (row.overline) table.used.push_back(*row.overline);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace thetasym
