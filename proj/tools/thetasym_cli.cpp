#include "thetasym/render.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace thetasym;

GroupKind parse_series(const std::string& text) {
    if (text == "Sp") return GroupKind::Sp;
    if (text == "O+") return GroupKind::OPlus;
    if (text == "O-") return GroupKind::OMinus;
    throw std::invalid_argument("series must be one of Sp, O+, O-: " + text);
}

Eps family_eps(GroupKind kind) {
    return kind == GroupKind::OMinus ? Eps::Minus : Eps::Plus;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void require_member(const Symbol& s, const GroupTag& g) {
    if (!(group_of(s) == g))
        throw std::invalid_argument("symbol " + to_string(s) + " belongs to " +
                                    to_string(group_of(s)) + ", not " + to_string(g));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Symbol combinatorics of theta correspondences between symplectic and\n"
        "even-orthogonal groups: family enumeration, relation-set queries,\n"
        "correspondence tables, first occurrences, and exhaustive property sweeps.\n"
        "Member markers in plain/csv output:\n"
        "  !max  maximal ord within the whole relation set\n"
        "  *sel  the target the table assigns to this source\n"
        "  ~cut  target already assigned to another source\n"
        "Groups are written Sp<2n>, O+<2n>, O-<2n>; symbols as 'top;bottom' rows\n"
        "of comma-separated entries, '-' for an empty row."};
    app.require_subcommand(1);

    std::string format_text = "plain";
    app.add_option("--format", format_text, "Output format: plain, json or csv")
        ->capture_default_str();

    std::string group_text, pair_text, symbol_text, series_text, property_text,
        table_path;
    int delta = 0;
    int max_rank = 4;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    CLI::App* cmd_enum = app.add_subcommand(
        "enum", "List one family S_{n,delta} in its linear order");
    cmd_enum->add_option("--group", group_text, "Group, e.g. O+8")->required();
    CLI::Option* enum_delta =
        cmd_enum->add_option("--delta", delta, "Defect of the family")->required();

    CLI::App* cmd_theta = app.add_subcommand(
        "theta-set", "Relation set of one symbol, split into blocks");
    cmd_theta->add_option("--pair", pair_text, "Dual pair, e.g. O+8,Sp10")->required();
    cmd_theta->add_option("--symbol", symbol_text, "Source symbol")->required();

    CLI::App* cmd_table =
        app.add_subcommand("table", "Correspondence table(s) for a dual pair");
    cmd_table->add_option("--pair", pair_text, "Dual pair, e.g. O+8,Sp10")->required();
    CLI::Option* table_delta = cmd_table->add_option(
        "--delta", delta, "Single defect class (default: all classes)");

    CLI::App* cmd_first = app.add_subcommand(
        "first-occ", "Least target ranks at which a symbol occurs");
    cmd_first->add_option("--symbol", symbol_text, "Fixed source symbol")->required();
    cmd_first->add_option("--series", series_text, "Target series: Sp, O+ or O-")
        ->required();

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Run exhaustive property sweeps");
    CLI::Option* verify_property = cmd_verify->add_option(
        "--property", property_text, "Property id (default: every property)");
    cmd_verify->add_option("--max-rank", max_rank, "First-member half-rank bound")
        ->capture_default_str();
    cmd_verify->add_option("--threads", threads,
                           "Worker cap (also capped by THETA_SYMBOLS_THREADS)");
    CLI::Option* verify_table = cmd_verify->add_option(
        "--table", table_path, "Audit a stored table instead of sweeping");

    for (CLI::App* sub : {cmd_enum, cmd_theta, cmd_table, cmd_first, cmd_verify})
        sub->add_option("--format", format_text, "Output format: plain, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Format format = parse_format(format_text);

        if (*cmd_enum) {
            (void)enum_delta;
            GroupTag g = parse_group(group_text);
            if (!defect_matches(g.kind, delta))
                throw std::invalid_argument("defect " + std::to_string(delta) +
                                            " is not admissible for " + to_string(g));
            std::vector<Symbol> family = enumerate_family(g.half_rank, delta);
            sort_family(family, family_eps(g.kind));
            std::cout << render_enum(g, delta, family, format);
            return 0;
        }

        if (*cmd_theta) {
            DualPair pair = parse_pair(pair_text);
            Symbol s = parse_symbol(symbol_text);
            require_member(s, pair.first());
            std::cout << render_theta_set(s, pair, format);
            return 0;
        }

        if (*cmd_table) {
            DualPair pair = parse_pair(pair_text);
            if (*table_delta) {
                if (!defect_matches(pair.first().kind, delta))
                    throw std::invalid_argument(
                        "defect " + std::to_string(delta) + " is not admissible for " +
                        to_string(pair.first()));
                std::cout << render_table(build_table(pair, delta), format);
            } else {
                std::cout << render_tables(pair, build_family_tables(pair), format);
            }
            return 0;
        }

        if (*cmd_first) {
            Symbol s = parse_symbol(symbol_text);
            GroupKind series = parse_series(series_text);
            bool sp_source = group_of(s).kind == GroupKind::Sp;
            if (sp_source == (series == GroupKind::Sp))
                throw std::invalid_argument(
                    "series must sit opposite the symbol's group (Sp vs O+/O-)");
            FirstOccurrence fo = first_occurrence(s, series);
            std::cout << render_first_occurrence(s, series, fo, format);
            return 0;
        }

        if (*cmd_verify) {
            std::vector<SweepReport> reports;
            if (*verify_table) {
                if (property_text != "L0430")
                    throw std::invalid_argument(
                        "--table audits injectivity; use --property L0430");
                CorrespondenceTable table = parse_table_json(slurp(table_path));
                SweepReport report;
                report.property = "L0430";
                report.cases = static_cast<long long>(table.rows.size());
                report.violations = check_table_injectivity(table);
                reports.push_back(std::move(report));
            } else if (*verify_property) {
                reports.push_back(run_property(property_text, max_rank, threads));
            } else {
                for (const std::string& id : property_ids())
                    reports.push_back(run_property(id, max_rank, threads));
            }
            std::cout << render_reports(reports, max_rank, format);
            for (const SweepReport& r : reports)
                if (!r.ok()) return 1;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
