#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thetasym/correspond.hpp"
#include "thetasym/degree_order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace thetasym;

namespace {

Symbol sym(const std::string& text) { return parse_symbol(text); }

std::vector<std::string> names(const std::vector<Symbol>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Symbol& s : v) out.push_back(to_string(s));
    return out;
}

const TableRow& row_for(const CorrespondenceTable& table, const std::string& src) {
    for (const TableRow& row : table.rows)
        if (to_string(row.source) == src) return row;
    REQUIRE_MESSAGE(false, "missing row ", src);
    throw std::logic_error("unreachable");
}

std::string opt_name(const std::optional<Symbol>& s) {
    return s ? to_string(*s) : "<none>";
}

} // namespace

TEST_CASE("theta_zero matches its closed forms") {
    // tau clears the addition row: a fresh entry on top of the swapped rows
    CHECK(to_string(theta_zero(sym("4;0"), parse_pair("O+8,Sp10"))) == "2,0;4");
    CHECK(to_string(theta_zero(sym("3,2,1,0;-"), parse_pair("O+8,Sp10"))) ==
          "3;3,2,1,0");
    CHECK(to_string(theta_zero(sym("-;2,0"), parse_pair("O-4,Sp10"))) == "2,0;4");
    CHECK(to_string(theta_zero(sym("1;2,1,0"), parse_pair("O-4,Sp10"))) ==
          "2,1,0;5,1");

    // tau = 0: plain row swap with a shift
    CHECK(to_string(theta_zero(sym("9,4,2,1;5,4,2,0"), parse_pair("O+30,Sp30"))) ==
          "6,5,3,1,0;9,4,2,1");

    // general rule when tau falls inside the addition row
    CHECK(to_string(theta_zero(sym("4,3;3,2"), parse_pair("O+20,Sp22"))) ==
          "4,3,1;4,3");
    CHECK(to_string(theta_zero(sym("5,2;3,2"), parse_pair("O+20,Sp22"))) ==
          "4,3,1;5,2");

    CHECK_THROWS_AS(theta_zero(sym("2,0;4"), parse_pair("Sp10,O+8")),
                    std::invalid_argument);
}

TEST_CASE("peak diagnostics locate the order maximum") {
    PeakDiagnostics pd =
        find_k0(sym("9,4,2,1;5,4,2,0"), parse_pair("O+30,Sp30"));
    CHECK(pd.ords == std::vector<int>{187, 195, 199, 199, 196, 190, 179});
    CHECK(pd.alpha == std::vector<int>{1, 3, 6, 7, 8, 9, 10});
    CHECK(pd.beta == std::vector<int>{9, 8, 7, 6, 4, 1, 0});
    CHECK(pd.k0 == 2);
    CHECK(pd.tie);

    DualPair pair = parse_pair("O+8,Sp10");
    PeakDiagnostics lone = find_k0(sym("4;0"), pair);
    CHECK(lone.k0 == 1);
    CHECK_FALSE(lone.tie);
    CHECK(lone.ords.size() == 5);

    PeakDiagnostics tied = find_k0(sym("2;2"), pair);
    CHECK(tied.k0 == 0);
    CHECK(tied.tie);

    PeakDiagnostics tied2 = find_k0(sym("3;1"), pair);
    CHECK(tied2.k0 == 0);
    CHECK(tied2.tie);

    CHECK_THROWS_AS(find_k0(sym("2,0;4"), parse_pair("Sp10,O+8")),
                    std::invalid_argument);
}

TEST_CASE("underline extends to negative tau as a partial inverse") {
    // non-negative tau: plain theta_0
    CHECK(opt_name(underline_theta(sym("4;0"), parse_pair("O+8,Sp10"))) ==
          "2,0;4");

    // negative tau, defined: -tau occurs in the shrinking row
    CHECK(opt_name(underline_theta(sym("4,1;3,1"), parse_pair("O+14,Sp8"))) ==
          "3,1;1");
    CHECK(opt_name(underline_theta(sym("2,0;4"), parse_pair("Sp10,O+8"))) ==
          "4;0");

    // negative tau, undefined: -tau misses the row
    CHECK_FALSE(underline_theta(sym("4,1;3,1"), parse_pair("O+14,Sp10")));
    CHECK_FALSE(underline_theta(sym("3,0;3"), parse_pair("Sp10,O+8")));

    CHECK_THROWS_AS(underline_theta(sym("4;0"), parse_pair("Sp4,O+4")),
                    std::invalid_argument);
}

TEST_CASE("the defect-zero table of the split rank-four pair") {
    CorrespondenceTable table = build_table(parse_pair("O+8,Sp10"), 0);
    CHECK(table.delta == 0);
    CHECK(table.pair.first() == GroupTag{GroupKind::OPlus, 4});
    REQUIRE(table.rows.size() == 20);

    // sources in the linear order, with both one-to-one images per row
    struct Expected {
        const char* source;
        const char* underline;
        const char* overline;
    };
    const Expected expected[20] = {
        {"3,2,1,0;4,3,2,1", "5,4,3,2,1;3,2,1,0", "5,4,3,2,1;3,2,1,0"},
        {"2,1,0;4,2,1", "5,3,2,1;2,1,0", "5,3,2,1;2,1,0"},
        {"1,0;3,2", "4,3,1;1,0", "4,3,1;1,0"},
        {"1,0;4,1", "5,2,1;1,0", "5,2,1;1,0"},
        {"0;4", "5,1;0", "5,1;0"},
        {"3,1,0;3,2,1", "4,3,2,1;3,1,0", "4,3,2,1;3,1,0"},
        {"2,0;3,1", "4,2,1;2,0", "4,2,1;2,0"},
        {"1;3", "4,1;1", "4,1;1"},
        {"2,1;2,1", "3,2,1;2,1", "3,2,1;2,1"},
        {"2,1;3,0", "4,2,0;2,1", "4,2,0;2,1"},
        {"3,0;2,1", "3,2,1;3,0", "3,2,1;3,0"},
        {"2;2", "3,1;2", "3,1;2"},
        {"3,2,1;3,1,0", "4,3,1,0;3,2,1", "4,3,1,0;3,2,1"},
        {"3,1;2,0", "3,2,0;3,1", "3,2,0;3,1"},
        {"3;1", "2,1;3", "2,1;3"},
        {"4,3,2,1;3,2,1,0", "5,3,2,1,0;4,3,2,1", "5,3,2,1,0;4,3,2,1"},
        {"4,2,1;2,1,0", "4,2,1,0;4,2,1", "4,2,1,0;4,2,1"},
        {"3,2;1,0", "3,1,0;3,2", "3,1,0;3,2"},
        {"4,1;1,0", "3,1,0;4,1", "3,1,0;4,1"},
        {"4;0", "2,0;4", "3,0;3"},
    };
    for (int i = 0; i < 20; ++i) {
        CAPTURE(i);
        const TableRow& row = table.rows[i];
        CHECK(to_string(row.source) == expected[i].source);
        CHECK(opt_name(row.underline) == expected[i].underline);
        CHECK(opt_name(row.overline) == expected[i].overline);
        REQUIRE(row.k0.has_value());
        REQUIRE(row.tie.has_value());
    }

    // the images form a system of distinct representatives
    REQUIRE(table.used.size() == 20);
    std::set<Symbol> distinct(table.used.begin(), table.used.end());
    CHECK(distinct.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(table.used[i] == *table.rows[i].overline);

    // peak positions of selected rows
    CHECK(*row_for(table, "4;0").k0 == 1);
    CHECK_FALSE(*row_for(table, "4;0").tie);
    CHECK(*row_for(table, "2;2").k0 == 0);
    CHECK(*row_for(table, "2;2").tie);
    CHECK(*row_for(table, "3;1").k0 == 0);
    CHECK(*row_for(table, "3;1").tie);
    CHECK(*row_for(table, "3,2,1,0;4,3,2,1").k0 == 0);
    CHECK_FALSE(*row_for(table, "3,2,1,0;4,3,2,1").tie);

    // one row whose relation set is a chain of singleton blocks
    const TableRow& last = row_for(table, "4;0");
    CHECK(last.theta_flat_size == 5);
    REQUIRE(last.blocks.size() == 5);
    const char* chain[] = {"2,0;4", "3,0;3", "4,0;2", "5,0;1", "5;-"};
    for (int k = 0; k < 5; ++k) {
        CAPTURE(k);
        CHECK(last.blocks[k].k == k);
        CHECK(names(last.blocks[k].members) ==
              std::vector<std::string>{chain[k]});
        REQUIRE(last.blocks[k].distinguished.has_value());
        CHECK(to_string(*last.blocks[k].distinguished) == chain[k]);
        CHECK(last.blocks[k].max_order_members.size() == (k == 1 ? 1u : 0u));
    }

    // one row with a two-block order maximum
    const TableRow& shared = row_for(table, "2;2");
    REQUIRE(shared.blocks.size() == 3);
    CHECK(names(shared.blocks[0].members) ==
          std::vector<std::string>{"3,1;2", "4,0;2"});
    CHECK(names(shared.blocks[1].members) ==
          std::vector<std::string>{"3,2;1", "4,1;1", "5,0;1"});
    CHECK(names(shared.blocks[2].members) ==
          std::vector<std::string>{"4,2;0", "5,1;0", "5;-"});
    CHECK(names(shared.blocks[0].max_order_members) ==
          std::vector<std::string>{"3,1;2"});
    CHECK(names(shared.blocks[1].max_order_members) ==
          std::vector<std::string>{"3,2;1"});
    CHECK(shared.blocks[2].max_order_members.empty());
    CHECK(shared.theta_flat_size == 8);

    CHECK(opt_name(overline_theta(sym("4;0"), table.pair)) == "3,0;3");
    CHECK(table_coverage_violations(enumerate_family(4, 0), table).empty());
}

TEST_CASE("family tables cover every defect class") {
    std::vector<CorrespondenceTable> tables =
        build_family_tables(parse_pair("O+8,Sp10"));
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].delta == 4);
    CHECK(tables[1].delta == 0);
    CHECK(tables[2].delta == -4);
    CHECK(tables[0].rows.size() == 1);
    CHECK(tables[1].rows.size() == 20);
    CHECK(tables[2].rows.size() == 1);

    // the top defect has a unique source with a unique partner
    const TableRow& top = tables[0].rows[0];
    CHECK(to_string(top.source) == "3,2,1,0;-");
    CHECK(top.theta_flat_size == 1);
    CHECK(opt_name(top.underline) == "3;3,2,1,0");
    CHECK(opt_name(top.overline) == "3;3,2,1,0");

    // the bottom defect misses the relation entirely
    const TableRow& bottom = tables[2].rows[0];
    CHECK(to_string(bottom.source) == "-;3,2,1,0");
    CHECK(bottom.theta_flat_size == 0);
    CHECK_FALSE(bottom.underline.has_value());
    CHECK_FALSE(bottom.overline.has_value());
    CHECK_FALSE(bottom.k0.has_value());
    CHECK_FALSE(bottom.tie.has_value());
    CHECK(table_coverage_violations(enumerate_family(4, -4), tables[2]) ==
          std::vector<Symbol>{sym("-;3,2,1,0")});
}

TEST_CASE("negative tau tables invert the reversed assignment") {
    CorrespondenceTable table = build_table(parse_pair("Sp10,O+8"), 1);
    REQUIRE(table.rows.size() == 36);
    CHECK(table.used.size() == 20);

    int with_overline = 0;
    for (const TableRow& row : table.rows) {
        if (row.overline) ++with_overline;
        CHECK_FALSE(row.k0.has_value());
        CHECK_FALSE(row.tie.has_value());
    }
    CHECK(with_overline == 20);

    // the two maps are genuinely different partial maps
    const TableRow& under_only = row_for(table, "2,0;4");
    CHECK(opt_name(under_only.underline) == "4;0");
    CHECK_FALSE(under_only.overline.has_value());
    CHECK(under_only.theta_flat_size == 1);
    REQUIRE(under_only.blocks.size() == 2);
    CHECK(under_only.blocks[0].members.empty());
    CHECK(names(under_only.blocks[1].members) ==
          std::vector<std::string>{"4;0"});
    CHECK_FALSE(under_only.blocks[1].distinguished.has_value());

    const TableRow& over_only = row_for(table, "3,0;3");
    CHECK_FALSE(over_only.underline.has_value());
    CHECK(opt_name(over_only.overline) == "4;0");
    CHECK(over_only.theta_flat_size == 3);
    REQUIRE(over_only.blocks.size() == 3);
    CHECK(over_only.blocks[0].members.empty());
    CHECK(names(over_only.blocks[1].members) ==
          std::vector<std::string>{"3;1"});
    CHECK(names(over_only.blocks[2].members) ==
          std::vector<std::string>{"4,1;1,0", "4;0"});

    std::vector<Symbol> unmatched =
        table_coverage_violations(enumerate_family(5, 1), table);
    CHECK(unmatched.size() == 16);
    for (const Symbol& s : unmatched)
        CHECK_FALSE(row_for(table, to_string(s)).overline.has_value());

    CHECK(opt_name(overline_theta(sym("3,0;3"), table.pair)) == "4;0");
    CHECK_FALSE(overline_theta(sym("2,0;4"), table.pair).has_value());
}

TEST_CASE("two sources compete for one shared target") {
    DualPair pair = parse_pair("O+20,Sp22");
    CorrespondenceTable table = build_table(pair, 0);
    REQUIRE(table.rows.size() == 481);

    // the shared target is the unique order maximum of both relation sets
    Symbol shared = sym("4,3,2;4,2");
    const TableRow& first = row_for(table, "4,3;3,2");
    const TableRow& second = row_for(table, "5,2;3,2");
    for (const TableRow* row : {&first, &second}) {
        std::vector<Symbol> members = theta_members(row->blocks);
        int hits = 0;
        for (const Symbol& m : members) {
            CHECK(ord_closed(m) <= ord_closed(shared));
            if (ord_closed(m) == ord_closed(shared)) ++hits;
        }
        CHECK(hits == 1);
        CHECK(std::count(members.begin(), members.end(), shared) == 1);
    }
    CHECK(ord_closed(shared) == 101);

    // the earlier source wins it; the later one drops to the next level
    CHECK(opt_name(first.overline) == "4,3,2;4,2");
    CHECK(*first.k0 == 1);
    CHECK_FALSE(*first.tie);
    CHECK(opt_name(second.overline) == "4,3,1;5,2");
    CHECK(opt_name(second.underline) == "4,3,1;5,2");

    // an even earlier competitor had already taken the runner-up
    const TableRow& earlier = row_for(table, "4,2;4,2");
    CHECK(opt_name(earlier.overline) == "5,3,2;3,2");
    CHECK(*earlier.k0 == 1);

    // replay the choice with the shared target removed: the next-order
    // member is the runner-up, unique at its level
    std::vector<Symbol> rest = theta_members(second.blocks);
    rest.erase(std::remove(rest.begin(), rest.end(), shared), rest.end());
    int best = ord_closed(rest.front());
    for (const Symbol& m : rest) best = std::max(best, ord_closed(m));
    CHECK(best == 100);
    std::vector<Symbol> at_best;
    for (const Symbol& m : rest)
        if (ord_closed(m) == best) at_best.push_back(m);
    REQUIRE(at_best.size() == 1);
    CHECK(to_string(at_best.front()) == "5,3,2;3,2");

    std::set<Symbol> distinct(table.used.begin(), table.used.end());
    CHECK(distinct.size() == table.used.size());
}

TEST_CASE("stable range sources keep their lowest member") {
    DualPair pair = parse_pair("O-4,Sp10");
    CHECK(pair.stable_range());
    CorrespondenceTable table = build_table(pair, -2);
    REQUIRE(table.rows.size() == 2);
    CHECK(to_string(table.rows[0].source) == "1;2,1,0");
    CHECK(to_string(table.rows[1].source) == "-;2,0");
    for (const TableRow& row : table.rows) {
        REQUIRE(row.underline.has_value());
        REQUIRE(row.overline.has_value());
        CHECK(*row.underline == *row.overline);
    }
    CHECK(opt_name(table.rows[1].underline) == "2,0;4");
}

TEST_CASE("first occurrence scans a target series") {
    Symbol s = sym("2,0;4");

    FirstOccurrence split = first_occurrence(s, GroupKind::OPlus);
    CHECK(split.n_theta == 4);
    CHECK(split.n_underline == 4);
    CHECK(opt_name(split.underline_image) == "4;0");
    CHECK(split.n_overline == 5);
    CHECK(opt_name(split.overline_image) == "4;1");

    FirstOccurrence quasi = first_occurrence(s, GroupKind::OMinus);
    CHECK(quasi.n_theta == 2);
    CHECK(quasi.n_underline == 2);
    CHECK(opt_name(quasi.underline_image) == "-;2,0");
    CHECK(quasi.n_overline == 2);
    CHECK(opt_name(quasi.overline_image) == "-;2,0");

    FirstOccurrence cheap = first_occurrence(s, GroupKind::OPlus, false);
    CHECK(cheap.n_theta == 4);
    CHECK(cheap.n_underline == 4);
    CHECK(cheap.n_overline == -1);
    CHECK_FALSE(cheap.overline_image.has_value());

    // a trivial character first occurs against the rank-zero group
    FirstOccurrence at_zero = first_occurrence(sym("4;0"), GroupKind::Sp);
    CHECK(at_zero.n_theta == 0);
    CHECK(at_zero.n_underline == 0);
    CHECK(at_zero.n_overline == 0);
    CHECK(opt_name(at_zero.underline_image) == "0;-");
    CHECK(opt_name(at_zero.overline_image) == "0;-");

    CHECK_THROWS_AS(first_occurrence(s, GroupKind::Sp), std::invalid_argument);
    CHECK_THROWS_AS(first_occurrence(sym("4;0"), GroupKind::OPlus),
                    std::invalid_argument);
}

TEST_CASE("coverage audit flags sources from the wrong class") {
    CorrespondenceTable table = build_table(parse_pair("O+8,Sp10"), 0);
    std::vector<Symbol> mixed = enumerate_family(4, 0);
    std::vector<Symbol> alien = enumerate_family(4, 4);
    mixed.insert(mixed.end(), alien.begin(), alien.end());
    CHECK(table_coverage_violations(mixed, table) == alien);
}
