#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thetasym/theta.hpp"

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
    for (const Symbol& s : v) out.push_back(to_string(s));
    return out;
}

// a <= b part-wise with each column losing at most one box
bool vstrip(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i)
        if (!(b.part(i) - 1 <= a.part(i) && a.part(i) <= b.part(i)))
            return false;
    return true;
}

// the relation retyped from its bipartition definition: the symplectic
// symbol sits in the left slot, the orthogonal one in the right, the
// transposed rows must differ by vertical strips crosswise and the
// defects must be opposite up to the sign-dependent unit
bool oracle_related(const Symbol& s, const Symbol& sprime, const DualPair& pair) {
    bool sp_first = pair.first().kind == GroupKind::Sp;
    const Symbol& L = sp_first ? s : sprime;
    const Symbol& R = sp_first ? sprime : s;
    BiPartition ul = upsilon(L);
    BiPartition ur = upsilon(R);
    const Partition& lam = ul.top;
    const Partition& mu = ul.bottom;
    const Partition& lamp = ur.top;
    const Partition& mup = ur.bottom;
    if (pair.eps() == Eps::Plus)
        return vstrip(dual(mu), dual(lamp)) && vstrip(dual(mup), dual(lam)) &&
               R.defect() == -L.defect() + 1;
    return vstrip(dual(lam), dual(mup)) && vstrip(dual(lamp), dual(mu)) &&
           R.defect() == -L.defect() - 1;
}

} // namespace

TEST_CASE("dual pair basics") {
    DualPair pair = parse_pair("O+8,Sp10");
    CHECK(to_string(pair) == "O+8,Sp10");
    CHECK(pair.first() == parse_group("O+8"));
    CHECK(pair.second() == parse_group("Sp10"));
    CHECK(pair.eps() == Eps::Plus);
    CHECK(pair.reversed() == parse_pair("Sp10,O+8"));
    CHECK(parse_pair("Sp10,O-4").eps() == Eps::Minus);
    CHECK(parse_pair("O-4,Sp10").eps() == Eps::Minus);
    CHECK_THROWS_AS(parse_pair("Sp4,Sp6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pair("O+4,O-6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pair("O+8"), std::invalid_argument);

    CHECK(parse_pair("O-4,Sp10").stable_range());
    CHECK_FALSE(parse_pair("O+8,Sp10").stable_range());
    CHECK(parse_pair("Sp4,O+10").stable_range());
}

TEST_CASE("defect parameters of a pair") {
    DualPair plus = parse_pair("O+8,Sp10");
    CHECK(d_of(plus, 0) == 0);
    CHECK(d_of(plus, 4) == 1);
    CHECK(d_of(plus, -4) == -1);
    CHECK(tau(plus, 0) == 1);
    CHECK(related_defect(plus, 0) == 1);
    CHECK(related_defect(plus, 4) == -3);
    CHECK_THROWS_AS(tau(plus, 1), std::invalid_argument);

    CHECK(tau(parse_pair("O+20,Sp22"), 0) == 1);
    CHECK(tau(parse_pair("O+30,Sp30"), 0) == 0);
    CHECK(tau(parse_pair("Sp4,O+4"), 1) == 0);
    CHECK(related_defect(parse_pair("Sp4,O+4"), 1) == 0);
    CHECK(tau(parse_pair("O+14,Sp10"), 0) == -2);
    CHECK(tau(parse_pair("O+14,Sp8"), 0) == -3);

    DualPair minus = parse_pair("O-4,Sp10");
    CHECK(tau(minus, -2) == 4);
    CHECK(related_defect(minus, -2) == 1);
    CHECK(tau(parse_pair("Sp10,O-4"), 1) == -4);
    CHECK(related_defect(parse_pair("Sp10,O-4"), 1) == -2);
}

TEST_CASE("relation membership agrees with the retyped definition") {
    for (const char* pair_text : {"O+8,Sp10", "Sp4,O+4", "O-4,Sp10", "Sp6,O-8"}) {
        DualPair pair = parse_pair(pair_text);
        for (int delta : family_defects(pair.first())) {
            int dprime = related_defect(pair, delta);
            if (defect_floor(delta) > pair.first().half_rank) continue;
            std::vector<Symbol> targets;
            if (defect_floor(dprime) <= pair.second().half_rank)
                targets = enumerate_family(pair.second().half_rank, dprime);
            for (const Symbol& s :
                 enumerate_family(pair.first().half_rank, delta))
                for (const Symbol& t : targets) {
                    CHECK(related(s, t, pair) == oracle_related(s, t, pair));
                    CHECK(related(s, t, pair) ==
                          related(t, s, pair.reversed()));
                }
        }
    }
}

TEST_CASE("theta_set collects exactly the related targets, in blocks") {
    for (const char* pair_text : {"O+8,Sp10", "O+14,Sp10", "Sp4,O+8", "O-4,Sp10"}) {
        DualPair pair = parse_pair(pair_text);
        int delta = family_defects(pair.first()).at(
            family_defects(pair.first()).size() > 1 ? 1 : 0);
        int dprime = related_defect(pair, delta);
        std::vector<Symbol> targets;
        if (defect_floor(dprime) <= pair.second().half_rank)
            targets = enumerate_family(pair.second().half_rank, dprime);
        for (const Symbol& s : enumerate_family(pair.first().half_rank, delta)) {
            std::vector<ThetaBlock> blocks = theta_set(s, pair);
            std::vector<Symbol> flat = theta_members(blocks);

            std::set<std::string> got;
            for (const Symbol& m : flat) CHECK(got.insert(to_string(m)).second);
            std::set<std::string> expected;
            for (const Symbol& t : targets)
                if (oracle_related(s, t, pair)) expected.insert(to_string(t));
            CHECK(got == expected);

            // block index book-keeping: on the shrinking side the member
            // loses exactly k boxes, on the growing side it gains tau+k
            BiPartition u = upsilon(s);
            int t0 = tau(pair, delta);
            for (const ThetaBlock& block : blocks) {
                for (const Symbol& m : block.members) {
                    BiPartition um = upsilon(m);
                    if (pair.eps() == Eps::Plus) {
                        CHECK(um.bottom.norm() == u.top.norm() - block.k);
                        CHECK(um.top.norm() == u.bottom.norm() + t0 + block.k);
                    } else {
                        CHECK(um.top.norm() == u.bottom.norm() - block.k);
                        CHECK(um.bottom.norm() == u.top.norm() + t0 + block.k);
                    }
                }
                if (t0 >= 0) {
                    REQUIRE(block.distinguished.has_value());
                    CHECK(*block.distinguished ==
                          theta_k_map(s, pair, block.k));
                    REQUIRE_FALSE(block.members.empty());
                    CHECK(block.members.front() == *block.distinguished);
                } else {
                    CHECK_FALSE(block.distinguished.has_value());
                }
            }
        }
    }
}

TEST_CASE("worked relation sets") {
    DualPair pair = parse_pair("O+8,Sp10");
    std::vector<ThetaBlock> blocks = theta_set(sym("4;0"), pair);
    REQUIRE(blocks.size() == 5);
    CHECK(names(blocks[0].members) == std::vector<std::string>{"2,0;4"});
    CHECK(names(blocks[1].members) == std::vector<std::string>{"3,0;3"});
    CHECK(names(blocks[2].members) == std::vector<std::string>{"4,0;2"});
    CHECK(names(blocks[3].members) == std::vector<std::string>{"5,0;1"});
    CHECK(names(blocks[4].members) == std::vector<std::string>{"5;-"});

    // a negative-tau set: low blocks empty, no distinguished members
    std::vector<ThetaBlock> neg =
        theta_set(sym("4,1;3,1"), parse_pair("O+14,Sp10"));
    REQUIRE(neg.size() == 4);
    CHECK(neg[0].members.empty());
    CHECK(neg[1].members.empty());
    CHECK(names(neg[2].members) ==
          std::vector<std::string>{"4,2,0;2,1", "3,1;2"});
    CHECK(names(neg[3].members) ==
          std::vector<std::string>{"4,2,1;2,0", "3,2;1", "4,1;1"});

    std::vector<ThetaBlock> tight =
        theta_set(sym("4,1;3,1"), parse_pair("O+14,Sp8"));
    std::vector<Symbol> flat = theta_members(tight);
    CHECK(names(flat) == std::vector<std::string>{"3,1;1"});

    // empty relation set: the partner family does not exist at this rank
    std::vector<ThetaBlock> none =
        theta_set(sym("-;3,2,1,0"), parse_pair("O+8,Sp10"));
    CHECK(theta_members(none).empty());
}

TEST_CASE("theta_k frozen tables") {
    DualPair pair = parse_pair("O+20,Sp22");
    Symbol a = sym("4,3;3,2");
    CHECK(to_string(theta_k_map(a, pair, 0)) == "4,3,1;4,3");
    CHECK(to_string(theta_k_map(a, pair, 1)) == "4,3,2;4,2");
    CHECK(to_string(theta_k_map(a, pair, 2)) == "5,3,2;4,1");
    CHECK(to_string(theta_k_map(a, pair, 3)) == "6,3,2;4,0");
    CHECK_THROWS_AS(theta_k_map(a, pair, 4), std::invalid_argument);

    Symbol b = sym("5,2;3,2");
    CHECK(to_string(theta_k_map(b, pair, 0)) == "4,3,1;5,2");
    CHECK(to_string(theta_k_map(b, pair, 1)) == "4,3,2;4,2");
    CHECK(to_string(theta_k_map(b, pair, 2)) == "5,3,2;3,2");
    CHECK(to_string(theta_k_map(b, pair, 3)) == "6,3,2;3,1");
    CHECK(to_string(theta_k_map(b, pair, 4)) == "7,3,2;3,0");

    // a tau = 0 sequence, with its bipartition shadow
    DualPair wide = parse_pair("O+30,Sp30");
    Symbol c = sym("9,4,2,1;5,4,2,0");
    // the last entry is an unreduced representative; parsing reduces it
    const char* symbols[] = {"6,5,3,1,0;9,4,2,1", "6,5,3,2,0;8,4,2,1",
                             "6,5,4,2,0;7,4,2,1", "7,5,4,2,0;6,4,2,1",
                             "8,5,4,2,0;5,4,2,1", "9,5,4,2,0;5,3,2,1",
                             "10,5,4,2,0;5,3,2,0"};
    const char* images[] = {"2,2,1|6,2,1,1",   "2,2,1,1|5,2,1,1",
                            "2,2,2,1|4,2,1,1", "3,2,2,1|3,2,1,1",
                            "4,2,2,1|2,2,1,1", "5,2,2,1|2,1,1,1",
                            "6,2,2,1|2,1,1"};
    CHECK(to_string(sym("10,5,4,2,0;5,3,2,0")) == "9,4,3,1;4,2,1");
    for (int k = 0; k <= 6; ++k) {
        Symbol th = theta_k_map(c, wide, k);
        CHECK(to_string(th) == to_string(sym(symbols[k])));
        CHECK(to_string(upsilon(th)) == images[k]);
    }

    // tau < 0 leaves theta_k undefined
    CHECK_THROWS_AS(theta_k_map(sym("4,1;3,1"), parse_pair("O+14,Sp10"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(theta_k_map(sym("2;2"), pair, 0), std::invalid_argument);
}

TEST_CASE("strip moves enumerate horizontal strips") {
    // removals: no two boxes from one column
    CHECK(strip_removals(Partition({3, 1}), 1).size() == 2);
    std::vector<Partition> rem = strip_removals(Partition({3, 1}), 2);
    std::set<std::string> got;
    for (const Partition& p : rem) got.insert(to_string(p));
    CHECK(got == std::set<std::string>{"2", "1,1"});
    CHECK(strip_removals(Partition({2, 2}), 2).size() == 1);
    CHECK(strip_removals(Partition({2, 2}), 3).empty());
    CHECK(strip_removals(Partition(), 0).size() == 1);

    std::vector<Partition> add = strip_additions(Partition({2, 1}), 2);
    std::set<std::string> got_add;
    for (const Partition& p : add) got_add.insert(to_string(p));
    CHECK(got_add == std::set<std::string>{"4,1", "3,2", "2,2,1", "3,1,1"});
    // additions are inverse to removals
    for (const Partition& p : add) {
        std::vector<Partition> back = strip_removals(p, 2);
        CHECK(std::find(back.begin(), back.end(), Partition({2, 1})) !=
              back.end());
    }
}
