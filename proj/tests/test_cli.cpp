#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thetasym/render.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace thetasym;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

const char* cli_path() {
    const char* path = std::getenv("THETASYM_CLI");
    REQUIRE_MESSAGE(path != nullptr, "THETASYM_CLI must point at the binary");
    return path;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("'") + cli_path() + "' " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("THETASYM_FIXTURES");
    REQUIRE_MESSAGE(dir != nullptr, "THETASYM_FIXTURES must point at the goldens");
    std::ifstream in(std::string(dir) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture ", name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string rtrim(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
        text.pop_back();
    return text;
}

} // namespace

TEST_CASE("family enumeration matches its goldens in all formats") {
    CHECK(run("enum --group O+8 --delta 0").output == fixture("enum_o8_d0.txt"));
    CHECK(run("enum --group O+8 --delta 0 --format json").output ==
          fixture("enum_o8_d0.json"));
    CHECK(run("enum --group O+8 --delta 0 --format csv").output ==
          fixture("enum_o8_d0.csv"));

    // the format option is accepted on either side of the subcommand
    CHECK(run("--format csv enum --group O+8 --delta 0").output ==
          fixture("enum_o8_d0.csv"));
}

TEST_CASE("correspondence tables match their goldens in all formats") {
    CHECK(run("table --pair O+8,Sp10 --delta 0").output ==
          fixture("table_o8_sp10_d0.txt"));
    CHECK(run("table --pair O+8,Sp10 --delta 0 --format csv").output ==
          fixture("table_o8_sp10_d0.csv"));
    CHECK(run("table --pair O+8,Sp10 --delta 0 --format json").output ==
          fixture("table_o8_sp10_d0.json"));
}

TEST_CASE("relation sets and first occurrences match their goldens") {
    CHECK(run("theta-set --pair O+8,Sp10 --symbol '2;2'").output ==
          fixture("theta_set_2_2.txt"));
    CHECK(run("first-occ --symbol '2,0;4' --series O+").output ==
          fixture("first_occ_2_0_4_oplus.txt"));
}

TEST_CASE("table JSON survives a parse and re-render round trip") {
    std::string golden = fixture("table_o8_sp10_d0.json");
    CorrespondenceTable parsed = parse_table_json(golden);
    CHECK(parsed.delta == 0);
    CHECK(parsed.rows.size() == 20);
    CHECK(rtrim(render_table(parsed, Format::Json)) == rtrim(golden));

    // parsed rows carry no block data; the audit recomputes and passes
    CHECK(check_table_injectivity(parsed).empty());
}

TEST_CASE("verify accepts a stored table and flags corruption") {
    namespace fs = std::filesystem;
    fs::path good = fs::temp_directory_path() / "thetasym_good_table.json";
    fs::path bad = fs::temp_directory_path() / "thetasym_bad_table.json";

    nlohmann::json doc = nlohmann::json::parse(fixture("table_o8_sp10_d0.json"));
    { std::ofstream(good) << doc.dump(2) << '\n'; }
    doc["rows"][1]["overline"] = doc["rows"][0]["overline"];
    { std::ofstream(bad) << doc.dump(2) << '\n'; }

    RunResult clean =
        run("verify --property L0430 --table '" + good.string() + "'");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("PASS") != std::string::npos);

    RunResult flagged =
        run("verify --property L0430 --table '" + bad.string() + "'", true);
    CHECK(flagged.exit_code == 1);
    CHECK(flagged.output.find("FAIL") != std::string::npos);
    CHECK(flagged.output.find("taken by both") != std::string::npos);

    fs::remove(good);
    fs::remove(bad);
}

TEST_CASE("sweeps run from the command line") {
    RunResult one = run("verify --property L0413 --max-rank 2");
    CHECK(one.exit_code == 0);
    CHECK(one.output.find("L0413:") != std::string::npos);
    CHECK(one.output.find("PASS") != std::string::npos);

    RunResult all = run("verify --max-rank 1");
    CHECK(all.exit_code == 0);
    int passes = 0;
    size_t at = 0;
    while ((at = all.output.find("PASS", at)) != std::string::npos) {
        ++passes;
        at += 4;
    }
    CHECK(passes == 22);
}

TEST_CASE("errors carry distinct exit codes") {
    // malformed input: exit 2
    CHECK(run("enum --group Sp9 --delta 1", true).exit_code == 2);
    CHECK(run("enum --group O+8", true).exit_code == 2);         // missing option
    CHECK(run("enum --group O+8 --delta 3", true).exit_code == 2);
    CHECK(run("nonsense", true).exit_code == 2);
    CHECK(run("verify --property L9999 --max-rank 1", true).exit_code == 2);

    RunResult wrong = run("theta-set --pair O+8,Sp10 --symbol '2,0;4'", true);
    CHECK(wrong.exit_code == 2);
    CHECK(wrong.output.find("belongs to Sp10") != std::string::npos);

    // help is not an error
    RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("Usage") != std::string::npos);
}
