#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

std::string bin() {
    const char* b = std::getenv("ANNKH_BIN");
    REQUIRE_MESSAGE(b != nullptr, "ANNKH_BIN must point at the CLI binary");
    return b;
}

std::string data_path(const std::string& name) { return std::string(ANNKH_TEST_DATA_DIR) + "/" + name; }

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("sj golden output") {
    RunResult r = run("sj " + data_path("essential_unknot.ankh"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q*t + q^-1*t^-1 | z | z\nt=1: q + q^-1\n");

    RunResult circle = run("sj " + data_path("trivial_circle.ankh"));
    CHECK(circle.out == "q + q^-1 | (q + q^-1) | (-a^2 - a^-2)\nt=1: q + q^-1\n");
}

TEST_CASE("homology tables") {
    RunResult r = run("homology " + data_path("essential_unknot.ankh"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "i=0 j=-1 dim=1\ni=0 j=1 dim=1\ntotal 2\n");

    RunResult reduced = run("homology --reduced " + data_path("trivial_circle_marked.ankh"));
    CHECK(reduced.out == "i=0 j=0 dim=1\ntotal 1\n");

    RunResult ann = run("annular " + data_path("sigma1.ankh"));
    CHECK(ann.exit_code == 0);
    CHECK(ann.out.find("total 4") != std::string::npos);
}

TEST_CASE("ss pages") {
    RunResult r = run("ss " + data_path("sigma1.ankh"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("page 1: total 4") != std::string::npos);
    CHECK(r.out.find("page 2 (stable): total 2") != std::string::npos);

    RunResult capped = run("ss --max-page 1 " + data_path("sigma1.ankh"));
    CHECK(capped.out.find("page 2") == std::string::npos);
}

TEST_CASE("deterministic output") {
    for (const char* cmd : {"sj", "homology", "annular", "rt", "ss", "dump"}) {
        std::string file = std::string(cmd) == "rt" ? "e1_tangle.ankh" : "trefoil.ankh";
        RunResult a = run(std::string(cmd) + " " + data_path(file));
        RunResult b = run(std::string(cmd) + " " + data_path(file));
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
    // thread count must not change results
    RunResult one = run("sj --threads 1 " + data_path("trefoil.ankh"));
    RunResult four = run("sj --threads 4 " + data_path("trefoil.ankh"));
    CHECK(one.out == four.out);
}

TEST_CASE("json and text encode the same data") {
    RunResult text = run("homology " + data_path("trefoil.ankh"));
    RunResult as_json = run("homology --json " + data_path("trefoil.ankh"));
    CHECK(as_json.exit_code == 0);
    auto j = nlohmann::json::parse(as_json.out);
    long long total = 0;
    for (const auto& row : j["dims"]) {
        std::string line = "i=" + std::to_string(row["i"].get<int>()) +
                           " j=" + std::to_string(row["j"].get<int>()) +
                           " dim=" + std::to_string(row["dim"].get<int>());
        CHECK(text.out.find(line) != std::string::npos);
        total += row["dim"].get<long long>();
    }
    CHECK(total == j["total"].get<long long>());

    RunResult sj_json = run("sj --json " + data_path("essential_unknot.ankh"));
    auto js = nlohmann::json::parse(sj_json.out);
    CHECK(js["sj"].size() == 2);
    CHECK(js["jones"].size() == 2);

    RunResult ss_json = run("ss --json " + data_path("sigma1.ankh"));
    auto jss = nlohmann::json::parse(ss_json.out);
    REQUIRE(jss["pages"].size() == 2);
    CHECK(jss["pages"][0]["total"] == 4);
    CHECK(jss["pages"][1]["stable"] == true);

    RunResult rt_json = run("rt --json " + data_path("e1_tangle.ankh"));
    auto jrt = nlohmann::json::parse(rt_json.out);
    CHECK(jrt["m"] == 2);
    CHECK(jrt["blocks"].size() == 3);

    RunResult check_json = run("check --json " + data_path("sigma1.ankh"));
    auto jc = nlohmann::json::parse(check_json.out);
    CHECK(jc["ok"] == true);
    CHECK(jc["checks"].size() >= 15);
}

TEST_CASE("json diagrams are accepted and reprinted") {
    RunResult r = run("parse " + data_path("e1_closure.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m=2\nclosure=annular\nslice: cap@1\nslice: cup@1\n");

    RunResult as_json = run("parse --json " + data_path("sigma1.ankh"));
    auto j = nlohmann::json::parse(as_json.out);
    CHECK(j["m"] == 2);
    CHECK(j["closure"] == "annular");
}

TEST_CASE("check command and exit codes") {
    RunResult ok = run("check " + data_path("sigma1.ankh"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    RunResult neg = run("check --negative-control " + data_path("sigma1.ankh"));
    CHECK(neg.exit_code == 1);
    CHECK(neg.out.find("FAIL rt-weight-preservation") != std::string::npos);

    RunResult missing = run("check " + data_path("does_not_exist.ankh"));
    CHECK(missing.exit_code == 2);

    RunResult invalid = run("parse " + data_path("invalid.ankh"));
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.out.find("line") != std::string::npos);
}

TEST_CASE("dump format") {
    RunResult r = run("dump " + data_path("sigma1.ankh"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("generators:") != std::string::npos);
    CHECK(r.out.find("differential:") != std::string::npos);
    // entries are 'i j k row col'
    CHECK(r.out.find("\n0 3 2 0 0\n") != std::string::npos);
}

TEST_CASE("crossing guardrail") {
    RunResult refused = run("jones " + data_path("sigma1_pow25.ankh"));
    CHECK(refused.exit_code == 2);
    CHECK(refused.out.find("--force") != std::string::npos);
}
