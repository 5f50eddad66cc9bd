#include <doctest.h>

#include <coxlab/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = coxlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string golden = COXLAB_GOLDEN_DIR;

}  // namespace

TEST_CASE("cli interval json") {
    auto r = run({"interval", "--type", "A", "--rank", "3", "--w", "3412", "--format", "json"});
    CHECK(r.code == 0);
    auto j = coxlab::io::json::parse(r.out);
    CHECK(j.at("members").size() == 14);
    std::vector<std::size_t> level_sizes;
    for (const auto& level : j.at("levels")) level_sizes.push_back(level.size());
    CHECK(level_sizes == std::vector<std::size_t>{1, 3, 5, 4, 1});

    auto single = run({"interval", "--group", "A3", "--w", "e"});
    CHECK(single.code == 0);
    CHECK(coxlab::io::json::parse(single.out).at("members").size() == 1);
}

TEST_CASE("cli interval dot clusters") {
    auto r = run({"interval", "--group", "A3", "--w", "3412", "--format", "dot"});
    CHECK(r.code == 0);
    std::size_t clusters = 0, pos = 0;
    while ((pos = r.out.find("rank=same", pos)) != std::string::npos) {
        ++clusters;
        ++pos;
    }
    CHECK(clusters == 5);

    auto hasse = run({"interval", "--group", "A3", "--w", "3412", "--format", "dot", "--hasse"});
    CHECK(hasse.code == 0);
    CHECK(hasse.out.size() < r.out.size());
}

TEST_CASE("cli cosets table matches golden") {
    auto r = run({"cosets", "--group", "A3", "--w", "3412", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden + "/table1.txt"));

    auto j = run({"cosets", "--group", "A3", "--w", "3412", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(coxlab::io::json::parse(j.out).at("cosets").size() == 4);
}

TEST_CASE("cli quotient") {
    auto r = run({"quotient", "--group", "A4", "--w", "45312"});
    CHECK(r.code == 0);
    auto j = coxlab::io::json::parse(r.out);
    CHECK(j.at("separated") == true);
    CHECK(j.at("arcs").size() == 4);

    auto dot = run({"quotient", "--group", "A4", "--w", "52341", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out == slurp(golden + "/quotient_52341.dot"));
}

TEST_CASE("cli check commands") {
    auto t1 = run({"check", "theorem1", "--group", "A3", "--all"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("24 passed, 0 failed, 0 skipped") != std::string::npos);

    auto skip = run({"check", "theorem2", "--type", "A", "--rank", "5", "--w", "456123"});
    CHECK(skip.code == 0);
    CHECK(skip.out.find("[SKIP]") != std::string::npos);
    CHECK(skip.out.find("not separated") != std::string::npos);

    auto appendix = run({"check", "appendix", "--group", "A3", "--all"});
    CHECK(appendix.code == 0);
    CHECK(appendix.out.find("1 passed, 0 failed, 0 skipped") != std::string::npos);
}

TEST_CASE("cli default scope is the whole small group") {
    // Without --all/--sample, A3 runs exhaustively and A5 falls back to a
    // seeded sample of 50.
    auto a3 = run({"check", "theorem1", "--group", "A3"});
    CHECK(a3.code == 0);
    CHECK(a3.out.find("24 passed") != std::string::npos);
    auto a5 = run({"check", "theorem1", "--group", "A5"});
    CHECK(a5.code == 0);
    CHECK(a5.out.find("50 passed") != std::string::npos);
}

TEST_CASE("cli scan commands") {
    auto deodhar = run({"scan", "deodhar", "--group", "A3", "--all"});
    CHECK(deodhar.code == 0);
    CHECK(coxlab::io::json::parse(deodhar.out)
              .at("clauses")[0]
              .at("witness")
              .get<std::string>()
              .find("min slack 0") == 0);

    auto poincare = run({"scan", "poincare", "--group", "A3", "--w", "3412"});
    CHECK(poincare.code == 0);
    auto j = coxlab::io::json::parse(poincare.out);
    CHECK(j.at("pairs")[0].at("coefficients") == coxlab::io::json::array({1, 3, 5, 4, 1}));
    CHECK(j.at("pairs")[0].at("pdown") == "2143");

    auto degmono1 = run({"scan", "degmono", "--group", "A3", "--all", "--seed", "7"});
    auto degmono2 = run({"scan", "degmono", "--group", "A3", "--all", "--seed", "7"});
    CHECK(degmono1.code == 0);
    CHECK(degmono1.out == degmono2.out);

    auto witnesses = run({"scan", "witnesses", "--group", "A3", "--all"});
    CHECK(witnesses.code == 0);
    CHECK(coxlab::io::json::parse(witnesses.out).at("clauses").size() == 3);
}

TEST_CASE("cli sampling is seed deterministic") {
    auto a = run({"check", "theorem1", "--group", "A4", "--sample", "5", "--seed", "11"});
    auto b = run({"check", "theorem1", "--group", "A4", "--sample", "5", "--seed", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("5 passed") != std::string::npos);
}

TEST_CASE("cli export writes all artifacts") {
    auto dir = std::filesystem::temp_directory_path() / "coxlab-export-test";
    std::filesystem::remove_all(dir);
    auto r = run({"export", "--group", "A3", "--w", "3412", "--out", dir.string()});
    CHECK(r.code == 0);
    for (const char* name : {"interval.json", "interval.dot", "cosets.json", "cosets.txt",
                             "quotient.json", "quotient.dot"})
        CHECK(std::filesystem::exists(dir / name));
    CHECK(slurp((dir / "cosets.txt").string()) == slurp(golden + "/table1.txt"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli error handling") {
    CHECK(run({"interval", "--group", "A3", "--w", "341"}).code == 2);
    CHECK(run({"interval", "--group", "A3", "--w", "3412", "--format", "yaml"}).code == 2);
    CHECK(run({"interval", "--w", "3412"}).code == 2);              // no system
    CHECK(run({"check", "nosuch", "--group", "A3", "--all"}).code == 2);
    CHECK(run({"scan", "nosuch", "--group", "A3", "--all"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"interval", "--group", "B3", "--w", "e"}).code == 2);

    auto bad_matrix = std::filesystem::temp_directory_path() / "coxlab-bad-matrix.json";
    {
        std::ofstream f(bad_matrix);
        f << R"({"coxeter_matrix":[[1,5],[5,1]]})";
    }
    auto r = run({"interval", "--matrix-file", bad_matrix.string(), "--w", "1 2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not crystallographic") != std::string::npos);
    std::filesystem::remove(bad_matrix);
}

TEST_CASE("cli help") {
    CHECK(run({"--help"}).code == 0);
}
