#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sscx/errors.hpp"
#include "sscx/suites.hpp"

using namespace sscx;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sscx");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

Task task(std::string suite, std::int64_t n, std::function<Report()> f) {
    return {std::move(suite), {{"n", n}}, std::move(f)};
}

} // namespace

TEST_CASE("report serialisation") {
    Report r;
    r.suite = "koszul";
    r.param("n", 3);
    r.param("t", 1);
    r.compare("is_complex", 1, 1);
    r.compare("h[0]", 2, 2);
    CHECK(to_json(r) ==
          R"({"suite":"koszul","params":{"n":3,"t":1},"expected":{"is_complex":1,"h[0]":2},)"
          R"("computed":{"is_complex":1,"h[0]":2},"status":"pass","elapsed_ms":0})");
    r.offending("offending_position", 4);
    CHECK_FALSE(r.passed());
    CHECK(to_json(r).find(R"("status":"fail")") != std::string::npos);

    Report big;
    big.compare("x", BigInt("123456789012"), BigInt("123456789012"));
    CHECK(big.passed());
    CHECK_THROWS_AS(big.compare("y", BigInt("1000000000000000000000"), BigInt(0)), std::overflow_error);
}

TEST_CASE("report order") {
    Report a, b;
    a.suite = "bbw";
    b.suite = "xi";
    CHECK(report_less(a, b));
    b.suite = "bbw";
    a.param("a1", -1);
    b.param("a1", 2);
    CHECK(report_less(a, b));
    CHECK_FALSE(report_less(b, a));
    CHECK_FALSE(report_less(a, a));
}

TEST_CASE("run_tasks sorts, and turns exceptions into failures") {
    std::vector<Task> tasks;
    for (int n = 5; n >= 1; --n)
        tasks.push_back(task("s", n, [n] {
            Report r;
            r.suite = "s";
            r.param("n", n);
            r.compare("v", n, n == 3 ? 0 : n);
            return r;
        }));
    tasks.push_back(task("a", 9, []() -> Report { throw RefutationError("boom"); }));
    for (int jobs : {1, 3}) {
        const auto out = run_tasks(tasks, jobs, false);
        REQUIRE(out.size() == 6);
        CHECK(out[0].report.suite == "a");
        CHECK_FALSE(out[0].report.passed());
        CHECK(out[0].error.find("boom") != std::string::npos);
        CHECK(out[0].report.params == IntFields{{"n", 9}});
        for (int i = 1; i <= 5; ++i) {
            CHECK(out[static_cast<std::size_t>(i)].report.params == IntFields{{"n", i}});
            CHECK(out[static_cast<std::size_t>(i)].report.passed() == (i != 3));
            CHECK(out[static_cast<std::size_t>(i)].report.elapsed_ms == 0);
        }
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"verify-fiber", "--n", "3", "--t", "99"}).code == 2);
    CHECK(run({"verify-fiber", "--n", "3", "--t", "x"}).code == 2);
    CHECK(run({"verify-fiber", "--n", "1"}).code == 2);
    CHECK(run({"verify-fiber", "--n", "3", "--bogus"}).code == 2);
    CHECK(run({"verify-fiber", "--n", "3", "--checks", "nope"}).code == 2);
    CHECK(run({"verify-fiber"}).code == 2);
    CHECK(run({"verify-everything", "--n", "3"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify-weights", "--n", "4", "--k", "2", "--checks", "phics"}).code == 2);
    CHECK(run({"verify-weights", "--n", "4", "--k", "5"}).code == 2);
    CHECK(run({"--jobs", "0", "verify-fiber", "--n", "3"}).code == 2);
    CHECK(run({"dump-map", "--n", "3", "--map", "d", "--a", "0", "--B", "0"}).code == 2);
    const Run r = run({"verify-fiber", "--n", "3", "--t", "99"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("full runs pass and are deterministic") {
    const Run a = run({"verify-fiber", "--n", "3"});
    CHECK(a.code == 0);
    CHECK(a.err.empty());
    const auto ls = lines(a.out);
    CHECK(ls.size() > 40);
    for (const auto& l : ls) CHECK(l.find(R"("status":"pass")") != std::string::npos);
    CHECK(run({"verify-fiber", "--n", "3"}).out == a.out);
    CHECK(run({"--jobs", "4", "verify-fiber", "--n", "3"}).out == a.out);

    const Run w = run({"verify-weights", "--n", "4", "--k", "3"});
    CHECK(w.code == 0);
    CHECK(run({"--jobs", "3", "verify-weights", "--n", "4", "--k", "3"}).out == w.out);

    // sorted by suite name
    std::vector<std::string> suites;
    for (const auto& l : lines(w.out)) suites.push_back(l.substr(10, l.find('"', 10) - 10));
    CHECK(std::is_sorted(suites.begin(), suites.end()));
}

TEST_CASE("subsets of checks and t") {
    const Run r = run({"verify-fiber", "--n", "3", "--t", "2", "--checks", "koszul,cohomology"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind(R"({"suite":"cohomology","params":{"n":3,"t":2})", 0) == 0);
    CHECK(ls[1].rfind(R"({"suite":"koszul","params":{"n":3,"t":2})", 0) == 0);

    const Run e = run({"verify-weights", "--n", "5", "--k", "3", "--t", "4", "--checks", "euler"});
    CHECK(e.code == 0);
    CHECK(lines(e.out).size() == 1);
}

TEST_CASE("--out writes the file and nothing to stdout") {
    const std::string path = "test_cli_out.ndjson";
    const Run r = run({"--out", path, "verify-fiber", "--n", "3", "--t", "1", "--checks", "koszul"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"verify-fiber", "--n", "3", "--t", "1", "--checks", "koszul"}).out);
    std::remove(path.c_str());
}

TEST_CASE("timing is opt-in") {
    const Run r = run({"--timing", "verify-fiber", "--n", "3", "--t", "0", "--checks", "koszul"});
    CHECK(r.code == 0);
    CHECK(r.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("dump-map") {
    const Run r = run({"dump-map", "--n", "3", "--map", "d", "--a", "0", "--B", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "# (0,1,0) -> (1,0,0) 6x2\n4 0 -1/1\n3 1 -1/1\n");
}
