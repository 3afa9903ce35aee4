// Runs the dyndeg executable and checks exit codes and output files.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string &args) {
    const std::string cmd = std::string(DYNDEG_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string job(const std::string &name) { return std::string(DYNDEG_JOBS_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("degrees table") {
    const Result r = run("degrees --input " + job("golden.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("2.6180339887") != std::string::npos);
    CHECK(r.out.find("CONVERGED") != std::string::npos);
}

TEST_CASE("Cremona degree row") {
    const Result r = run("degrees --input " + job("cremona.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("2,1,2,1,2,1") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("verify-product --input " + job("fibered.json")).code == 0);
    CHECK(run("verify-product --input " + job("skew.json")).code == 0);
    CHECK(run("verify-product --input " + job("not_fibered.json")).code == 1);
    CHECK(run("degrees --input /nonexistent.json").code == 1);
    CHECK(run("degrees").code == 1);
    CHECK(run("degrees --input " + job("golden.json") + " --format xml").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("degrees --input " + job("golden.json") + " --n-max 0").code == 1);
    // the cap is far too small for seven iterates: truncated, inconclusive, not an error
    const Result capped = run("verify-product --input " + job("skew.json") + " --degree-cap 10");
    CHECK(capped.code == 0);
    CHECK(capped.out.find("truncated") != std::string::npos);
    CHECK(capped.out.find("INCONCLUSIVE") != std::string::npos);
    CHECK(run("suite --count 10").code == 0);
    CHECK(run("suite --count 10 --n-max 2").code == 0);
}

TEST_CASE("machine reports") {
    const auto dir = std::filesystem::temp_directory_path() / "dyndeg_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.json";
    const auto b = dir / "b.json";
    CHECK(run("suite --count 12 --seed 3 --format json --out " + a.string()).code == 0);
    CHECK(run("suite --count 12 --seed 3 --format json --out " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("\"seed\": 3") != std::string::npos);

    const Result csv = run("sequence --input " + job("golden.json") + " --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("p,n,lambda_p,root_est,ratio_est", 0) == 0);

    const Result js = run("degrees --input " + job("fibered.json") + " --format json");
    CHECK(js.out.find("\"report\": \"degrees\"") != std::string::npos);
    std::filesystem::remove_all(dir);
}
