// End-to-end tests of the command-line surface: exit-code contract,
// output schemas, byte determinism.  The binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "dunkl/json_io.hpp"

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("poly subcommand emits the polynomial schema") {
    const RunResult r = run("poly p 1 0 --N 3 --kappa generic --out json");
    CHECK(r.exit_code == 0);
    const dunkl::Polynomial f = dunkl::parse_polynomial(r.out);
    CHECK(f.nvars() == 3);
    CHECK(f.total_degree() == 1);
    CHECK(f.term_count() == 3);  // x_1 + kappa(x_1 + x_2 + x_3)

    const RunResult text = run("poly omega 2 1 --N 3 --kappa -1/2");
    CHECK(text.exit_code == 0);
    CHECK(!text.out.empty());
}

TEST_CASE("exit code contract") {
    // 0: success.
    CHECK(run("poly p 1 0 --N 3").exit_code == 0);
    // 3: pole.
    CHECK(run("poly omega 1 1 --N 3 --kappa -1").exit_code == 3);
    // 3: domain rejections.
    CHECK(run("poly alt 2 --N 3").exit_code == 3);
    CHECK(run("family n0 3 3").exit_code == 3);
    CHECK(run("family nn 2 5").exit_code == 3);
    // 2: usage errors.
    CHECK(run("poly nosuchkind 1 0").exit_code == 2);
    CHECK(run("verify nosuchsuite").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("poly p 1 0 --kappa bad/kappa").exit_code == 3);
}

TEST_CASE("family certificates") {
    const RunResult r = run("family half 0 1");
    CHECK(r.exit_code == 0);
    const dunkl::Json j = dunkl::Json::parse(r.out);
    CHECK(j.at("N") == 3);
    CHECK(j.at("kappa") == "-1/2");
    CHECK(j.at("checks").at("nonzero") == true);
    CHECK(j.at("checks").at("antisymmetric_12") == true);
    for (const auto& z : j.at("checks").at("dunkl_zero")) CHECK(z == true);

    CHECK(run("family n0 2 3").exit_code == 0);
    CHECK(run("family nn 1 4").exit_code == 0);
}

TEST_CASE("verify reports pass and exit zero") {
    const RunResult r = run("verify krawtchouk");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS krawtchouk/") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify output is byte-deterministic") {
    const std::string args = "verify q2z --N 3 --seed 7 --max-degree 4";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const std::string sampled = "verify commute --N 3 --seed 9 --max-degree 3 --jobs 2";
    const RunResult c = run(sampled);
    const RunResult d = run(sampled);
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("val1n table") {
    const RunResult r = run("table val1n --N 3 --m-max 3 --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find("omega(0,0)(1^N): closed = 1, direct = 1") != std::string::npos);

    CHECK(run("table val1n --m-max 1 --n-max 3").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-dunkl-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context context;
    return context.run();
}
