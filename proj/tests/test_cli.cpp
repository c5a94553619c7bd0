// End-to-end exercises of the command-line binary: exit-code contract,
// output formats, cache round-trip.  The binary path comes from CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>

#ifndef RTF_CLI_PATH
#define RTF_CLI_PATH "rtf"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RTF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("verify: passing point exits 0 with a JSON report") {
    auto r = run("verify --weight 12 --index 1 --s1 0.07+0.11i --s2 -0.13+0.05i --tol 1e-8");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(r.out.find("\"rel\":") != std::string::npos);
}

TEST_CASE("verify: unsupported weight exits 2") {
    auto r = run("verify --weight 13 --index 1 --s1 0.1 --s2 0.2i");
    CHECK(r.code == 2);
}

TEST_CASE("verify: region violation is a computation error (exit 3)") {
    auto r = run("verify --weight 12 --index 1 --s1 0.3 --s2 0.3");
    CHECK(r.code == 3);
}

TEST_CASE("verify: unknown flag exits 2") {
    auto r = run("verify --weight 12 --index 1 --does-not-exist 1");
    CHECK(r.code == 2);
}

TEST_CASE("usage errors: malformed complex literal and inverted range exit 2") {
    CHECK(run("verify --weight 12 --index 1 --s1 0.3+0.2 --s2 0.1").code == 2);
    CHECK(run("corollary --weight 12 --index-range 5..2").code == 2);
    CHECK(run("corollary --weight 12 --index-range 0..3").code == 2);
}

TEST_CASE("kernel domain boundary: index 19 verifies, index 20 is a computation error") {
    auto ok = run("verify --weight 12 --index 19 --s1 0.07+0.11i --s2 -0.13+0.05i");
    CHECK(ok.code == 0);
    auto bad = run("verify --weight 12 --index 20 --s1 0.07+0.11i --s2 -0.13+0.05i");
    CHECK(bad.code == 3);
}

TEST_CASE("corollary: forced-vanishing weight passes over a range") {
    auto r = run("corollary --weight 18 --index-range 1..5");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"central_path\":true") != std::string::npos);
}

TEST_CASE("scan: repeated runs emit identical bytes") {
    std::string args = "scan --weights 12,18 --indices 1..3 --s1 0.07+0.11i --s2 -0.13+0.05i";
    auto a = run(args);
    auto b = run(args + " --serial");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("scan: six weights x five indices all pass at defaults") {
    auto r = run("scan --weights 12,16,18,20,22,26 --indices 1..5");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') >= 30);
    CHECK(r.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("scan: csv format flattens into paired columns") {
    auto r = run("scan --weights 12 --indices 1..2 --format csv");
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header.find("spectral_re,spectral_im") != std::string::npos);
    CHECK(header.find("rel_residual") != std::string::npos);
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("qexp: build, write, and bit-exact round-trip") {
    std::string path = "/tmp/rtf_test_qexp_k12.txt";
    auto w = run("qexp --weight 12 --count 64 --out " + path + " --show 3");
    CHECK(w.code == 0);
    CHECK(w.out.find("1 1") != std::string::npos);
    CHECK(w.out.find("2 -24") != std::string::npos);
    auto c = run("qexp --weight 12 --check " + path);
    CHECK(c.code == 0);
    CHECK(c.out.find("round-trip ok") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cache directory: file is created and reused") {
    std::string dir = "/tmp/rtf_test_cache";
    std::string cached = dir + "/qexp_k12_N256.txt";
    std::remove(cached.c_str());
    auto a = run("--cache " + dir + " --table 256 verify --weight 12 --index 1 "
                 "--s1 0.07+0.11i --s2 -0.13+0.05i");
    CHECK(a.code == 0);
    std::ifstream probe(cached);
    CHECK(probe.good());
    CHECK(a.out.find("\"cache\":\"builtin:k=12:N=256\"") != std::string::npos);
    // second run loads from disk and says so in the provenance
    auto b = run("--cache " + dir + " --table 256 verify --weight 12 --index 1 "
                 "--s1 0.07+0.11i --s2 -0.13+0.05i");
    CHECK(b.code == 0);
    CHECK(b.out.find("\"cache\":\"file:" + cached + "\"") != std::string::npos);
    std::remove(cached.c_str());
}

TEST_CASE("oracle: cross-check suites pass") {
    auto r = run("oracle --suite all");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("precision: environment variable selects dd, flag wins") {
    std::string cmd = "RTF_PRECISION=dd " + std::string(RTF_CLI_PATH) +
                      " verify --weight 12 --index 1 --s1 0.07+0.11i --s2 -0.13+0.05i"
                      " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    pclose(p);
    CHECK(out.find("\"precision\":\"double-double\"") != std::string::npos);

    auto r = run("--precision double verify --weight 12 --index 1 --s1 0.07+0.11i --s2 "
                 "-0.13+0.05i");
    CHECK(r.out.find("\"precision\":\"double\"") != std::string::npos);
}
