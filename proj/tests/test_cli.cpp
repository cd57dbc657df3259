#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "gf2collatz/cli.hpp"
#include "test_support.hpp"

using gf2collatz::cli::run;
using gf2collatz::testsupport::read_bytes;

namespace fs = std::filesystem;

namespace {

struct Invocation {
    int status;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("stopping time command") {
    const Invocation r = invoke({"tau", "--poly", "0x7", "--map", "T"});
    CHECK(r.status == 0);
    CHECK(r.out == "tau=3\n");

    CHECK(invoke({"tau", "--poly", "x^2+x+1"}).out == "tau=3\n");
    CHECK(invoke({"tau", "--poly", "0x2", "--map", "T0"}).out == "tau=1\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"tau", "--poly", "0x0"}).status == 2);
    CHECK(invoke({"tau", "--poly", "not-a-poly"}).status == 2);
    CHECK(invoke({"tau"}).status == 2);                          // missing --poly
    CHECK(invoke({"tau", "--poly", "0x7", "--bogus"}).status == 2); // unknown flag
    CHECK(invoke({"bogus-command"}).status == 2);
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"tau", "--poly", "0x7", "--map", "Q"}).status == 2);
    CHECK(invoke({"parity", "--poly", "0x7", "--invert", "11"}).status == 2);
    CHECK(invoke({"parity", "--poly", "0x7"}).status == 2); // missing --len
    CHECK(invoke({"matrix-image", "--poly", "0x7", "--out", "x", "--format", "gif"}).status == 2);
}

TEST_CASE("runtime errors exit with 1") {
    // valid flags, but the polynomial has constant coefficient 0
    const Invocation r = invoke({"matrix-image", "--poly", "0x2", "--out",
                                 (fs::temp_directory_path() / "never.ppm").string()});
    CHECK(r.status == 1);
    CHECK(r.err.find("error:") == 0);

    CHECK(invoke({"fp", "--p", "4", "--deg", "2"}).status == 1); // 4 is not prime
}

TEST_CASE("orbit command") {
    CHECK(invoke({"orbit", "--poly", "0x4", "--degrees"}).out == "2,2,2,1,0\n");
    CHECK(invoke({"orbit", "--poly", "0x3"}).out == "x+1\n1\n");
    CHECK(invoke({"orbit", "--poly", "0x3", "--hex"}).out == "0x3\n0x1\n");
}

TEST_CASE("parity commands") {
    CHECK(invoke({"parity", "--poly", "0x4", "--len", "5"}).out == "11001\n");
    CHECK(invoke({"parity", "--invert", "10"}).out == "x\n");
    CHECK(invoke({"parity", "--invert", "10", "--hex"}).out == "0x2\n");
    CHECK(invoke({"parity", "--poly", "0x0", "--len", "3"}).out == "000\n");
}

TEST_CASE("rho command writes consistent csv") {
    const fs::path csv1 = fs::temp_directory_path() / "gf2collatz_cli_1.csv";
    const fs::path csv2 = fs::temp_directory_path() / "gf2collatz_cli_2.csv";
    const Invocation a =
        invoke({"rho", "--n", "10", "--map", "T", "--threads", "2", "--csv", csv1.string()});
    const Invocation b =
        invoke({"rho", "--n", "10", "--map", "T", "--threads", "1", "--csv", csv2.string()});
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out == b.out);
    CHECK(read_bytes(csv1) == read_bytes(csv2));
    CHECK(a.out.find("rho(n=10, map=T, mode=exhaustive)") == 0);

    const Invocation s = invoke({"rho", "--n", "10", "--sample", "100", "--seed", "3"});
    CHECK(s.status == 0);
    CHECK(s.out.find("mode=sampled") != std::string::npos);
    CHECK(s.out.find("ci_halfwidth=") != std::string::npos);

    fs::remove(csv1);
    fs::remove(csv2);
}

TEST_CASE("image command") {
    const fs::path img = fs::temp_directory_path() / "gf2collatz_cli.ppm";
    const Invocation r = invoke({"matrix-image", "--poly", "0x7", "--out", img.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("wrote 3x4 ppm") == 0);
    CHECK(read_bytes(img).rfind("P6\n3 4\n255\n", 0) == 0);
    fs::remove(img);
}

TEST_CASE("search command emits json") {
    const fs::path json = fs::temp_directory_path() / "gf2collatz_cli.json";
    const Invocation r = invoke({"search-automaton", "--n", "6", "--m", "5", "--strategy",
                                 "exhaustive", "--budget", "1", "--seed", "1", "--json",
                                 json.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"strategy\":\"exhaustive\"") != std::string::npos);
    CHECK(read_bytes(json) == r.out);
    fs::remove(json);
}

TEST_CASE("fp command") {
    const fs::path csv = fs::temp_directory_path() / "gf2collatz_cli_fp.csv";
    const Invocation r = invoke({"fp", "--p", "3", "--deg", "3", "--csv", csv.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("p=3 max_deg=3 c_hat=") == 0);
    CHECK(read_bytes(csv).rfind("p,deg,count,max_tau,mean_tau,c_hat\n", 0) == 0);
    fs::remove(csv);
}

TEST_CASE("help exits cleanly") {
    CHECK(invoke({"--help"}).status == 0);
    CHECK(invoke({"tau", "--help"}).status == 0);
}
