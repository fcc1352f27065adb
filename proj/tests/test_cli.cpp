#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const char* cli = std::getenv("ZI_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("zeros subcommand lists the first ordinates") {
    auto r = run("zeros --count 30");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cmd"] == "zeros");
    auto ords = j["results"][0]["ordinates"];
    REQUIRE(ords.size() == 30);
    CHECK(std::abs(ords[0].get<double>() - 14.134725) < 1e-6);
    CHECK_FALSE(j.contains("time_ms"));
}

TEST_CASE("alpha subcommand reproduces 8 pi") {
    auto r = run("alpha --n 1 --k 2 --sign minus --s 1");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto v = j["results"][0]["value"];
    CHECK(std::abs(v["re"].get<double>() - 8 * M_PI) < 1e-9);
    CHECK(std::abs(v["im"].get<double>()) < 1e-9);
    CHECK(j["results"][0]["err"].get<double>() <= 1e-9);
}

TEST_CASE("reports are byte-identical across runs") {
    auto a = run("alpha --n 3 --k 1/2 --sign plus --s 0.3+0.2i");
    auto b = run("alpha --n 3 --k 1/2 --sign plus --s 0.3+0.2i");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("stats --y 0.01 --samples 2000 --seed 7");
    auto d = run("stats --y 0.01 --samples 2000 --seed 7");
    REQUIRE(c.code == 0);
    CHECK(c.out == d.out);
    CHECK(c.out.rfind("y,estimate,stderr\n", 0) == 0);
}

TEST_CASE("timing is opt-in") {
    auto r = run("--timing alpha --n 0 --k 1/2 --sign minus --s 0");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("time_ms"));
}

TEST_CASE("validation errors exit with 2") {
    CHECK(run("alpha --bogus 1").code == 2);
    CHECK(run("nosuchcmd").code == 2);
    CHECK(run("alpha --n 1 --sign sideways").code == 2);
    CHECK(run("alpha --n 1 --s 1+xi").code == 2);
    CHECK(run("kernel --which A --w 0.3 --s 0.3").code == 2);  // on the pole w = s
}

TEST_CASE("qexp prints the dump format") {
    auto r = run("qexp --form J --cusp one --order 4");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("denom=", 0) == 0);
    auto t = run("qexp --form theta --order 10");
    CHECK(t.out.find("1/2:2/1") != std::string::npos);
}

TEST_CASE("zeros file round trip through --out") {
    std::string path = "zi_cli_test_zeros.txt";
    REQUIRE(run("--out " + path + " zeros --count 5").code == 0);
    std::ifstream f(path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.find("precision=") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("help text for each subcommand") {
    for (const char* sub : {"qexp", "gform", "alpha", "rv", "zeros", "kernel", "interp", "rw-check", "w-basis", "stats", "verify-all"}) {
        auto r = run(std::string(sub) + " --help");
        CHECK(r.code == 0);
        CHECK(r.out.size() > 100);
    }
}
