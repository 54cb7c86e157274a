#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HREP_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), p))
        r.out += buf.data();
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli dim") {
    Run r = run("dim --m 2 --n 4");
    CHECK(r.code == 0);
    CHECK(r.out.find('6') != std::string::npos);
}

TEST_CASE("cli abelianize") {
    Run r = run("abelianize --preset loop --n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("Z + Z/2") != std::string::npos);
}

TEST_CASE("cli matrix is deterministic") {
    Run a = run("matrix --m 1 --n 3 --word s1");
    Run b = run("matrix --m 1 --n 3 --word s1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"rows\":2") != std::string::npos);
}

TEST_CASE("cli errors") {
    CHECK(run("dim --bogus").code == 2);
    CHECK(run("matrix --m 1 --n 3 --word s7").code == 2);
    CHECK(run("matrix --m 2 --n 400 --word s1").code == 2);
    CHECK(run("--help").code == 0);
}
