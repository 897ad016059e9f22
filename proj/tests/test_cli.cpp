#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexpp/cli.hpp"

using namespace lexpp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

/// Writes content to a temp file and removes it on scope exit.
class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("lexpp_cli_test_" + std::to_string(counter++) + ".ideal"))
                    .string();
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

TEST_CASE("hf machine output follows the d dim grammar") {
    TempFile f("ring 2\ngen 2 0\ngen 1 1\n");
    const Run r = run({"hf", f.path(), "--D", "3", "--machine"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "0\t0\n1\t0\n2\t2\n3\t3\n");
}

TEST_CASE("betti machine output follows the char i j value grammar") {
    TempFile f("ring 2\ngen 1 0\ngen 0 1\n");
    const Run r = run({"betti", f.path(), "--char", "0", "--machine"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "0\t0\t1\t2\n0\t1\t2\t1\n");
    const Run r2 = run({"betti", f.path(), "--char", "0", "--char", "2", "--machine"});
    CHECK(r2.code == kExitOk);
    CHECK(r2.out == "0\t0\t1\t2\n0\t1\t2\t1\n2\t0\t1\t2\n2\t1\t2\t1\n");
}

TEST_CASE("shift command reproduces the worked slices") {
    TempFile f("ring 2\ngen 0 2\n");
    const Run r = run({"shift", f.path(), "--a", "1", "--b", "2", "--t", "0", "--D", "3",
                       "--machine"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2\t2 0\n3\t3 0\n3\t2 1\n");
    const Run human = run({"shift", f.path(), "--a", "1", "--b", "2", "--t", "1",
                           "--D", "2"});
    CHECK(human.code == kExitOk);
    CHECK(human.out.find("x1*x2") != std::string::npos);
}

TEST_CASE("compress and tstep emit re-parseable ideal files") {
    TempFile f("ring 2\ngen 0 2\ngen 1 1\n");
    const Run r = run({"compress", f.path(), "--a", "1", "--b", "2"});
    CHECK(r.code == kExitOk);
    const IdealFile parsed = parse_ideal_file(r.out);
    CHECK(parsed.to_ideal() ==
          MonomialIdeal(RingContext(2), {Monomial({2, 0}), Monomial({1, 1})}));

    TempFile g("ring 2\npowers 2 2\ngen 2 0\ngen 0 2\n");
    const Run t = run({"tstep", g.path(), "--a", "1", "--b", "2"});
    CHECK(t.code == kExitOk);
    CHECK(parse_ideal_file(t.out).to_ideal() ==
          MonomialIdeal(RingContext(2), {Monomial({2, 0}), Monomial({0, 2})}));
}

TEST_CASE("tstep maps guard failures to the usage exit code") {
    // x3 has no pure power: precondition error.
    TempFile f("ring 3\npowers 2 2\ngen 2 0 0\ngen 0 2 0\ngen 0 1 1\n");
    const Run r = run({"tstep", f.path(), "--a", "2", "--b", "3"});
    CHECK(r.code == kExitUsage);
}

TEST_CASE("tstep reports hilbert-gate failures as property violations") {
    TempFile f("ring 3\npowers 3 3\ngen 3 0 0\ngen 0 3 0\ngen 0 2 1\n");
    const Run r = run({"tstep", f.path(), "--a", "1", "--b", "2"});
    CHECK(r.code == kExitViolation);
    CHECK(r.err.find("Hilbert") != std::string::npos);
}

TEST_CASE("stabilize command prints the ideal, the log, and exits clean") {
    TempFile f("ring 3\npowers 2 2\ngen 2 0 0\ngen 0 2 0\ngen 0 1 1\n");
    const Run r = run({"stabilize", f.path(), "--audit"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("steps applied:") != std::string::npos);
    CHECK(r.out.find("ring 3") != std::string::npos);
    CHECK(r.out.find("powers 2 2") != std::string::npos);
}

TEST_CASE("lexify command completes the base to the target hilbert function") {
    TempFile f("ring 2\npowers 2 2\ngen 2 0\ngen 1 1\ngen 0 2\n");
    const Run r = run({"lexify", f.path()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("# lex ideal L") != std::string::npos);
    CHECK(r.out.find("gen 1 1") != std::string::npos);
}

TEST_CASE("check subcommands and exit codes") {
    TempFile lex_file("ring 2\ngen 2 0\ngen 1 1\n");
    CHECK(run({"check", lex_file.path(), "--prop", "lex"}).code == kExitOk);
    CHECK(run({"check", lex_file.path(), "--prop", "stable"}).code == kExitOk);

    TempFile not_lex("ring 2\ngen 1 1\n");
    CHECK(run({"check", not_lex.path(), "--prop", "lex"}).code == kExitViolation);
    CHECK(run({"check", not_lex.path(), "--prop", "stable"}).code == kExitViolation);

    TempFile inst("ring 2\npowers 2 2\nplex 1 2\ngen 2 0\ngen 1 1\ngen 0 2\n");
    CHECK(run({"check", inst.path(), "--prop", "shifting"}).code == kExitOk);
    CHECK(run({"check", inst.path(), "--prop", "compression"}).code == kExitOk);
    CHECK(run({"check", inst.path(), "--prop", "plex"}).code == kExitOk);

    CHECK(run({"check", inst.path(), "--prop", "nonsense"}).code == kExitUsage);
}

TEST_CASE("verify trials") {
    CHECK(run({"verify", "--trials", "0"}).code == kExitOk);
    // Randomized runs demand an explicit seed.
    CHECK(run({"verify", "--trials", "2", "--n", "2"}).code == kExitUsage);
    const Run r = run({"verify", "--trials", "3", "--seed", "11", "--n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("trial 0 seed 11: pass") != std::string::npos);
    CHECK(r.out.find("all trials passed") != std::string::npos);
    // Identical invocations give identical bytes.
    const Run again = run({"verify", "--trials", "3", "--seed", "11", "--n", "3"});
    CHECK(again.out == r.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"hf"}).code == kExitUsage);
    CHECK(run({"hf", "/nonexistent/file.ideal"}).code == kExitUsage);
    TempFile f("ring 2\ngen 1 1\n");
    CHECK(run({"hf", f.path(), "--bogus"}).code == kExitUsage);
    CHECK(run({"hf", f.path(), "--D"}).code == kExitUsage);
    CHECK(run({"shift", f.path(), "--a", "2", "--b", "1", "--t", "0"}).code == kExitUsage);
    CHECK(run({"betti", f.path(), "--char", "4"}).code == kExitUsage);
    TempFile bad("ring 2\npowers 3 2\n");
    CHECK(run({"hf", bad.path()}).code == kExitUsage);
}
