#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "commands.hpp"

using namespace sdual::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "sdual");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content)
    {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("sdual_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt"))
                    .string();
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* const kFull4 = "n=4\n3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 1\n";
const char* const kCert4 = "-++++-\n+-----\n-----+\n++++++\n";

}  // namespace

TEST_CASE("solve")
{
    const TempFile p("n=2\n1 .\n. .\n");
    const auto r = run_cli({"solve", p.path()});
    CHECK(r.code == 0);
    CHECK(r.out == "primal_value=0\n1 2\n2 1\n");

    const TempFile traced("n=4\n1 2 . .\n. . . 4\n. . 3 .\n. . . .\n");
    const auto t = run_cli({"solve", "--trace", traced.path()});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("primal_value=2\n", 0) == 0);
    CHECK(t.out.find("trace_step=1 empty=12") != std::string::npos);

    const TempFile clash("n=2\n1 1\n. .\n");
    CHECK(run_cli({"solve", clash.path()}).code == 3);
}

TEST_CASE("check-primal and check-dual")
{
    const TempFile puzzle(kFull4);
    const TempFile board("3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 1\n");
    const auto ok = run_cli({"check-primal", puzzle.path(), board.path()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "feasible=true\nempty=0\nsolution=true\n");

    const TempFile holey("3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 .\n");
    const TempFile empty_puzzle("n=4\n. . . .\n. . . .\n. . . .\n. . . .\n");
    const auto partial = run_cli({"check-primal", empty_puzzle.path(), holey.path()});
    CHECK(partial.code == 1);
    CHECK(partial.out == "feasible=true\nempty=1\nsolution=false\n");

    const TempFile cert(kCert4);
    const auto dual = run_cli({"check-dual", puzzle.path(), cert.path()});
    CHECK(dual.code == 0);
    CHECK(dual.out == "feasible=true\ndual_objective=0\nsolution=true\n");

    const TempFile bad_cert("++++++\n++++++\n++++++\n++++++\n");
    CHECK(run_cli({"check-dual", puzzle.path(), bad_cert.path()}).code == 1);
}

TEST_CASE("dualize and primalize")
{
    const TempFile puzzle(kFull4);
    const auto d = run_cli({"dualize", puzzle.path()});
    CHECK(d.code == 0);
    CHECK(d.out == kCert4);

    const TempFile partial("n=2\n1 .\n. .\n");
    CHECK(run_cli({"dualize", partial.path()}).code == 1);

    const TempFile cert(kCert4);
    const auto p = run_cli({"primalize", puzzle.path(), cert.path()});
    CHECK(p.code == 0);
    CHECK(p.out == "3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 1\n");

    const TempFile p2("n=2\n. .\n. .\n");
    const TempFile c2("+\n+\n");
    const auto near = run_cli({"primalize", p2.path(), c2.path()});
    CHECK(near.code == 1);
    CHECK(near.out == "2 1\n2 1\n");
    CHECK(near.err.find("certificate_feasible=false") != std::string::npos);
}

TEST_CASE("gap")
{
    const TempFile gapped("n=4\n1 2 . .\n. . . 4\n. . 3 .\n. . . .\n");
    const auto g = run_cli({"gap", gapped.path()});
    CHECK(g.code == 0);
    CHECK(g.out.find("primal_value=2\n") != std::string::npos);
    CHECK(g.out.find("gap=3\n") != std::string::npos);

    const TempFile clash("n=2\n1 1\n. .\n");
    CHECK(run_cli({"gap", clash.path()}).code == 3);

    const TempFile big("n=9\n" + std::string(81, '.') + "\n");
    CHECK(run_cli({"gap", big.path()}).code == 2);
}

TEST_CASE("verify and dump-matrix")
{
    const auto v = run_cli({"verify", "--n", "2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("THEOREM strong-duality PASS") != std::string::npos);

    const auto m = run_cli({"dump-matrix", "--n", "2", "--perm", "1"});
    CHECK(m.code == 0);
    CHECK(m.out == "1 -1 0 0\n0 0 1 -1\n");
    CHECK(run_cli({"dump-matrix", "--n", "3", "--perm", "3"}).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve", "/nonexistent/puzzle.txt"}).code == 2);
    CHECK(run_cli({"verify", "--n", "7"}).code == 2);
    const TempFile garbage("n=2\n1 x\n. .\n");
    const auto r = run_cli({"solve", garbage.path()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2, column 3") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}
