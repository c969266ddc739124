#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int rc;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + DENDRIKIT_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("word commands") {
    CHECK(run("pack 4,1,4").out == "2,1,2\n");
    CHECK(run("pack 4,1,4 --json").out == "{\"word\":[2,1,2]}\n");
    CHECK(run("detass 1,2,1 --json").out == "{\"word\":[1,3,1]}\n");
    CHECK(run("fiber 1,2,1 --json").out == "{\"word\":[1,2,1],\"fiber\":[[1,2,1],[1,3,1]]}\n");
    CHECK(run("tree 2,1,2").out == "(o (o o) o)\n");
    CHECK(run("tits 1,1 2,1 --json").out == "{\"word\":[2,1]}\n");
    CHECK(run("sylv-class 1,2,1 --json").out ==
          "{\"representative\":[1,2,1],\"members\":[[1,2,1],[2,1,1]]}\n");
  }

  TEST_CASE("algebra commands") {
    RunResult r = run("mul \"M[1]\" \"M[1]\"");
    CHECK(r.rc == 0);
    CHECK(r.out == "M[1,1] + M[1,2] + M[2,1]\n");
    CHECK(run("mul --op circ \"M[1]\" \"M[1]\"").out == "M[1,1]\n");
    CHECK(run("coproduct \"M[1,1]\"").out == "M[] (x) M[1,1] + M[1,1] (x) M[]\n");
    CHECK(run("expand \"M[1,2]\" --alphabet 3 --json").out ==
          "{\"basis\":\"Word\",\"terms\":[{\"key\":[1,2],\"coeff\":\"1\"},{\"key\":[1,3],"
          "\"coeff\":\"1\"},{\"key\":[2,3],\"coeff\":\"1\"}],\"alphabet\":3}\n");
    CHECK(run("hilbert T --max-degree 4 --json").out ==
          "{\"object\":\"T\",\"max_degree\":4,\"dims\":[1,3,11,45]}\n");
    CHECK(run("hilbert SYL --max-degree 4").out == "[1,3,11,45]\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run("pack 2,1").rc == 0);
    CHECK(run("detass 1,3").rc == 2);             // not packed
    CHECK(run("mul \"M[1\" \"M[1]\"").rc == 2);   // parse error
    CHECK(run("mul --op prec \"M[]\" \"M[1]\"").rc == 2);  // unit operand
    CHECK(run("").rc == 2);                       // missing subcommand
    CHECK(run("verify nonsense").rc == 2);
    CHECK(run("--help").rc == 0);
    CHECK(run("sylv-class 1,2,3,4,5,6,7,8,9").rc == 2);  // beyond resource bound
    CHECK(run("hilbert NCQSYM --max-degree 3", "DENDRIKIT_MAX_DEGREE=3").out == "[1,3,13]\n");
    CHECK(run("hilbert NCQSYM --max-degree 5", "DENDRIKIT_MAX_DEGREE=3").rc == 2);
    CHECK(run("pack 1", "DENDRIKIT_MAX_DEGREE=frog").rc == 2);
  }

  TEST_CASE("verify determinism") {
    RunResult a = run("verify tits --max-degree 3 --json");
    RunResult b = run("verify tits --max-degree 3 --json");
    RunResult c = run("verify tits --max-degree 3 --json --jobs 4");
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.find("\"pass\":true") != std::string::npos);
    CHECK(a.out.find("seconds") == std::string::npos);

    RunResult timed = run("verify dims --json --timing");
    CHECK(timed.rc == 0);
    CHECK(timed.out.find("seconds") != std::string::npos);
  }

  TEST_CASE("corruption hook trips the axioms suite") {
    RunResult r = run("verify axioms --max-degree 3 --corrupt --json");
    CHECK(r.rc == 1);
    CHECK(r.out.find("\"pass\":false") != std::string::npos);
    CHECK(r.out.find("assoc") != std::string::npos);
    RunResult wide = run("verify axioms --max-degree 3 --corrupt --json --limit 5000");
    CHECK(wide.out.find("split u=[1] v=[1]") != std::string::npos);
    RunResult again = run("verify axioms --max-degree 3 --corrupt --json --jobs 3");
    CHECK(again.out == r.out);
  }
}
