#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

// stdout only; stderr is dropped so scan checkpoints stay out of comparisons
RunResult run(const std::string& args) {
  const std::string cmd = std::string(STRANGEROOTS_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("cli: single-value commands") {
  CHECK(run("sr 10").out == "sr(10) = 5\n");
  CHECK(run("cf 30").out == "cf(30) = 14\n");
  CHECK(run("t 14").out == "t(14) = 60\n");
  CHECK(run("t 100 --method scan").out == "t(100) = 3234\n");
  CHECK(run("inverse 1 31").out == "{59, 60}\n");
  CHECK(run("inverse 3 5").out == "{5}\n");
}

TEST_CASE("cli: chains print as arrow diagrams") {
  CHECK(run("alist 8").out == "<1,8> -> <2,5> -> <3,5> -> <4,5> -> <5,5>\n");
  CHECK(run("alist 1").out == "<1,1>\n");
  CHECK(run("fagan-seq 4").out == "(2,8) -> (3,7) -> (4,6) -> (5,5)\n");
}

TEST_CASE("cli: boards and move vectors") {
  CHECK(run("tchouk 10").out == "(0,1,1,3,5)\n");
  CHECK(run("tchouk 0").out == "()\n");
  CHECK(run("tchouk 12 --method recursive").out == "(0,0,0,2,4,6)\n");
  CHECK(run("movevec 12").out == "(6,2,1,1,1,1)\n");
  CHECK(run("movevec 12 --method board").out == "(6,2,1,1,1,1)\n");
  CHECK(run("movevec 12 --method play").out == "(6,2,1,1,1,1)\n");
}

TEST_CASE("cli: solve narrates the game") {
  CHECK(run("solve \"1,2\"").out ==
        "(1,2)\n"
        "play 1 -> (0,2)\n"
        "play 2 -> (1)\n"
        "play 1 -> ()\n"
        "WIN in 3 moves\n");
  CHECK(run("solve \"2\"").out == "(2)\nLOSS\n");
  CHECK(run("solve \"(0,1,1,3,5)\"").code == 0);
}

TEST_CASE("cli: range tables") {
  CHECK(run("t --range 1 14").out ==
        " k  t(k)\n"
        " 1     1\n"
        " 2     2\n"
        " 3     4\n"
        " 4     6\n"
        " 5    10\n"
        " 6    12\n"
        " 7    18\n"
        " 8    22\n"
        " 9    30\n"
        "10    34\n"
        "11    42\n"
        "12    48\n"
        "13    58\n"
        "14    60\n");
  CHECK(run("sr --range 9 12").out ==
        "n      9  10  11  12\n"
        "sr(n)  5   5   6   6\n");
}

TEST_CASE("cli: bfile format emits index-value lines") {
  CHECK(run("t --range 1 14 --format bfile").out ==
        "1 1\n2 2\n3 4\n4 6\n5 10\n6 12\n7 18\n8 22\n9 30\n10 34\n11 42\n12 48\n13 58\n14 60\n");
  CHECK(run("xseq 6 --format bfile").out == "1 12\n2 7\n3 6\n4 6\n5 6\n6 6\n");
  CHECK(run("scan 100 --format bfile").out == "1 2\n2 3\n3 4\n4 6\n5 14\n");
}

TEST_CASE("cli: jsonl format emits one object per line") {
  CHECK(run("sr 10 --format jsonl").out == "{\"n\":10,\"sr\":5}\n");
  CHECK(run("cf 30 --format jsonl").out == "{\"m\":30,\"cf\":14}\n");
  CHECK(run("tchouk 10 --format jsonl").out == "{\"n\":10,\"board\":[0,1,1,3,5]}\n");
  CHECK(run("scan 5 --format jsonl").out ==
        "{\"r\":2,\"count\":1,\"lo\":2,\"hi\":2,\"preimages\":[2]}\n"
        "{\"r\":3,\"count\":2,\"lo\":3,\"hi\":4,\"preimages\":[3,4]}\n"
        "{\"r\":4,\"count\":2,\"lo\":5,\"hi\":6,\"preimages\":[5,6]}\n");
}

TEST_CASE("cli: scan lists records and is deterministic across jobs") {
  const std::string want =
      "r=2 preimages=2\n"
      "r=3 preimages=3,4\n"
      "r=4 preimages=5,6\n"
      "r=6 preimages=11,12\n"
      "r=14 preimages=59,60\n";
  CHECK(run("scan 100").out == want);
  const RunResult serial = run("scan 3000 --jobs 1");
  const RunResult parallel = run("scan 3000 --jobs 4");
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("cli: --out writes the same bytes to a file") {
  const std::string path = "cli_out_test.txt";
  const RunResult res = run("sr 10 --out " + path);
  CHECK(res.code == 0);
  CHECK(res.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "sr(10) = 5\n");
  std::remove(path.c_str());
}

TEST_CASE("cli: exit codes") {
  CHECK(run("").code == 2);                 // a subcommand is required
  CHECK(run("frobnicate").code == 2);       // unknown subcommand
  CHECK(run("t 0").code == 2);              // rejected argument
  CHECK(run("sr").code == 2);               // missing seed and range
  CHECK(run("--help").code == 0);
  CHECK(run("sr 10").code == 0);
  CHECK(run("verify --level quick").code == 0);
}
