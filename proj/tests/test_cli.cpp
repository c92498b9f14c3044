#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path() {
  const char* p = std::getenv("TRUTHLAB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "TRUTHLAB_CLI must point at the binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  if (!stdin_data.empty()) {
    std::string path = "/tmp/truthlab_cli_stdin.json";
    std::ofstream f(path);
    f << stdin_data;
    f.close();
    cmd = cmd + " < " + path;
  }
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

}  // namespace

TEST_CASE("parse command round") {
  RunResult r = run("parse \"E x0.((x0+x1)=S(S(0)))\"");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["formula"] == "E x0.(x0+x1)=S(S(0))");
  CHECK(j["free_vars"] == std::vector<int>{1});
  CHECK(j["ast"]["op"] == "exists");

  CHECK(run("parse \"E x0.(x0=\"").exit_code == 2);
}

TEST_CASE("encode command") {
  RunResult r = run("encode \"0=0\"");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["kind"] == "formula");
  RunResult t = run("encode \"S(0)\"");
  CHECK(parse(t.out)["kind"] == "term");
  CHECK(parse(t.out)["code"] != j["code"]);
}

TEST_CASE("eval command and exit codes") {
  RunResult t = run("eval --budget 8 \"E x0.(x0=S(0))\"");
  CHECK(t.exit_code == 0);
  CHECK(parse(t.out)["verdict"] == "true");

  RunResult f = run("eval \"S(0)=0\"");
  CHECK(f.exit_code == 0);
  CHECK(parse(f.out)["verdict"] == "false");

  RunResult u = run("eval \"E x0.((x0+x0)=S(0))\"");
  CHECK(u.exit_code == 2);
  CHECK(parse(u.out)["verdict"] == "unknown");

  CHECK(run("eval \"x0=0\"").exit_code == 2);
}

TEST_CASE("disjunction builder command") {
  RunResult r = run("disj build --kind left --eval", "[\"0=0\",\"S(0)=0\"]");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["sentence"] == "(0=0|S(0)=0)");
  CHECK(j["evaluation"]["verdict"] == "true");

  RunResult b = run("disj build --kind balanced", "[\"0=0\",\"S(0)=0\",\"0=0\"]");
  CHECK(parse(b.out)["sentence"] == "(0=0|(S(0)=0|0=0))");
}

TEST_CASE("yablo command") {
  RunResult r = run("yablo run --length 12 --budget 16");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["length"] == 12);

  write_file("/tmp/truthlab_chain.json", "[\"0=0\", \"S(0)=S(0)\"]");
  RunResult file = run("yablo run --seq /tmp/truthlab_chain.json");
  CHECK(file.exit_code == 0);
  CHECK(parse(file.out)["length"] == 2);

  // a chain whose first sentence is false violates the hypotheses
  write_file("/tmp/truthlab_badchain.json", "[\"S(0)=0\", \"0=0\"]");
  CHECK(run("yablo run --seq /tmp/truthlab_badchain.json").exit_code == 1);
}

TEST_CASE("check command exit codes per verdict") {
  write_file("/tmp/truthlab_dc_good.json", R"json({
    "valuation": {"entries": [["0=0", true], ["S(0)=0", false],
                              ["(0=0|S(0)=0)", true]]},
    "sequences": [["0=0", "S(0)=0"]]
  })json");
  CHECK(run("check --principle dcout --input /tmp/truthlab_dc_good.json")
            .exit_code == 0);

  write_file("/tmp/truthlab_dc_bad.json", R"json({
    "valuation": {"entries": [["0=0", false], ["S(0)=0", false],
                              ["(0=0|S(0)=0)", true]]},
    "sequences": [["0=0", "S(0)=0"]]
  })json");
  CHECK(run("check --principle dcout --input /tmp/truthlab_dc_bad.json")
            .exit_code == 1);

  write_file("/tmp/truthlab_ct_undet.json", R"json({
    "valuation": {"entries": [["E x0.x0=S(0)", true]]}
  })json");
  CHECK(run("check --principle ctminus --input /tmp/truthlab_ct_undet.json")
            .exit_code == 2);

  write_file("/tmp/truthlab_seqind.json", R"json({
    "t": [1, 2], "sequences": [[1, 2, 2]]
  })json");
  CHECK(run("check --principle seqind --input /tmp/truthlab_seqind.json")
            .exit_code == 0);

  CHECK(run("check --principle dcout --input /tmp/missing_file.json")
            .exit_code == 2);
}

TEST_CASE("scenario runner") {
  write_file("/tmp/truthlab_scenario.json", R"json({
    "environment": ["0=0", "S(0)=0", "(0=0|S(0)=0)", "!0=0"],
    "base": {"domain": ["0=0"], "pairs": [{"formula": "0=0", "assignment": {}}]},
    "targets": ["(0=0|S(0)=0)"],
    "long_cut": 4,
    "value_bound": 3
  })json");
  RunResult r = run("ev run /tmp/truthlab_scenario.json --audit full");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["construction"]["ok"] == true);
  CHECK(j["validation"]["valid"] == true);
  CHECK(j.contains("result"));
}

TEST_CASE("cutmodel runner") {
  RunResult a = run(
      "cutmodel run --which A --size 300 --cut 150 --count 40 --max-len 20 "
      "--seed 5");
  CHECK(a.exit_code == 0);
  auto j = parse(a.out);
  CHECK(j["audit"]["verdict"] == "pass");

  write_file("/tmp/truthlab_seqs.json", "[[5], [6, 7]]");
  RunResult file = run(
      "cutmodel run --which A --size 100 --cut 50 --seqs /tmp/truthlab_seqs.json");
  CHECK(file.exit_code == 0);

  CHECK(run("cutmodel run --which C --size 10 --cut 5").exit_code == 2);
}

TEST_CASE("usage errors exit with the input-error code") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("check").exit_code == 2);  // missing required --principle
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("suite subset is byte-identical across runs") {
  RunResult r1 = run("suite --seed 7 --only c01");
  RunResult r2 = run("suite --seed 7 --only c01");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  auto j = parse(r1.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["all_pass"] == true);
}

TEST_CASE("a starved budget reports undetermined, not a violation") {
  RunResult r = run("suite --budget 1 --only c04");
  CHECK(r.exit_code == 2);
  auto j = parse(r.out);
  CHECK(j["checks"][0]["undetermined"] == true);
}
