#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

// Subprocess tests for the command-line tool: verb output shapes, exit
// codes, and byte-level determinism.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(STEINER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "steiner_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

std::filesystem::path make_file(const std::string& name, const std::string& args) {
  RunResult r = run(args);
  REQUIRE(r.exit_code == 0);
  return scratch_file(name, r.out);
}

}  // namespace

TEST_CASE("cli classifies the multiplication bundle") {
  auto schw = make_file("schw23.json", "make schwarzenberger --n 2 --k 3");
  RunResult r = run("classify " + schw.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verdict\": \"infinite\"") != std::string::npos);
  CHECK(r.out.find("\"classification\": \"schwarzenberger\"") != std::string::npos);
}

TEST_CASE("cli reports the arrangement invariant") {
  auto six = scratch_file(
      "six.json",
      R"([["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"],["1","2","3"],["1","4","9"]])");
  auto log6 = make_file("log6.json", "make logarithmic --hyperplanes " + six.string());
  RunResult r = run("invariant " + log6.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"w\": 6") != std::string::npos);
}

TEST_CASE("cli membership on the dual conic") {
  auto schw = make_file("schw22.json", "make schwarzenberger --n 2 --k 2");
  RunResult off = run("member " + schw.string() + " --hyperplane 1,1,0");
  CHECK(off.exit_code == 0);
  CHECK(off.out.find("\"member\": false") != std::string::npos);
  CHECK(off.out.find("\"h0\": 0") != std::string::npos);

  RunResult on = run("member " + schw.string() + " --hyperplane 1,2,4");
  CHECK(on.exit_code == 0);
  CHECK(on.out.find("\"member\": true") != std::string::npos);
  CHECK(on.out.find("\"witness_u\"") != std::string::npos);
}

TEST_CASE("cli exit codes distinguish parse and domain trouble") {
  CHECK(run("hyperdet /nonexistent/missing.json").exit_code == 1);

  auto broken = scratch_file("broken.json", "{ not json");
  CHECK(run("hyperdet " + broken.string()).exit_code == 1);

  auto degen = make_file("degen.json", "make degenerate --dims 4,3,2 --beta 1,0 --seed 5");
  CHECK(run("hyperdet " + degen.string()).exit_code == 0);
  CHECK(run("unstable " + degen.string()).exit_code == 2);

  CHECK(run("modulidim --n 1 --k 3 --i 0").exit_code == 2);

  auto wrong = scratch_file("wrong.json", R"({"dims":[3,2],"entries":[["1"],["1"],["1"]]})");
  CHECK(run("hyperdet " + wrong.string()).exit_code == 2);
}

TEST_CASE("cli reports are deterministic") {
  RunResult a = run("make random --dims 5,3,3 --seed 7");
  RunResult b = run("make random --dims 5,3,3 --seed 7");
  RunResult c = run("make random --dims 5,3,3 --seed 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);

  auto t = scratch_file("rand.json", a.out);
  RunResult u1 = run("unstable " + t.string() + " --seed 3");
  RunResult u2 = run("unstable " + t.string() + " --seed 3");
  CHECK(u1.exit_code == 0);
  CHECK(u1.out == u2.out);
  CHECK(u1.out.find("\"seed\": 3") != std::string::npos);
}

TEST_CASE("cli modular fast path re-verifies zeroes") {
  auto id = make_file("id322.json", "make identity --dims 3,2,2");
  RunResult fast = run("hyperdet " + id.string() + " --field fp:65537");
  CHECK(fast.exit_code == 0);
  CHECK(fast.out.find("\"field\": \"fp:65537\"") != std::string::npos);
  CHECK(fast.out.find("\"nonzero\": true") != std::string::npos);
  CHECK(fast.out.find("reverified") == std::string::npos);

  auto degen = make_file("degen2.json", "make degenerate --dims 3,2,2 --beta 1,0 --seed 2");
  RunResult zero = run("hyperdet " + degen.string() + " --field fp:65537");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("\"reverified\": true") != std::string::npos);
  CHECK(zero.out.find("\"nonzero\": false") != std::string::npos);
}

TEST_CASE("cli normal form fixes the identity tensor") {
  auto id = make_file("id433.json", "make identity --dims 5,3,3");
  RunResult nf = run("normalform " + id.string());
  REQUIRE(nf.exit_code == 0);
  std::ifstream in(id);
  std::string orig((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(nf.out == orig);
}

TEST_CASE("cli gale applied twice returns the original") {
  RunResult t = run("make random --dims 4,3,2 --seed 11");
  auto f1 = scratch_file("gale_in.json", t.out);
  RunResult g1 = run("gale " + f1.string());
  REQUIRE(g1.exit_code == 0);
  auto f2 = scratch_file("gale_mid.json", g1.out);
  RunResult g2 = run("gale " + f2.string());
  REQUIRE(g2.exit_code == 0);
  nlohmann::json jt = nlohmann::json::parse(t.out);
  nlohmann::json jmid = nlohmann::json::parse(g1.out);
  nlohmann::json jg = nlohmann::json::parse(g2.out);
  CHECK(jmid["dims"] == nlohmann::json::array({4, 2, 3}));
  CHECK(jt["dims"] == jg["dims"]);
  CHECK(jt["entries"] == jg["entries"]);
}
