// Exercises the installed binary end to end. The path to the binary comes
// from the first positional test argument (wired up by the build) or from
// the HURWITZ_CLI environment variable when running by hand.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "hurwitz/table.hpp"

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI with stderr dropped unless a capture file is given.
RunResult run_cli(const std::string& args, const std::string& stderr_file = "") {
  const std::string redirect =
      stderr_file.empty() ? " 2>/dev/null" : " 2>" + stderr_file;
  const std::string cmd = g_cli + " " + args + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

TEST_CASE("decompose emits one csv row") {
  const auto r = run_cli("decompose --d 5 --g 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "d,g,k,s,b\n5,7,1,3,22\n");
}

TEST_CASE("maximize prints the expected tuple") {
  const auto r = run_cli("maximize --d 6 --g 11 --a1 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "tuple\n\"2,3,3,4,4\"\n");
}

TEST_CASE("gate reports the reason and stays exit 0 without --strict") {
  const auto r = run_cli("gate --d 3 --g 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("false") != std::string::npos);
  CHECK(r.out.find("(d,g) = (3,5) excluded") != std::string::npos);
  CHECK(run_cli("gate --d 3 --g 5 --strict").exit_code == 1);
  CHECK(run_cli("gate --d 5 --g 11 --strict").exit_code == 0);
}

TEST_CASE("acceptable honors the condition-3 reading") {
  const auto gap = run_cli("acceptable --d 4 --g 8");
  CHECK(gap.out.find("2,4,5") != std::string::npos);
  const auto literal = run_cli("acceptable --d 4 --g 8 --condition3 literal");
  CHECK(literal.out.find("2,4,5") == std::string::npos);
  CHECK(literal.out.find("3,3,5") != std::string::npos);
}

TEST_CASE("table emits all strata with a provenance column") {
  const auto r = run_cli("table --d 3 --g 4 --format csv");
  CHECK(r.exit_code == 0);
  const hurwitz::Table t = hurwitz::parse_csv(r.out);
  CHECK(t.columns ==
        std::vector<std::string>{"j", "mu", "m", "sigma", "provenance"});
  CHECK(t.rows.size() == 15);
  for (const auto& row : t.rows)
    CHECK(row[4] == "m=default,c=default,delta=default,e=default");
}

TEST_CASE("table output is byte-identical across runs") {
  const auto a = run_cli("table --d 4 --g 7 --format csv");
  const auto b = run_cli("table --d 4 --g 7 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto ja = run_cli("table --d 4 --g 7 --format json");
  const auto jb = run_cli("table --d 4 --g 7 --format json");
  CHECK(ja.out == jb.out);
}

TEST_CASE("json and csv carry the same content") {
  const auto csv = run_cli("table --d 3 --g 4 --format csv");
  const auto js = run_cli("table --d 3 --g 4 --format json");
  const hurwitz::Table from_csv = hurwitz::parse_csv(csv.out);
  const auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc.size() == from_csv.rows.size());
  for (std::size_t i = 0; i < doc.size(); ++i)
    for (std::size_t c = 0; c < from_csv.columns.size(); ++c)
      CHECK(doc[i][from_csv.columns[c]].get<std::string>() ==
            from_csv.rows[i][c]);
}

TEST_CASE("tex output is a pasteable tabular body") {
  const auto r = run_cli("sigma --d 3 --g 3 --j 2 --mu 3 --format tex");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\\hline") != std::string::npos);
  CHECK(r.out.find("\\\\") != std::string::npos);
  CHECK(r.out.find("\\begin") == std::string::npos);
}

TEST_CASE("sigma spot value through the pipe") {
  const auto r = run_cli("sigma --d 3 --g 3 --j 2 --mu 1,1,1");
  CHECK(r.exit_code == 0);
  const hurwitz::Table t = hurwitz::parse_csv(r.out);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][3] == "1/9");
}

TEST_CASE("convention banner goes to stderr, not stdout") {
  const std::string err_file = "cli_test_stderr.txt";
  const auto r = run_cli("table --d 3 --g 4", err_file);
  const std::string err = slurp(err_file);
  std::remove(err_file.c_str());
  CHECK(err.find("conventions") != std::string::npos);
  CHECK(r.out.find("conventions") == std::string::npos);
}

TEST_CASE("partition input is auto-sorted with a warning") {
  const std::string err_file = "cli_test_stderr2.txt";
  const auto r = run_cli("sigma --d 3 --g 3 --j 2 --mu 1,1,2 --chain-file /dev/null",
                         err_file);
  std::remove(err_file.c_str());
  // /dev/null is not valid JSON: the run fails, but never because of mu order
  CHECK(r.exit_code != 0);
  const auto sorted = run_cli("sigma --d 4 --g 6 --j 2 --mu 1,1,2", err_file);
  const std::string err = slurp(err_file);
  std::remove(err_file.c_str());
  CHECK(sorted.exit_code == 0);
  CHECK(err.find("re-sorted") != std::string::npos);
  const hurwitz::Table t = hurwitz::parse_csv(sorted.out);
  CHECK(t.rows[0][1] == "2,1,1");
}

TEST_CASE("chain file feeds sigma") {
  const std::string path = "cli_test_chain.json";
  {
    std::ofstream out(path);
    out << R"({"entries": [{"j": 2, "mu": [3], "m": 3, "c": 0,
                "delta": [0, 0, 0, 0],
                "e": ["3/2", "1", "1/2", "0"]}]})";
  }
  const auto r = run_cli("sigma --d 3 --g 3 --j 2 --mu 3 --chain-file " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 0);
  const hurwitz::Table t = hurwitz::parse_csv(r.out);
  CHECK(t.rows[0][3] == "1");
  CHECK(t.rows[0][4] == "m=file,c=file,delta=file,e=file");
}

TEST_CASE("missing chain entries fail with exit 1") {
  const std::string path = "cli_test_chain_empty.json";
  {
    std::ofstream out(path);
    out << R"({"entries": []})";
  }
  const auto r = run_cli("table --d 3 --g 3 --chain-file " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
  CHECK(run_cli("decompose --d 5").exit_code == 2);        // missing --g
  CHECK(run_cli("nonsense --d 5 --g 7").exit_code == 2);   // unknown command
  CHECK(run_cli("decompose --d 5 --g 7 --format yaml").exit_code == 2);
  CHECK(run_cli("sigma --d 3 --g 3 --j 2 --mu 0,3").exit_code == 2);
  CHECK(run_cli("decompose --d 9 --g 3").exit_code == 1);  // g < d
  CHECK(run_cli("--help").exit_code == 0);
}

int main(int argc, char** argv) {
  if (const char* env = std::getenv("HURWITZ_CLI")) g_cli = env;
  for (int i = 1; i < argc; ++i)
    if (argv[i][0] != '-') g_cli = argv[i];
  if (g_cli.empty()) {
    std::fprintf(stderr,
                 "test_cli: pass the binary path as an argument or set "
                 "HURWITZ_CLI\n");
    return 1;
  }
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
