// End-to-end coverage of the command-line surface: exit codes and
// machine-readable output on fixture inputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BILIST_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(BILIST_FIXTURE_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

} // namespace

TEST_CASE("verify: fixture certificates verify with exit 0") {
  auto r = run("verify " + fixture("classic-2-2.cert"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("VERIFIED") != std::string::npos);

  auto k28 = run("verify " + fixture("steiner-k28-7.cert"));
  CHECK(k28.exit_code == 0);
}

TEST_CASE("decide: colourable instances exit 0, blocked ones exit 1") {
  auto blocked = run("decide " + fixture("classic-2-2.cert"));
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.out.find("NOT_COLOURABLE") != std::string::npos);
}

TEST_CASE("mbar prints the extremal size and family") {
  auto r = run("mbar --k1 2 --k2 4 --l 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 2) == "7\n");
  CHECK(r.out.find("7 4 7") != std::string::npos); // family header
}

TEST_CASE("mbar csv parses back and brackets exit 3") {
  auto r = run("--format csv mbar --k1 1 --k2 2 --l 4");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][3] == "2");

  auto capped = run("--max-nodes 4 mbar --k1 2 --k2 3 --l 7");
  CHECK(capped.exit_code == 3);
  CHECK(capped.out.find("bracket") != std::string::npos);
}

TEST_CASE("the 20,7 decision runs end to end") {
  auto r = run("choosable --complete 20 7 --ka 3 --kb 4 --out /tmp/bilist-cli-k20.cert");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("NO /tmp/bilist-cli-k20.cert") != std::string::npos);
  CHECK(run("verify /tmp/bilist-cli-k20.cert").exit_code == 0);
}

TEST_CASE("choosable: negative answers carry a certificate path") {
  auto r = run("choosable --complete 4 2 --ka 2 --kb 2 --out /tmp/bilist-cli-w.cert");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("NO") != std::string::npos);
  auto v = run("verify /tmp/bilist-cli-w.cert");
  CHECK(v.exit_code == 0);

  auto yes = run("choosable --complete 3 2 --ka 2 --kb 2");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("YES") != std::string::npos);
}

TEST_CASE("threshold csv output parses back losslessly") {
  auto r = run("--format csv threshold --b 2 --ka 2 --kb 2");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "b");
  CHECK(rows[1][0] == "2");
  CHECK(rows[1][3] == "EXACT");
  CHECK(rows[1][4] == "4");
}

TEST_CASE("bounds csv output parses back losslessly") {
  auto r = run("--format csv bounds --conditions transversal,coupon --point 2 10 2 15 "
               "--degree-mode");
  CHECK(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == rows[0].size());
  CHECK(rows[1][5] == "transversal");
  CHECK(rows[1][7] == "1"); // holds
}

TEST_CASE("construct and verify round trip through files") {
  auto c = run("construct gadget --k 2 --delta 2 --out /tmp/bilist-cli-g.cert");
  CHECK(c.exit_code == 0);
  auto v = run("verify /tmp/bilist-cli-g.cert");
  CHECK(v.exit_code == 0);
}

TEST_CASE("sample: seeded runs are reproducible and csv requires a seed") {
  auto a = run("--format csv sample coupon --instance " + fixture("classic-2-2.cert") +
               " --seed 5 --budget 50");
  auto b = run("--format csv sample coupon --instance " + fixture("classic-2-2.cert") +
               " --seed 5 --budget 50");
  CHECK(a.exit_code == 3); // blocked instance: budget exhausted
  CHECK(a.out == b.out);

  auto missing = run("--format csv sample coupon --instance " + fixture("classic-2-2.cert") +
                     " --budget 5");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("sample transversal on a random instance succeeds") {
  auto r = run("sample transversal --da 2 --db 10 --ka 2 --kb 15 --a-size 40 --b-size 10 "
               "--palette 30 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("SUCCESS") != std::string::npos);
}

TEST_CASE("usage errors exit 2, caps exit 3") {
  auto usage = run("bounds --conditions nonsense --point 1 1 1 1");
  CHECK(usage.exit_code == 2);

  auto capped = run("--max-nodes 10 threshold --b 3 --ka 3 --kb 3");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("unknown subcommands and flags exit 2 without a stack dump") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("threshold --bogus").exit_code == 2);
}

TEST_CASE("fixture regeneration is byte-identical") {
  auto r = run("construct steiner --preset fano-28 --out /tmp/bilist-regen.cert");
  CHECK(r.exit_code == 0);
  std::ifstream a(fixture("steiner-k28-7.cert")), b("/tmp/bilist-regen.cert");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("the fixtures directory honours the environment override") {
  std::string cmd = std::string("BILIST_FIXTURES=/tmp/bilist-fx ") + BILIST_CLI_PATH +
                    " construct classic --k 2 --delta 2 --fixture 2>/dev/null";
  std::array<char, 512> buf{};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out.find("/tmp/bilist-fx/classic-2-2.cert") != std::string::npos);
  std::ifstream written("/tmp/bilist-fx/classic-2-2.cert");
  CHECK(written.good());
}

TEST_CASE("jobs do not change the output bytes") {
  auto one = run("--format csv --jobs 1 threshold --b 3 --ka 2 --kb 2");
  auto four = run("--format csv --jobs 4 threshold --b 3 --ka 2 --kb 2");
  CHECK(one.out == four.out);
}
