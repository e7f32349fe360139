#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "shellbound/cli/app.hpp"
#include "shellbound/cli/lattice_file.hpp"
#include "shellbound/errors.hpp"
#include "shellbound/lattice/catalog.hpp"
#include "shellbound/verify/criteria.hpp"

using namespace shellbound;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "shellbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Run& r) { return json::parse(r.out).at("result"); }

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("shellbound_cli_test_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("shell command") {
  const auto e8 = invoke({"shell", "--lattice", "e8", "--k", "2"});
  CHECK(e8.code == cli::kExitOk);
  CHECK(result_of(e8).at("count") == 240);

  CHECK(result_of(invoke({"shell", "--lattice", "zn:4", "--k", "1"})).at("count") == 8);

  const auto empty = invoke({"shell", "--lattice", "zn:2", "--k", "3"});
  CHECK(empty.code == cli::kExitOk);
  CHECK(result_of(empty).at("count") == 0);

  const auto vecs = invoke({"shell", "--lattice", "zn:2", "--k", "1", "--vectors"});
  CHECK(result_of(vecs).at("vectors") == json::parse("[[-1,0],[0,-1],[0,1],[1,0]]"));
}

TEST_CASE("bound, filter, spectrum, design, classify") {
  const auto b = invoke({"bound", "--n", "24", "--k", "4"});
  CHECK(b.code == 0);
  CHECK(result_of(b).at("rsd_bound") == 4071600);

  CHECK(result_of(invoke({"filter", "--k", "2", "--nmax", "200"})).at("dimensions") == json::array({8}));
  CHECK(result_of(invoke({"filter", "--k", "3"})).at("dimensions") == json::array());
  CHECK(result_of(invoke({"filter", "--k", "2", "--n", "8"})).at("passes") == true);

  const auto sp = result_of(invoke({"spectrum", "--lattice", "e8", "--k", "2"}));
  CHECK(sp.at("values") == json::parse(R"(["-1/1","-1/2","0/1","1/2"])"));

  const auto d = result_of(invoke({"design", "--lattice", "e8", "--k", "2"}));
  CHECK(d.at("strength") == 7);
  CHECK(d.at("tight") == true);

  const auto c = invoke({"classify", "--lattice", "e8", "--k", "2"});
  CHECK(c.code == 0);
  CHECK(result_of(c).at("case") == "E8");
  CHECK(result_of(c).at("equality") == true);

  const auto none = invoke({"classify", "--lattice", "dn:4", "--k", "2"});
  CHECK(none.code == 0);
  CHECK(result_of(none).at("case") == "NONE");
}

TEST_CASE("documents are exact and byte-stable") {
  const std::vector<std::vector<std::string>> commands = {
      {"shell", "--lattice", "dn:4", "--k", "2", "--vectors"},
      {"bound", "--n", "100", "--k", "30"},
      {"spectrum", "--lattice", "zn:3", "--k", "5"},
      {"design", "--lattice", "an:2", "--k", "2"},
      {"filter", "--k", "3", "--nmax", "50"},
      {"classify", "--lattice", "e8", "--k", "2"},
      {"classify", "--lattice", "zn:2", "--k", "3"},
  };
  for (const auto& cmd : commands) {
    const auto a = invoke(cmd);
    const auto b = invoke(cmd);
    const auto c = invoke([&] {
      auto t = cmd;
      t.insert(t.begin(), {"--threads", "3"});
      return t;
    }());
    CAPTURE(cmd[0]);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto doc = json::parse(a.out);
    CHECK_FALSE(has_float(doc));
    CHECK(doc.at("command") == cmd[0]);
    CHECK(doc.contains("inputs"));
    CHECK(doc.at("version").is_string());
  }
  // Values beyond int64 become decimal strings.
  const auto big = result_of(invoke({"bound", "--n", "100", "--k", "30"}));
  CHECK(big.at("rsd_bound").is_string());
}

TEST_CASE("exit codes") {
  CHECK(invoke({"shell", "--lattice", "nope", "--k", "1"}).code == cli::kExitInput);
  CHECK(invoke({"shell", "--lattice", "zn:2"}).code == cli::kExitInput);
  CHECK(invoke({"shell", "--lattice", "zn:2", "--k", "0"}).code == cli::kExitInput);
  CHECK(invoke({"frobnicate"}).code == cli::kExitInput);
  CHECK(invoke({"shell", "--lattice", "@/nonexistent/lattice.json", "--k", "1"}).code == cli::kExitInput);

  const auto bad = temp_file("indefinite.json");
  write_file(bad, R"({"dim": 2, "gram": [[1, 2], [2, 1]]})");
  const auto r = invoke({"shell", "--lattice", "@" + bad.string(), "--k", "1"});
  CHECK(r.code == cli::kExitPrecondition);
  CHECK_FALSE(r.err.empty());
  std::filesystem::remove(bad);

  const auto malformed = temp_file("malformed.json");
  write_file(malformed, R"({"dim": 2, "gram": [[1, 0], [0, 1.5]]})");
  CHECK(invoke({"shell", "--lattice", "@" + malformed.string(), "--k", "1"}).code == cli::kExitInput);
  write_file(malformed, R"({"dim": 3, "gram": [[1, 0], [0, 1]]})");
  CHECK(invoke({"shell", "--lattice", "@" + malformed.string(), "--k", "1"}).code == cli::kExitInput);
  write_file(malformed, "{\"dim\": 2, ");
  CHECK(invoke({"shell", "--lattice", "@" + malformed.string(), "--k", "1"}).code == cli::kExitInput);
  std::filesystem::remove(malformed);
}

TEST_CASE("lattice documents") {
  for (const std::string name : {"zn:3", "an:4", "dn:5", "e8", "leech", "scaledz:9"}) {
    const auto lattice = builtin(name);
    const auto text = cli::write_lattice_document(lattice);
    const auto back = cli::parse_lattice_document(text);
    CHECK(back.gram() == lattice.gram());
    CHECK(cli::write_lattice_document(back) == text);
  }

  const auto big = cli::parse_lattice_document(
      R"({"dim": 1, "gram": [[123456789012345678901234567890]]})");
  CHECK(big.entry(0, 0) == BigInt("123456789012345678901234567890"));
  const auto quoted = cli::parse_lattice_document(R"({"dim": 1, "gram": [["42"]]})");
  CHECK(quoted.entry(0, 0) == 42);
  CHECK_THROWS_AS(cli::parse_lattice_document(R"({"dim": 1, "gram": [[1e3]]})"), InputError);
  CHECK_THROWS_AS(cli::parse_lattice_document(R"({"dim": 1, "gram": [["4x"]]})"), InputError);
  CHECK_THROWS_AS(cli::parse_lattice_document(R"({"gram": [[1]]})"), InputError);
}

TEST_CASE("dump round trip through the CLI") {
  const auto path = temp_file("dump.json");
  const auto first = invoke({"shell", "--lattice", "e8", "--k", "2", "--dump", path.string()});
  REQUIRE(first.code == 0);
  const auto loaded = cli::load_lattice_source("@" + path.string());
  CHECK(loaded.gram() == builtin("e8").gram());
  const auto second = invoke({"shell", "--lattice", "@" + path.string(), "--k", "2"});
  CHECK(result_of(second).at("count") == 240);
  std::filesystem::remove(path);
}

TEST_CASE("verify-paper") {
  const auto ok = invoke({"verify-paper"});
  CHECK(ok.code == cli::kExitOk);
  const auto doc = result_of(ok);
  CHECK(doc.at("all_passed") == true);
  CHECK(doc.at("criteria").size() == 12);

  const auto path = temp_file("tampered_e8.json");
  write_file(path, cli::write_lattice_document(verify::perturbed_e8()));
  const auto bad = invoke({"verify-paper", "--lattice", "@" + path.string()});
  CHECK(bad.code != cli::kExitOk);
  CHECK(result_of(bad).at("all_passed") == false);
  std::filesystem::remove(path);
}
