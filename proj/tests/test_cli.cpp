#include "lsv/cli.hpp"

#include "lsv/json_io.hpp"
#include "lsv/verify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace lsv;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("battery results collect counterexamples") {
  BatteryResult res;
  res.record(true, Json{{"case", 1}});
  CHECK(res.ok);
  CHECK(res.counterexamples.empty());
  res.record(false, Json{{"case", 2}});
  CHECK_FALSE(res.ok);
  CHECK(res.checked == 2);
  REQUIRE(res.counterexamples.size() == 1);
  CHECK(res.counterexamples.at(0).at("case").get<int>() == 2);
}

TEST_CASE("basic outputs and exit codes") {
  CHECK(run({"roots", "--type", "A2"}).code == 0);
  CHECK(run({"verify", "recip", "--type", "A1", "--box", "2"}).code == 0);
  CHECK(run({"roots", "--type", "D7"}).code == 2);
  CHECK(run({"char", "demazure", "--type", "A2", "--w", "1,2,1"}).code == 2);  // missing lambda
  CHECK(run({"char", "demazure", "--type", "A2", "--w", "1,2,1", "--lambda", "1"}).code == 2);
  CHECK(run({"char", "demazure", "--type", "A2", "--w", "1,7", "--lambda", "1,1"}).code == 2);
  CHECK(run({"char", "m", "--type", "A1", "--lambda", "-1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("documented invocations") {
  auto demazure = run({"char", "demazure", "--type", "A2", "--w", "1,2,1", "--lambda", "1,1"});
  REQUIRE(demazure.code == 0);
  Json j = Json::parse(demazure.out);
  Coeff dim = 0;
  for (const auto& term : j) dim += Coeff(term.at("c").get<std::string>());
  CHECK(dim == 8);

  auto mchar = run({"char", "m", "--type", "A1", "--lambda", "1"});
  REQUIRE(mchar.code == 0);
  CHECK(Json::parse(mchar.out).size() == 3);
  auto mchar_mu = run({"char", "m", "--type", "A1", "--mu", "1"});
  CHECK(mchar_mu.out == mchar.out);

  auto roots = run({"roots", "--type", "A2"});
  CHECK(Json::parse(roots.out).at("n_positive").get<int>() == 3);

  auto layers = run({"layers", "vdk", "--type", "A1", "--lambda", "1", "--nmax", "2"});
  REQUIRE(layers.code == 0);
  Json lj = Json::parse(layers.out);
  REQUIRE(lj.size() == 3);
  CHECK(lj.at(2).at("mu").at(0).get<int>() == 5);

  // Vanishing Euler characteristic serializes as the empty array and
  // round-trips given the rank.
  auto zero = run({"char", "demazure", "--type", "A1", "--w", "1", "--lambda", "-1"});
  REQUIRE(zero.code == 0);
  Json zj = Json::parse(zero.out);
  CHECK(zj == Json::array());
  CHECK(character_from_json(zj, 1).is_zero());
}

TEST_CASE("identical invocations are byte-identical and outputs re-parse") {
  const std::vector<std::vector<std::string>> invocations = {
      {"roots", "--type", "B2"},
      {"weyl", "--type", "A2"},
      {"char", "c", "--type", "A2", "--lambda", "1,1"},
      {"char", "q", "--type", "B2", "--nu", "-1,0"},
      {"char", "xw", "--type", "A1", "--w", "1", "--lambda", "2"},
      {"layers", "fil", "--type", "A2", "--w", "1", "--lambda", "1,1"},
      {"verify", "sep", "--type", "A1", "--box", "1"},
      {"ktheory", "diag", "--type", "A2"},
  };
  for (const auto& args : invocations) {
    CliRun first = run(args);
    CliRun second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(Json::parse(first.out).is_discarded());
  }

  // Character payloads re-parse to equal values.
  auto c = run({"char", "c", "--type", "A2", "--lambda", "1,1"});
  BiCharacter parsed = bicharacter_from_json(Json::parse(c.out));
  CHECK(bicharacter_to_json(parsed, 2).dump(2) + "\n" == c.out);
}

TEST_CASE("cache transparency") {
  auto dir = std::filesystem::temp_directory_path() / "lsv_cache_test";
  std::filesystem::remove_all(dir);

  auto plain = run({"verify", "recip", "--type", "B2", "--box", "1"});
  auto cold = run({"--cache-dir", dir.string(), "verify", "recip", "--type", "B2", "--box", "1"});
  CHECK(std::filesystem::exists(dir / "weyl_B2.json"));
  auto warm = run({"--cache-dir", dir.string(), "verify", "recip", "--type", "B2", "--box", "1"});
  CHECK(plain.code == 0);
  CHECK(plain.out == cold.out);
  CHECK(plain.out == warm.out);

  auto weyl_plain = run({"weyl", "--type", "B2"});
  auto weyl_warm = run({"--cache-dir", dir.string(), "weyl", "--type", "B2"});
  CHECK(weyl_plain.out == weyl_warm.out);
  // The flag may also follow the subcommand.
  auto trailing = run({"weyl", "--type", "B2", "--cache-dir", dir.string()});
  CHECK(weyl_plain.out == trailing.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("--out writes the same payload to a file") {
  auto path = std::filesystem::temp_directory_path() / "lsv_out_test.json";
  auto direct = run({"roots", "--type", "A1"});
  auto filed = run({"--out", path.string(), "roots", "--type", "A1"});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  std::filesystem::remove(path);
}
