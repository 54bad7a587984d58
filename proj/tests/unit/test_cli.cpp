#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "tw/json_io.hpp"

using namespace tw;

namespace {

struct Run {
  int code;
  Json out;
  std::string raw;
};

auto run(const std::vector<std::string>& args) -> Run {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  Json j;
  try {
    j = Json::parse(out.str());
  } catch (const Json::exception&) {
  }
  return {code, j, out.str()};
}

auto temp_file(const std::string& name, const std::string& text) -> std::string {
  const auto dir = std::filesystem::temp_directory_path() / "tw_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("workbench-cli") {
  TEST_CASE("bounds report") {
    const auto r = run({"bounds", "thm-quant"});
    CHECK(r.code == 0);
    CHECK(r.out["integer_bound"] == "115702982084316742920");
    CHECK(r.out["rational_bound"] == "340764151420350");
    CHECK(r.out["pass"] == true);
  }

  TEST_CASE("relation suite command") {
    const auto r = run({"ia", "relations", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out["pass"] == true);
  }

  TEST_CASE("johnson and splitting commands") {
    CHECK(run({"johnson", "verify", "--g", "3"}).code == 0);
    CHECK(run({"splitting", "check", "--g", "4", "--g1", "2"}).code == 0);
    CHECK(run({"splitting", "check", "--g", "4", "--g1", "4"}).code == 2);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bounds"}).code == 2);
    CHECK(run({"ia", "relations", "--n", "3", "--bogus"}).code == 2);
    CHECK(run({"quasipoly", "nosuch", "a", "b"}).code == 2);
    CHECK(run({"--schema", "nosuch"}).code == 2);
  }

  TEST_CASE("malformed JSON exits with 2") {
    const auto bad = temp_file("bad.json", "{ \"dim\": ");
    const auto out = temp_file("out.json", "");
    CHECK(run({"quasipoly", "fit", bad, out}).code == 2);
    CHECK(run({"sdp", "search", bad}).code == 2);
    CHECK(run({"fg", "certify", bad, bad}).code == 2);
  }

  TEST_CASE("version and schema") {
    CHECK(run({"--version"}).code == 0);
    const auto r = run({"--schema", "instance"});
    CHECK(r.code == 0);
    CHECK(r.out["type"] == "instance");
  }

  TEST_CASE("quasipoly fit and degree") {
    const auto in = temp_file("fit.json",
                              R"({"target": {"free_rank": 1}, "box": [0, 6], "values": [3, 5, 12, 24, 41, 63, 90]})");
    const auto out = (std::filesystem::temp_directory_path() / "tw_cli_tests" / "fit_out.json").string();
    auto r = run({"quasipoly", "fit", in, out});
    REQUIRE(r.code == 0);
    const auto result = read_json_file(out);
    CHECK(result["binomial_coefficients"] == Json::parse("[[3], [2], [5]]"));

    const auto half = temp_file("half.json", R"({"window": {"target": {"free_rank": 1}, "box": [0, 8],
      "values": [0, 0, 1, 1, 2, 2, 3, 3, 4]}, "kmax": 3})");
    r = run({"quasipoly", "degree", half, out});
    CHECK(r.code == 0);
    CHECK(r.out["quasi_degree"] == 1);
    CHECK(r.out["poly_degree"].is_null());
  }

  TEST_CASE("quasipoly equation violation exits with 1") {
    const auto in = temp_file("viol.json", R"({"target": {"free_rank": 1}, "box": [-2, 2, -2, 2],
      "values": [0,0,0,0,0, 0,0,0,0,0, 0,0,0,1,0, 0,0,0,0,0, 0,0,0,0,0]})");
    const auto out = (std::filesystem::temp_directory_path() / "tw_cli_tests" / "viol_out.json").string();
    const auto r = run({"quasipoly", "eq-func1", in, out});
    CHECK(r.code == 1);
    CHECK(r.out["pass"] == false);
    CHECK(r.out["witness"].is_array());
  }

  TEST_CASE("sdp search round trip") {
    const auto in = temp_file("sdp.json", R"({"space": "Wn", "n": 3,
      "B": {"ambient_rank": 6, "basis": [[1, 0, 0, 0, 0, 0]]}, "X": [[1, 0, 0, 0, 0, 0]], "xset": "all_nonzero"})");
    const auto r = run({"sdp", "search", in, "--max-len", "6", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out["verified"] == true);
    const auto again = run({"sdp", "search", in, "--max-len", "6", "--seed", "3"});
    CHECK(again.raw == r.raw);
    const auto zero = temp_file("sdp0.json", R"({"space": "Wn", "n": 3, "B": [], "X": [[0, 0, 0, 0, 0, 0]]})");
    CHECK(run({"sdp", "search", zero}).code == 2);
  }

  TEST_CASE("certificate command") {
    const auto module = temp_file("module.json",
                                  R"({"dim": 2, "rank_A": 1, "action": [[[1, 1], [0, 1]]], "inverses": [[[1, -1], [0, 1]]]})");
    const auto good = temp_file("cert.json", R"({"directions": [{"a": [1], "k": 2}], "x": [0, 1]})");
    const auto weak = temp_file("weak.json", R"({"directions": [{"a": [1], "k": 1}], "x": [0, 1]})");
    auto r = run({"fg", "certify", module, good});
    CHECK(r.code == 0);
    CHECK(r.out["generators"] == Json::parse("[[0, 1], [1, 0]]"));
    r = run({"fg", "certify", module, weak});
    CHECK(r.code == 1);
  }
}
