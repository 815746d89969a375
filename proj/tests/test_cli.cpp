#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eqk/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int status;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = eqk::cli::run(args, out, err);
  return {status, out.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "eqk_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

const char* kPentagon = R"({"size":5,"m":[[1,2,0,0,2],[2,1,2,0,0],[0,2,1,2,0],[0,0,2,1,2],[2,0,0,2,1]]})";
const char* kPolygon3 = R"({"size":4,"m":[[1,3,0,3],[3,1,3,0],[0,3,1,3],[3,0,3,1]]})";
const char* kAffineA3 = R"({"size":4,"m":[[1,3,2,3],[3,1,3,2],[2,3,1,3],[3,2,3,1]]})";

}  // namespace

TEST_CASE("SL2(Z) K-theory with check") {
  Result r = run({"amalgam", "--r", "2", "--m", "3,2", "--theory", "k", "--check"});
  CHECK(r.status == 0);
  Json j = r.json();
  CHECK(j["theory"] == "k");
  CHECK(j["period"] == 2);
  CHECK(j["degrees"]["0"]["resolved"]["rank"] == 8);
  CHECK(j["degrees"]["-1"]["resolved"]["rank"] == 0);
  REQUIRE(j["verdicts"].size() == 2);
  for (const auto& v : j["verdicts"]) CHECK(v["verdict"] == "EXACT_MATCH");
}

TEST_CASE("pentagon KO with both models") {
  const std::string f = write_temp("pentagon.json", kPentagon);
  Result r = run({"coxeter", "--file", f, "--theory", "ko", "--model", "both", "--check"});
  CHECK(r.status == 0);
  Json j = r.json();
  CHECK(j["models_agree"] == true);
  CHECK(j["degrees"]["0"]["resolved"]["rank"] == 11);
  CHECK(j["degrees"]["-1"]["resolved"]["torsion"].size() == 11);
  CHECK(j["closed_form"]["parameters"]["d"] == 11);
}

TEST_CASE("empty Coxeter matrix is the trivial group") {
  const std::string f = write_temp("empty.json", R"({"size":0,"m":[]})");
  Result r = run({"coxeter", "--file", f, "--theory", "k"});
  CHECK(r.status == 0);
  CHECK(r.json()["degrees"]["0"]["resolved"]["rank"] == 1);
}

TEST_CASE("polygon KO reports the extension and the mismatching residues") {
  const std::string f = write_temp("polygon3.json", kPolygon3);
  Result r = run({"coxeter", "--file", f, "--theory", "ko", "--check"});
  Json j = r.json();
  CHECK(j["degrees"]["-1"]["extension_ambiguous"] == true);
  CHECK(j["verdicts"][1]["verdict"] == "MATCH_UP_TO_EXTENSION");
  CHECK(r.status == (j["verdicts"][3]["verdict"] == "MISMATCH" ? 2 : 0));
}

TEST_CASE("errors are machine readable") {
  Result a3 = run({"coxeter", "--file", write_temp("affine_a3.json", kAffineA3), "--theory", "k"});
  CHECK(a3.status == 1);
  CHECK(a3.json()["error"] == "unsupported_stabilizer");
  CHECK(a3.json()["subject"] == "{s0,s1,s2}");

  Result asym = run({"coxeter", "--file", write_temp("asym.json", R"({"size":2,"m":[[1,2],[3,1]]})")});
  CHECK(asym.status == 1);
  CHECK(asym.json()["error"] == "invalid_input");

  Result malformed = run({"coxeter", "--file", write_temp("bad.json", "{\"size\": 2,")});
  CHECK(malformed.status == 1);
  CHECK(malformed.json()["error"] == "invalid_input");

  Result even = run({"amalgam", "--r", "2", "--m", "3,2", "--theory", "ko"});
  CHECK(even.status == 1);
  CHECK(even.json()["subject"] == "r");

  Result flag = run({"amalgam", "--bogus"});
  CHECK(flag.status == 1);
  CHECK(flag.json()["error"] == "invalid_input");

  Result missing = run({"coxeter", "--theory", "k"});
  CHECK(missing.status == 1);
}

TEST_CASE("check needs an applicable closed form") {
  const std::string f = write_temp("odd_labels.json", R"({"size":3,"m":[[1,5,0],[5,1,7],[0,7,1]]})");
  CHECK(run({"coxeter", "--file", f, "--theory", "k"}).status == 0);
  CHECK(run({"coxeter", "--file", f, "--theory", "k", "--check"}).status == 1);
}

TEST_CASE("output is deterministic") {
  const std::string f = write_temp("pentagon.json", kPentagon);
  const std::vector<std::string> args{"coxeter", "--file", f, "--theory", "ko", "--model", "both", "--check"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> am{"amalgam", "--r", "1,3", "--m", "2,3,4", "--theory", "ko", "--check"};
  CHECK(run(am).out == run(am).out);
}

TEST_CASE("dumped complexes round-trip") {
  struct Case {
    std::vector<std::string> args;
    std::string theory;
  };
  for (const Case& c : std::vector<Case>{
           {{"amalgam", "--r", "1,3", "--m", "2,3,4"}, "ko"},
           {{"coxeter", "--file", write_temp("polygon3.json", kPolygon3), "--model", "bestvina"}, "ko"},
           {{"coxeter", "--file", write_temp("pentagon.json", kPentagon)}, "k"}}) {
    auto args = c.args;
    args.insert(args.end(), {"--theory", c.theory});
    auto dump_args = args;
    dump_args.push_back("--emit-complex");
    Result dump = run(dump_args);
    REQUIRE(dump.status == 0);
    const std::string f = write_temp("dump.json", dump.out);
    Result again = run({c.args[0], "--from-complex", f, "--theory", c.theory});
    REQUIRE(again.status == 0);
    CHECK(again.json()["degrees"] == run(args).json()["degrees"]);
    // dumping the re-read complex reproduces the dump
    CHECK(run({c.args[0], "--from-complex", f, "--emit", "complex"}).out == dump.out);
  }
}

TEST_CASE("cochain and page dumps") {
  Result cochain = run({"amalgam", "--r", "2", "--m", "3,2", "--emit-cochain"});
  REQUIRE(cochain.status == 0);
  Json c = cochain.json();
  REQUIRE(c.size() == 2);
  CHECK(c[0]["degrees"][0]["free_rank"] == 10);
  CHECK(c[0]["maps"][0]["blocks"][0]["descriptor"].is_string());
  CHECK(c[0]["maps"][0]["blocks"][1]["incidence"] == -1);

  Result page = run({"coxeter", "--file", write_temp("polygon3.json", kPolygon3), "--theory", "ko", "--emit", "e2page"});
  REQUIRE(page.status == 0);
  CHECK(page.json()["period"] == 8);
  CHECK(page.json()["collapses"] == true);
}

TEST_CASE("text format and output file") {
  Result text = run({"amalgam", "--r", "2", "--m", "3,2", "--format", "text", "--check"});
  CHECK(text.status == 0);
  CHECK(text.out.find("degree 0: Z^8") != std::string::npos);
  const std::string out = (fs::temp_directory_path() / "eqk_cli_tests" / "report.json").string();
  Result file = run({"amalgam", "--m", "5", "--out", out});
  CHECK(file.status == 0);
  CHECK(file.out.empty());
  std::ifstream in(out);
  CHECK(Json::parse(in)["degrees"]["0"]["resolved"]["rank"] == 5);
}
