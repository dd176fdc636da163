// End-to-end tests that drive the installed CLI binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string stdout_text;
  std::string stderr_text;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "uniflip_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path dir = scratch_dir();
  fs::path out = dir / "stdout.txt";
  fs::path err = dir / "stderr.txt";
  std::string cmd = std::string(UNIFLIP_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int status = std::system(cmd.c_str());
  int code = -1;
#ifdef WIFEXITED
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
#else
  code = status;
#endif
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("canonical writes a valid flip file") {
  fs::path file = scratch_dir() / "flip1.json";
  RunResult r = run_cli("canonical --n 1 --q 3 --class I --out " + file.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(slurp(file));
  CHECK(j["q"] == 3);
  CHECK(j["n"] == 1);
  CHECK(j["tau"] == "id");
  CHECK(j["matrix"] == nlohmann::json::parse("[[[0,0],[1,0]],[[1,0],[0,0]]]"));
}

TEST_CASE("canonical rejects invalid parameters") {
  RunResult r = run_cli("canonical --n 1 --q 4 --class I");
  CHECK(r.exit_code == 2);
  CHECK(r.stderr_text.find("odd prime") != std::string::npos);
  CHECK(run_cli("canonical --n 1 --q 3 --class V").exit_code == 2);
  CHECK(run_cli("canonical --n 0 --q 3 --class I").exit_code == 2);
}

TEST_CASE("classify round-trips canonical files") {
  fs::path dir = scratch_dir();
  for (std::string cls : {"I", "II", "III", "IV"}) {
    fs::path file = dir / ("flip_" + cls + ".json");
    CHECK(run_cli("canonical --n 2 --q 3 --class " + cls + " --out " + file.string()).exit_code == 0);
    RunResult r = run_cli("classify --input " + file.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["class"] == cls);
    if (cls == "II") CHECK(j["scalar"] == nlohmann::json::array({0, 1}));
  }
}

TEST_CASE("classify rejects non-flips with exit 3") {
  fs::path file = scratch_dir() / "identity.json";
  std::ofstream(file) << "{\"q\":3,\"n\":1,\"tau\":\"id\",\"matrix\":[[[1,0],[0,0]],[[0,0],[1,0]]]}";
  RunResult r = run_cli("classify --input " + file.string());
  CHECK(r.exit_code == 3);
  CHECK(r.stderr_text.find("NotAFlip") != std::string::npos);
}

TEST_CASE("classify rejects malformed input with exit 4") {
  fs::path file = scratch_dir() / "truncated.json";
  std::ofstream(file) << "{\"q\":3,\"n\":1,\"tau\":\"id\",\"mat";
  CHECK(run_cli("classify --input " + file.string()).exit_code == 4);
  CHECK(run_cli("classify --input " + (scratch_dir() / "missing.json").string()).exit_code == 4);
}

TEST_CASE("geometry reports and error codes") {
  fs::path dir = scratch_dir();
  fs::path f3 = dir / "f3.json";
  CHECK(run_cli("canonical --n 2 --q 3 --class III --out " + f3.string()).exit_code == 0);
  RunResult r = run_cli("geometry --input " + f3.string() + " --variant plus");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["transversal"] == true);
  CHECK(j["counts_by_dim"].size() == 2);
  // Maximal objects of a square-type flip all have disc +1.
  CHECK(j["disc_histogram_by_dim"][1]["minus"] == 0);

  fs::path f1 = dir / "f1.json";
  CHECK(run_cli("canonical --n 2 --q 3 --class I --out " + f1.string()).exit_code == 0);
  RunResult full = run_cli("geometry --input " + f1.string() + " --variant full");
  CHECK(full.exit_code == 0);
  CHECK(nlohmann::json::parse(full.stdout_text)["transversal"] == true);
  CHECK(run_cli("geometry --input " + f1.string() + " --variant plus").exit_code == 5);
  CHECK(run_cli("geometry --input " + f1.string() + " --variant full --max-enumeration 10")
            .exit_code == 6);
  CHECK(run_cli("geometry --input " + f1.string() + " --variant sideways").exit_code == 2);
}

TEST_CASE("verify exits by outcome and respects the guard") {
  fs::path rep = scratch_dir() / "verify.json";
  RunResult r = run_cli("verify --n 1 --q 3 --suite field --out " + rep.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["suite"] == "field");
  CHECK(run_cli("verify --n 1 --q 6 --suite field").exit_code == 2);
  CHECK(run_cli("verify --n 1 --q 3 --suite bogus").exit_code == 2);
  // A tight guard skips enumeration-heavy checks but does not fail the run.
  fs::path rep2 = scratch_dir() / "verify_guarded.json";
  RunResult g = run_cli("verify --n 2 --q 3 --suite building --max-enumeration 1000 --out " +
                        rep2.string());
  CHECK(g.exit_code == 0);
  auto j2 = nlohmann::json::parse(slurp(rep2));
  CHECK(j2["summary"]["skipped"].get<int>() >= 1);
  bool chamber_check_skipped = false;
  for (const auto& c : j2["checks"])
    if (c["name"] == "building.chamber_count") chamber_check_skipped = c["status"] == "skipped";
  CHECK(chamber_check_skipped);
}

TEST_CASE("verify reports are byte-identical under a fixed seed") {
  fs::path a = scratch_dir() / "a.json";
  fs::path b = scratch_dir() / "b.json";
  CHECK(run_cli("verify --n 1 --q 3 --suite transitivity --seed 11 --out " + a.string()).exit_code ==
        0);
  CHECK(run_cli("verify --n 1 --q 3 --suite transitivity --seed 11 --out " + b.string()).exit_code ==
        0);
  CHECK(slurp(a) == slurp(b));
}
