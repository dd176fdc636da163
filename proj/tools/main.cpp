// Command-line driver: construct canonical flips, classify user-supplied
// maps, build the induced geometries, and run the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uniflip/json_io.hpp"

namespace {

using namespace uniflip;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitNotAFlip = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitWrongVariant = 5;
constexpr int kExitTooLarge = 6;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedInput, "cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_canonical(int n, int64_t q, const std::string& cls_name, const std::string& out_path) {
  auto cls = parse_flip_class(cls_name);
  if (!cls) {
    std::cerr << "class must be one of I, II, III, IV\n";
    return kExitBadParams;
  }
  try {
    Field F(q);
    HermitianSpace space(n, F);
    SemilinearMap f = canonical_flip(space, *cls);
    emit(out_path, flip_file_to_json({q, n, f.tau, f.mat}));
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() == Errc::NotOddPrime) std::cerr << "q must be an odd prime\n";
    std::cerr << e.what() << "\n";
    return kExitBadParams;
  }
}

int cmd_classify(const std::string& input, const std::string& out_path) {
  FlipFile file;
  try {
    file = parse_flip_file(slurp(input));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitMalformed;
  }
  try {
    Field F(file.q);
    HermitianSpace space(file.n, F);
    ClassifiedFlip cf = classify(space, SemilinearMap{file.matrix, file.tau});
    emit(out_path, classify_report_to_json(F, {file.q, file.n, cf}));
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() == Errc::NotAFlip) {
      std::cerr << e.what() << "\n";
      if (!out_path.empty()) emit(out_path, std::string("{\n  \"error\": \"NotAFlip\"\n}\n"));
      return kExitNotAFlip;
    }
    std::cerr << e.what() << "\n";
    return kExitMalformed;
  }
}

int cmd_geometry(const std::string& input, const std::string& variant_name,
                 const std::string& out_path, uint64_t max_enumeration) {
  Variant variant;
  if (variant_name == "full")
    variant = Variant::Full;
  else if (variant_name == "plus")
    variant = Variant::Plus;
  else if (variant_name == "minus")
    variant = Variant::Minus;
  else {
    std::cerr << "variant must be full, plus, or minus\n";
    return kExitBadParams;
  }
  FlipFile file;
  try {
    file = parse_flip_file(slurp(input));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitMalformed;
  }
  try {
    Field F(file.q);
    HermitianSpace space(file.n, F);
    ClassifiedFlip cf = classify(space, SemilinearMap{file.matrix, file.tau});
    EnumerationGuard guard{max_enumeration};
    Geometry geom = build_geometry(space, cf, variant, guard);
    emit(out_path, geometry_report_to_json(summarize_geometry(space, geom)));
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Errc::NotAFlip: return kExitNotAFlip;
      case Errc::VariantRequiresSemilinear: return kExitWrongVariant;
      case Errc::EnumerationTooLarge: return kExitTooLarge;
      default: return kExitMalformed;
    }
  }
}

int cmd_verify(int n, int64_t q, const std::string& suite_str, uint64_t seed,
               const std::string& out_path, uint64_t max_enumeration, bool timings) {
  auto suite = parse_suite(suite_str);
  if (!suite) {
    std::cerr << "suite must be one of all, field, building, geometry, groups, transitivity\n";
    return kExitBadParams;
  }
  VerificationReport rep;
  try {
    rep = run_verification(n, q, *suite, seed, EnumerationGuard{max_enumeration});
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitBadParams;
  }
  emit(out_path, verification_report_to_json(rep, timings));
  for (const CheckResult& c : rep.checks)
    if (c.status == CheckStatus::Fail)
      std::cerr << "failed: " << c.name << " (" << c.detail << ")\n";
  return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flips of finite unitary buildings: classification, geometries, verification"};
  app.require_subcommand(1);

  int n = 1;
  int64_t q = 3;
  std::string cls, input, out_path, variant = "full", suite = "all";
  uint64_t seed = 0, max_enumeration = 10'000'000;
  bool timings = false;

  auto* canonical = app.add_subcommand("canonical", "write a canonical flip of a given class");
  canonical->add_option("--n", n, "rank (dim V = 2n)")->required();
  canonical->add_option("--q", q, "odd prime field parameter")->required();
  canonical->add_option("--class", cls, "flip class: I, II, III, IV")->required();
  canonical->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* classify_cmd = app.add_subcommand("classify", "classify a flip file");
  classify_cmd->add_option("--input", input, "flip.json path")->required();
  classify_cmd->add_option("--out", out_path, "report path (stdout if omitted)");

  auto* geometry_cmd = app.add_subcommand("geometry", "build the induced geometry");
  geometry_cmd->add_option("--input", input, "flip.json path")->required();
  geometry_cmd->add_option("--variant", variant, "full, plus, or minus");
  geometry_cmd->add_option("--out", out_path, "report path (stdout if omitted)");
  geometry_cmd->add_option("--max-enumeration", max_enumeration, "enumeration guard");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--n", n, "rank (dim V = 2n)")->required();
  verify_cmd->add_option("--q", q, "odd prime field parameter")->required();
  verify_cmd->add_option("--suite", suite, "all, field, building, geometry, groups, transitivity");
  verify_cmd->add_option("--seed", seed, "seed for randomized property checks");
  verify_cmd->add_option("--out", out_path, "report path (stdout if omitted)");
  verify_cmd->add_option("--max-enumeration", max_enumeration, "enumeration guard");
  verify_cmd->add_flag("--timings", timings, "include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadParams;
  }

  try {
    if (canonical->parsed()) return cmd_canonical(n, q, cls, out_path);
    if (classify_cmd->parsed()) return cmd_classify(input, out_path);
    if (geometry_cmd->parsed()) return cmd_geometry(input, variant, out_path, max_enumeration);
    if (verify_cmd->parsed()) return cmd_verify(n, q, suite, seed, out_path, max_enumeration, timings);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadParams;
  }
  return kExitBadParams;
}
