#include <doctest.h>

#include <json.hpp>

#include "uniflip/json_io.hpp"
#include "uniflip/sampling.hpp"

using namespace uniflip;

TEST_CASE("flip files round-trip") {
  for (auto [n, q] : {std::pair{1, 3}, {2, 3}, {2, 5}}) {
    Field F(q);
    HermitianSpace space(n, F);
    for (FlipClass cls : {FlipClass::I_LinearIsometry, FlipClass::II_LinearAntiIsometry,
                          FlipClass::III_SemilinearSquare, FlipClass::IV_SemilinearNonSquare}) {
      SemilinearMap f = canonical_flip(space, cls);
      FlipFile file{q, n, f.tau, f.mat};
      FlipFile back = parse_flip_file(flip_file_to_json(file));
      CHECK(back.q == q);
      CHECK(back.n == n);
      CHECK(back.tau == f.tau);
      CHECK(back.matrix == f.mat);
    }
  }
}

TEST_CASE("flip file validation") {
  CHECK_THROWS_AS(parse_flip_file("{ not json"), Error);
  CHECK_THROWS_AS(parse_flip_file("{\"q\":3,\"n\":1}"), Error);
  CHECK_THROWS_AS(
      parse_flip_file("{\"q\":3,\"n\":1,\"tau\":\"conj\",\"matrix\":[[[0,0],[1,0]],[[1,0],[0,0]]]}"),
      Error);
  // Even q.
  CHECK_THROWS_AS(
      parse_flip_file("{\"q\":4,\"n\":1,\"tau\":\"id\",\"matrix\":[[[0,0],[1,0]],[[1,0],[0,0]]]}"),
      Error);
  // Wrong shape.
  CHECK_THROWS_AS(parse_flip_file("{\"q\":3,\"n\":1,\"tau\":\"id\",\"matrix\":[[[0,0],[1,0]]]}"),
                  Error);
  // Unreduced residues.
  CHECK_THROWS_AS(
      parse_flip_file("{\"q\":3,\"n\":1,\"tau\":\"id\",\"matrix\":[[[0,0],[4,0]],[[1,0],[0,0]]]}"),
      Error);
  // Singular matrix.
  try {
    parse_flip_file("{\"q\":3,\"n\":1,\"tau\":\"id\",\"matrix\":[[[1,0],[0,0]],[[2,0],[0,0]]]}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedInput);
  }
}

TEST_CASE("subspace serialization shape") {
  Field F(3);
  Subspace U = Subspace::span(F, {unit_vector(4, 0), unit_vector(4, 2)}, 4);
  auto j = nlohmann::json::parse(subspace_to_json(U));
  CHECK(j["dim"] == 2);
  CHECK(j["basis"].size() == 2);
  CHECK(j["basis"][0].size() == 4);
  CHECK(j["basis"][0][0] == nlohmann::json::array({1, 0}));
}

TEST_CASE("chamber streams are sorted arrays of subspace serializations") {
  Field F(3);
  HermitianSpace line(1, F);
  auto chambers = enumerate_chambers(line);
  // Shuffle order going in; the stream is sorted regardless.
  std::vector<Chamber> reversed(chambers.rbegin(), chambers.rend());
  auto j = nlohmann::json::parse(chambers_to_json(reversed));
  REQUIRE(j.size() == 4);
  for (const auto& flag : j) {
    REQUIRE(flag.size() == 1);
    CHECK(flag[0]["dim"] == 1);
    CHECK(flag[0]["basis"].size() == 1);
  }
  CHECK(chambers_to_json(reversed) == chambers_to_json(chambers));
}

TEST_CASE("report schemas") {
  Field F(3);
  HermitianSpace space(1, F);
  ClassifiedFlip cf = classify(space, canonical_flip(space, FlipClass::II_LinearAntiIsometry));
  auto j = nlohmann::json::parse(classify_report_to_json(F, {3, 1, cf}));
  CHECK(j["class"] == "II");
  CHECK(j["scalar"] == nlohmann::json::array({0, 1}));
  CHECK(j["similitude"] == -1);
  CHECK(j["basis"].size() == 2);

  Geometry g = build_geometry(space, cf, Variant::Full);
  auto gr = nlohmann::json::parse(geometry_report_to_json(summarize_geometry(space, g)));
  CHECK(gr["variant"] == "full");
  CHECK(gr["counts_by_dim"].size() == 1);
  CHECK(gr["transversal"] == true);

  GroupDescriptor d = predicted_group(space, cf);
  auto gd = nlohmann::json::parse(group_descriptor_to_json(d));
  CHECK(gd["family"] == "GL");
  CHECK(gd["order"] == 8);

  VerificationReport rep = run_verification(1, 3, Suite::Field, 7, {});
  auto vr = nlohmann::json::parse(verification_report_to_json(rep, false));
  CHECK(vr["params"]["q"] == 3);
  CHECK(vr["seed"] == 7);
  CHECK(vr["checks"].size() == rep.checks.size());
  for (const auto& c : vr["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("detail"));
    CHECK(!c.contains("elapsed_ms"));
  }
  auto vt = nlohmann::json::parse(verification_report_to_json(rep, true));
  CHECK(vt["checks"][0].contains("elapsed_ms"));
  CHECK(vr["summary"]["fail"] == 0);
}

TEST_CASE("verification reports are deterministic under a fixed seed") {
  VerificationReport a = run_verification(1, 3, Suite::Transitivity, 99, {});
  VerificationReport b = run_verification(1, 3, Suite::Transitivity, 99, {});
  CHECK(verification_report_to_json(a, false) == verification_report_to_json(b, false));
}
