#include "uniflip/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace uniflip {

namespace {

using nlohmann::json;

json fq2_json(const Fq2& x) { return json::array({x.a0, x.a1}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fq2_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json basis_json(const std::vector<Vec>& basis) {
  json rows = json::array();
  for (const Vec& v : basis) {
    json row = json::array();
    for (const Fq2& x : v) row.push_back(fq2_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string flip_file_to_json(const FlipFile& file) {
  json j;
  j["q"] = file.q;
  j["n"] = file.n;
  j["tau"] = file.tau == Tau::Frobenius ? "frobenius" : "id";
  j["matrix"] = matrix_json(file.matrix);
  return j.dump(2) + "\n";
}

FlipFile parse_flip_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  FlipFile file;
  try {
    file.q = j.at("q").get<int64_t>();
    file.n = j.at("n").get<int>();
    std::string tau = j.at("tau").get<std::string>();
    if (tau == "id")
      file.tau = Tau::Identity;
    else if (tau == "frobenius")
      file.tau = Tau::Frobenius;
    else
      fail(Errc::MalformedInput, "tau must be \"id\" or \"frobenius\"");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(2 * file.n))
      fail(Errc::MalformedInput, "matrix must have 2n rows");
    file.matrix = Matrix(2 * file.n, 2 * file.n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(2 * file.n))
        fail(Errc::MalformedInput, "matrix must have 2n columns");
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        const auto& entry = rows[i][k];
        if (!entry.is_array() || entry.size() != 2)
          fail(Errc::MalformedInput, "entries must be [a0, a1] pairs");
        file.matrix.at(i, k) = {entry[0].get<int32_t>(), entry[1].get<int32_t>()};
      }
    }
  } catch (const json::exception& e) {
    fail(Errc::MalformedInput, std::string("schema error: ") + e.what());
  }
  if (file.n < 1) fail(Errc::MalformedInput, "n must be at least 1");
  std::optional<Field> field;
  try {
    field.emplace(file.q);
  } catch (const Error& e) {
    fail(Errc::MalformedInput, e.what());
  }
  const Field& F = *field;
  for (std::size_t i = 0; i < file.matrix.rows(); ++i)
    for (std::size_t k = 0; k < file.matrix.cols(); ++k) {
      Fq2 x = file.matrix.at(i, k);
      if (x.a0 < 0 || x.a0 >= F.q() || x.a1 < 0 || x.a1 >= F.q())
        fail(Errc::MalformedInput, "entries must be reduced residues mod q");
    }
  if (F.is_zero(det(F, file.matrix)))
    fail(Errc::MalformedInput, "matrix must be invertible");
  return file;
}

std::string classify_report_to_json(const Field& F, const ClassifyReport& report) {
  json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["class"] = flip_class_name(report.flip.cls);
  j["scalar"] = fq2_json(report.flip.scalar);
  j["similitude"] = similitude_factor(HermitianSpace(report.n, F), report.flip.map) == 1 ? 1 : -1;
  j["tau"] = report.flip.map.tau == Tau::Frobenius ? "frobenius" : "id";
  j["matrix"] = matrix_json(report.flip.map.mat);
  j["basis"] = basis_json(report.flip.basis);
  return j.dump(2) + "\n";
}

GeometryReport summarize_geometry(const HermitianSpace& space, const Geometry& geom) {
  GeometryReport rep;
  rep.q = space.field().q();
  rep.n = space.n();
  rep.cls = geom.flip.cls;
  rep.variant = geom.variant;
  for (int k = 1; k <= geom.rank; ++k) {
    uint64_t plus = 0, minus = 0;
    for (const GeometryObject& obj : geom.objects(k)) {
      if (obj.disc == 1) ++plus;
      if (obj.disc == -1) ++minus;
    }
    rep.counts_by_dim.push_back(geom.objects(k).size());
    rep.disc_histogram_by_dim.emplace_back(plus, minus);
  }
  rep.transversal = is_transversal(space, geom);
  return rep;
}

std::string geometry_report_to_json(const GeometryReport& report) {
  json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["class"] = flip_class_name(report.cls);
  j["variant"] = variant_name(report.variant);
  j["counts_by_dim"] = report.counts_by_dim;
  json hist = json::array();
  for (auto [plus, minus] : report.disc_histogram_by_dim)
    hist.push_back(json{{"plus", plus}, {"minus", minus}});
  j["disc_histogram_by_dim"] = std::move(hist);
  j["transversal"] = report.transversal;
  return j.dump(2) + "\n";
}

std::string subspace_to_json(const Subspace& U) {
  json j;
  j["dim"] = U.dim();
  j["basis"] = matrix_json(U.basis());
  return j.dump();
}

std::string chambers_to_json(std::vector<Chamber> chambers) {
  std::sort(chambers.begin(), chambers.end());
  json out = json::array();
  for (const Chamber& C : chambers) {
    json flag = json::array();
    for (const Subspace& U : C.flag)
      flag.push_back(json{{"dim", U.dim()}, {"basis", matrix_json(U.basis())}});
    out.push_back(std::move(flag));
  }
  return out.dump() + "\n";
}

std::string group_descriptor_to_json(const GroupDescriptor& g) {
  json j;
  j["family"] = group_family_name(g.family);
  j["n"] = g.n;
  j["q"] = g.q;
  j["order"] = g.order;
  return j.dump();
}

std::string verification_report_to_json(const VerificationReport& rep, bool with_timings) {
  json j;
  j["params"] = {{"n", rep.n}, {"q", rep.q}};
  j["suite"] = suite_name(rep.suite);
  j["seed"] = rep.seed;
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json jc = {{"name", c.name}, {"status", check_status_name(c.status)}, {"detail", c.detail}};
    if (with_timings) jc["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", rep.count(CheckStatus::Pass)},
                  {"fail", rep.count(CheckStatus::Fail)},
                  {"skipped", rep.count(CheckStatus::Skipped)}};
  return j.dump(2) + "\n";
}

}  // namespace uniflip
