#pragma once

#include <string>

#include "uniflip/verify.hpp"

namespace uniflip {

/// On-disk representation of a semilinear map: {"q", "n", "tau", "matrix"}
/// with tau "id" | "frobenius" and matrix row-major, entries [a0, a1]
/// meaning a0 + a1*w where w^2 is the canonical non-residue of F_q.
struct FlipFile {
  int64_t q = 0;
  int n = 0;
  Tau tau = Tau::Identity;
  Matrix matrix;
};

std::string flip_file_to_json(const FlipFile& file);
/// Parses and validates (odd prime q, 2n x 2n shape, reduced residues,
/// invertible matrix).  Throws MalformedInput.
FlipFile parse_flip_file(const std::string& text);

struct ClassifyReport {
  int64_t q = 0;
  int n = 0;
  ClassifiedFlip flip;
};

std::string classify_report_to_json(const Field& F, const ClassifyReport& report);

struct GeometryReport {
  int64_t q = 0;
  int n = 0;
  FlipClass cls = FlipClass::I_LinearIsometry;
  Variant variant = Variant::Full;
  std::vector<uint64_t> counts_by_dim;
  std::vector<std::pair<uint64_t, uint64_t>> disc_histogram_by_dim;  // (plus, minus)
  bool transversal = false;
};

GeometryReport summarize_geometry(const HermitianSpace& space, const Geometry& geom);
std::string geometry_report_to_json(const GeometryReport& report);

std::string subspace_to_json(const Subspace& U);
/// Sorted stream of chambers, each an array of subspace serializations.
std::string chambers_to_json(std::vector<Chamber> chambers);
std::string group_descriptor_to_json(const GroupDescriptor& g);
std::string verification_report_to_json(const VerificationReport& rep, bool with_timings);

}  // namespace uniflip
