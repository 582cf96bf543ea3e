#pragma once

#include "crownkernel/graph.hpp"
#include "crownkernel/kernels.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace crownkernel {

// 64-bit FNV-1a over the canonical graph rendering.
std::uint64_t fnv1a(const std::string &bytes);
std::string input_hash(const WeightedGraph &g);

struct RunReport {
  std::string problem;
  std::string input_hash_hex;
  std::map<std::string, long long> parameters;
  std::string verdict;
  long long kernel_vertices = 0;
  long long kernel_weight = 0;
  std::vector<ReductionRecord> certificate;
  std::optional<Weight> lambda_lb;
  std::map<std::string, double> timings_ms;
  std::uint64_t seed = 0;
  bool weight_warning = false;
};

std::string verdict_name(Verdict v);

// Canonical serialization: JSON with lexicographically sorted keys.
std::string render_report(const RunReport &r);
RunReport parse_report(const std::string &text);

// Re-applies the certificate to the input; the result must match the emitted
// kernel byte for byte.
WeightedGraph replay_certificate(const WeightedGraph &input,
                                 const std::vector<ReductionRecord> &certificate);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string &path, const std::string &contents);

} // namespace crownkernel
