#include "crownkernel/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crownkernel {

std::uint64_t fnv1a(const std::string &bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string input_hash(const WeightedGraph &g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(render_graph(g))));
  return buf;
}

std::string verdict_name(Verdict v) {
  switch (v) {
  case Verdict::DecidedNo:
    return "decided-no";
  case Verdict::DecidedYes:
    return "decided-yes";
  case Verdict::Reduced:
    return "reduced";
  case Verdict::AlreadySmall:
    return "already-small";
  }
  return "unknown";
}

std::string render_report(const RunReport &r) {
  nlohmann::json j; // std::map-backed: keys come out sorted
  j["problem"] = r.problem;
  j["input_hash"] = r.input_hash_hex;
  j["parameters"] = r.parameters;
  j["verdict"] = r.verdict;
  j["kernel_vertices"] = r.kernel_vertices;
  j["kernel_weight"] = r.kernel_weight;
  nlohmann::json cert = nlohmann::json::array();
  for (const auto &rec : r.certificate) {
    nlohmann::json e;
    e["head"] = rec.head;
    e["crown"] = rec.crown;
    e["decrement"] = rec.decrement;
    cert.push_back(e);
  }
  j["certificate"] = cert;
  if (r.lambda_lb)
    j["lambda_lb"] = *r.lambda_lb;
  else
    j["lambda_lb"] = nullptr;
  j["timings_ms"] = r.timings_ms;
  j["seed"] = r.seed;
  j["weight_warning"] = r.weight_warning;
  return j.dump(2) + "\n";
}

RunReport parse_report(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunReport r;
  r.problem = j.at("problem").get<std::string>();
  r.input_hash_hex = j.at("input_hash").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, long long>>();
  r.verdict = j.at("verdict").get<std::string>();
  r.kernel_vertices = j.at("kernel_vertices").get<long long>();
  r.kernel_weight = j.at("kernel_weight").get<long long>();
  for (const auto &e : j.at("certificate")) {
    ReductionRecord rec;
    rec.head = e.at("head").get<VertexSet>();
    rec.crown = e.at("crown").get<VertexSet>();
    rec.decrement = e.at("decrement").get<Weight>();
    r.certificate.push_back(rec);
  }
  if (!j.at("lambda_lb").is_null()) r.lambda_lb = j.at("lambda_lb").get<Weight>();
  r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.weight_warning = j.at("weight_warning").get<bool>();
  return r;
}

WeightedGraph replay_certificate(const WeightedGraph &input,
                                 const std::vector<ReductionRecord> &certificate) {
  WeightedGraph g = input;
  for (const auto &rec : certificate) g.erase_vertices(set_union(rec.head, rec.crown));
  return g;
}

void write_file_atomic(const std::string &path, const std::string &contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << contents;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp);
}

} // namespace crownkernel
