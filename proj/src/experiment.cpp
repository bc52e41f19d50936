#include "halfint/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace halfint {

RunConfig& run_config() {
  static RunConfig cfg;
  return cfg;
}

std::string cache_file_path(const std::string& subdir, const std::string& name) {
  const std::string& root = run_config().cache_dir;
  if (root.empty()) return "";
  fs::path p = fs::path(root) / subdir;
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) return "";
  return (p / name).string();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ExperimentRecord::set_param(const std::string& k, double v) {
  params.push_back({k, fmt_double(v)});
}

void ExperimentRecord::set_param(const std::string& k, long v) {
  params.push_back({k, std::to_string(v)});
}

ExperimentRecord make_record(const std::string& experiment) {
  ExperimentRecord r;
  r.experiment = experiment;
  r.code_version = "halfint-1.0";
  if (!run_config().no_timestamp) {
    auto now = std::chrono::system_clock::now();
    auto t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    r.timestamp = buf;
  }
  return r;
}

std::string ExperimentRecord::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;
  nlohmann::ordered_json jp;
  for (const auto& [k, v] : params) jp[k] = v;
  j["params"] = jp;
  nlohmann::ordered_json jv;
  for (const auto& [k, v] : values) jv[k] = fmt_double(v);
  j["values"] = jv;
  nlohmann::ordered_json jo;
  for (const auto& [k, v] : oracles) jo[k] = fmt_double(v);
  j["oracles"] = jo;
  nlohmann::ordered_json jr;
  for (const auto& [k, v] : residuals) jr[k] = fmt_double(v);
  j["residuals"] = jr;
  if (!timestamp.empty()) j["timestamp"] = timestamp;
  j["code_version"] = code_version;
  j["cache_hits"] = cache_hits;
  return j.dump();
}

std::string ExperimentRecord::csv_header() const {
  std::ostringstream os;
  os << "experiment";
  for (const auto& [k, v] : params) os << "," << k;
  for (const auto& [k, v] : values) os << "," << k;
  for (const auto& [k, v] : oracles) os << ",oracle_" << k;
  for (const auto& [k, v] : residuals) os << ",residual_" << k;
  return os.str();
}

std::string ExperimentRecord::to_csv_row() const {
  std::ostringstream os;
  os << experiment;
  for (const auto& [k, v] : params) os << "," << v;
  for (const auto& [k, v] : values) os << "," << fmt_double(v);
  for (const auto& [k, v] : oracles) os << "," << fmt_double(v);
  for (const auto& [k, v] : residuals) os << "," << fmt_double(v);
  return os.str();
}

void write_records(const std::string& path, const std::vector<ExperimentRecord>& recs) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (path != "-" && !path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("write_records: cannot open " + path);
    os = &file;
  }
  if (run_config().out_format == "csv") {
    if (!recs.empty()) *os << recs.front().csv_header() << "\n";
    for (const auto& r : recs) *os << r.to_csv_row() << "\n";
  } else {
    *os << "[\n";
    for (size_t i = 0; i < recs.size(); ++i)
      *os << recs[i].to_json() << (i + 1 < recs.size() ? ",\n" : "\n");
    *os << "]\n";
  }
}

CacheGcReport cache_gc(const std::string& dir) {
  CacheGcReport rep;
  if (!fs::exists(dir)) throw std::runtime_error("cache_gc: unreadable directory " + dir);
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    ++rep.scanned;
    std::ifstream is(entry.path());
    std::string magic, ver;
    is >> magic >> ver;
    bool ok = is && ver == "v1" &&
              (magic == "QEXP" || magic == "KEXP" || magic == "LVAL");
    if (ok && (magic == "QEXP" || magic == "KEXP")) {
      int tw, level;
      long N;
      is >> tw >> level >> N;
      ok = static_cast<bool>(is) && N >= 0;
    }
    if (!ok) {
      rep.removed_files.push_back(entry.path().string());
      ++rep.removed;
    }
  }
  for (const auto& f : rep.removed_files) fs::remove(f);
  return rep;
}

}  // namespace halfint
