#ifndef HALFINT_EXPERIMENT_HPP
#define HALFINT_EXPERIMENT_HPP

#include <map>
#include <string>
#include <vector>

namespace halfint {

// Run-wide configuration. Precedence (resolved by the CLI): flags > config
// file > defaults.
struct RunConfig {
  double precision = 1e-8;
  long truncation_N = 512;
  int jobs = 1;
  std::string cache_dir;  // empty = caching off; HALFINT_CACHE env default
  std::string out_format = "json";  // json | csv
  unsigned long seed = 20250810;    // spot-check selection only
  bool quick = false;
  bool no_timestamp = false;
};

RunConfig& run_config();

// Path inside the cache directory (created on demand), or "" when caching
// is disabled.
std::string cache_file_path(const std::string& subdir, const std::string& name);

// One serializable result row. Floating values are written with 17
// significant digits so round-trips are lossless.
struct ExperimentRecord {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, double>> oracles;
  std::vector<std::pair<std::string, double>> residuals;
  std::string timestamp;  // empty when --no-timestamp
  std::string code_version;
  long cache_hits = 0;

  void set_param(const std::string& k, const std::string& v) { params.push_back({k, v}); }
  void set_param(const std::string& k, double v);
  void set_param(const std::string& k, long v);
  void add_value(const std::string& k, double v) { values.push_back({k, v}); }
  void add_oracle(const std::string& k, double v) { oracles.push_back({k, v}); }
  void add_residual(const std::string& k, double v) { residuals.push_back({k, v}); }

  std::string to_json() const;
  std::string csv_header() const;
  std::string to_csv_row() const;
};

ExperimentRecord make_record(const std::string& experiment);

// Writes records to `path` in the configured format ("-" = stdout).
void write_records(const std::string& path, const std::vector<ExperimentRecord>& recs);

// Formats a double with 17 significant digits.
std::string fmt_double(double v);

struct CacheGcReport {
  long scanned = 0;
  long removed = 0;
  std::vector<std::string> removed_files;
};

// Validates headers of all cache files under dir, removing corrupt entries.
CacheGcReport cache_gc(const std::string& dir);

}  // namespace halfint

#endif
