#pragma once

#include "q5/agassi.hpp"
#include "q5/circuit.hpp"
#include "q5/mappings.hpp"
#include "q5/oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace q5::runner {

using json = nlohmann::json;

struct ExperimentConfig {
  // model
  int omega = 4;
  std::string preset = "set-3";
  std::optional<CouplingSet> couplings;  // overrides the preset when present

  // initial state: label A/B, explicit digits, or preparation angles
  std::string state = "A";
  std::vector<int> digits;
  std::vector<double> prep_angles;

  // evolution
  double t_max = 1.0;
  int points = 11;
  std::vector<int> n_trot;
  circuit::Backend backend = circuit::Backend::Native;
  circuit::EntanglerForm form = circuit::EntanglerForm::Improved;
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  int threads = 1;
  double t = 0.4;  // single time for signprob

  // spectrum
  std::vector<int> spectrum_omegas{2, 4, 6, 8};
  std::vector<std::string> spectrum_sets{"set-0", "set-1", "set-2", "set-3", "set-4"};
  std::vector<int> particle_numbers;  // empty: every even N
  int levels = 3;

  std::vector<int> resource_omegas;  // empty: 2, 4, ..., 40
  std::vector<int> bench_omegas{2, 4, 6};
  std::vector<int> bench_n_trot{1, 2, 4, 8};

  // verify
  std::string inject = "none";  // none | sigma14

  // outputs
  std::string output = "-";
  std::string format = "csv";  // csv | json
  std::string emit_circuit;

  ModelInstance model() const;
  CouplingSet resolved_couplings() const;
  StateVector initial_state() const;
  void validate() const;
};

// Built-in defaults as a document; same schema as config files.
json default_config_json();
ExperimentConfig config_from_json(const json& doc);
json config_to_json(const ExperimentConfig& c);

// defaults < file < overrides; overrides are "dotted.key=value".
json merge_config(const json& file_doc, const std::vector<std::string>& overrides);
ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});
json parse_override_value(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t x);

struct StageTiming {
  std::string stage;
  double seconds;
};

struct RunManifest {
  std::string command;
  std::string config_hash;
  std::string version;
  std::string prng = kPrngId;
  std::uint64_t seed = 0;
  std::vector<StageTiming> stages;

  static RunManifest for_config(const std::string& command, const ExperimentConfig& c);
  // "# key: value" lines
  std::string comment_block() const;
  json to_json() const;
};

std::string tool_version();

class Stopwatch {
 public:
  explicit Stopwatch(RunManifest& m) : m_(m), t0_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage);

 private:
  RunManifest& m_;
  std::chrono::steady_clock::time_point t0_;
};

struct Table {
  std::string name;
  std::string csv;  // header line plus data rows
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool expected_fail = false;
  std::string detail;

  // expected failures never fail a run
  bool counts_ok() const { return expected_fail || passed; }
  std::string status() const;
};

struct RunResult {
  RunManifest manifest;
  std::vector<Table> tables;
  std::vector<CheckResult> checks;
  std::vector<std::string> summary;

  bool ok() const;
};

// Manifest comments, then every table; tables after the first are preceded by "# table: name".
std::string render_csv(const RunResult& r);
json render_json(const RunResult& r);
std::string render(const RunResult& r, const std::string& format);
// Lines that are not comments.
std::vector<std::string> data_rows(const std::string& rendered);
json csv_to_json(const std::string& csv);

std::string fmt12(double x);

// Runs jobs 0..n-1 on up to `threads` workers; results keep job order.
void run_jobs(std::size_t n, int threads, const std::function<void(std::size_t)>& job);

RunResult cmd_spectrum(const ExperimentConfig& c);
RunResult cmd_evolve(const ExperimentConfig& c);
RunResult cmd_resources(const ExperimentConfig& c);
RunResult cmd_signprob(const ExperimentConfig& c);
RunResult cmd_verify(const ExperimentConfig& c);
RunResult cmd_bench(const ExperimentConfig& c);

RunResult run_command(const std::string& name, const ExperimentConfig& c);
const std::vector<std::string>& command_names();

// Individual verify checks, also used by tests.
std::vector<CheckResult> algebra_checks();
std::vector<CheckResult> decomposition_checks(std::uint64_t seed, int alphas_per_combo = 20);
std::vector<CheckResult> mapping_checks(const PairingSigns& qu5it_signs = {});
std::vector<CheckResult> trotter_order_checks();

// Least-squares slope of log(err) against log(n).
double loglog_slope(const std::vector<int>& n, const std::vector<double>& err);

}  // namespace q5::runner
