#include "q5/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace q5::runner {
namespace {

std::vector<int> all_particle_numbers(int omega) {
  std::vector<int> out;
  for (int n = 0; n <= 2 * omega; n += 2) out.push_back(n);
  return out;
}

std::vector<int> default_resource_omegas() {
  std::vector<int> out;
  for (int o = 2; o <= 40; o += 2) out.push_back(o);
  return out;
}

circuit::TrotterOptions trotter_options(const ExperimentConfig& c) {
  circuit::TrotterOptions t;
  t.backend = c.backend;
  t.form = c.form;
  return t;
}

std::string join(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + cells[k];
  return s + '\n';
}

}  // namespace

RunResult cmd_spectrum(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("spectrum", c);
  Stopwatch sw(r.manifest);

  struct Job {
    int omega;
    std::string set;
    std::vector<SpectrumRow> rows;
  };
  std::vector<Job> jobs;
  for (int omega : c.spectrum_omegas)
    for (const auto& s : c.spectrum_sets) jobs.push_back({omega, s, {}});
  run_jobs(jobs.size(), c.threads, [&](std::size_t k) {
    Job& j = jobs[k];
    const ModelInstance m{j.omega, preset(j.set)};
    const auto ns = c.particle_numbers.empty() ? all_particle_numbers(j.omega) : c.particle_numbers;
    for (int n : ns) {
      const SpectrumResult sr = spectrum(m, n, c.levels);
      for (std::size_t l = 0; l < sr.densities.size(); ++l)
        j.rows.push_back({j.omega, n, j.set, static_cast<int>(l), sr.densities[l]});
    }
  });
  sw.lap("compute");

  std::vector<SpectrumRow> rows;
  for (auto& j : jobs) rows.insert(rows.end(), j.rows.begin(), j.rows.end());
  std::stable_sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    if (a.omega != b.omega) return a.omega < b.omega;
    if (a.particle_number != b.particle_number) return a.particle_number < b.particle_number;
    if (a.set != b.set) return a.set < b.set;
    return a.level < b.level;
  });
  std::ostringstream os;
  write_spectrum_csv(os, rows);
  r.tables.push_back({"spectrum", os.str()});
  sw.lap("emit");
  return r;
}

RunResult cmd_evolve(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("evolve", c);
  Stopwatch sw(r.manifest);
  const ModelInstance m = c.model();
  const StateVector psi0 = c.initial_state();
  const auto grid = oracle::uniform_grid(c.t_max, c.points);
  sw.lap("setup");

  const std::size_t n_jobs = 1 + c.n_trot.size();
  std::vector<std::vector<oracle::SeriesRow>> out(n_jobs);
  const int engine_threads = n_jobs == 1 ? c.threads : 1;
  try {
    run_jobs(n_jobs, c.threads, [&](std::size_t k) {
      oracle::SeriesOptions so;
      so.shots = c.shots;
      so.seed = c.seed;
      so.threads = engine_threads;
      so.trotter = trotter_options(c);
      if (k > 0) {
        so.kind = oracle::EvolverKind::Trotter;
        so.n_trot = c.n_trot[k - 1];
      }
      out[k] = oracle::observable_series(m, psi0, grid, so);
    });
  } catch (const oracle::ResourceError& e) {
    throw std::runtime_error(std::string(e.what()) +
                             "; reduce model.omega, use fewer grid points, or start from a single-sector state");
  }
  sw.lap("compute");

  std::vector<oracle::SeriesRow> all;
  for (const auto& v : out) all.insert(all.end(), v.begin(), v.end());
  std::ostringstream os;
  oracle::write_series_csv(os, all);
  r.tables.push_back({"series", os.str()});

  if (!c.n_trot.empty()) {
    std::string t = "n_trot,sz_error_at_tmax,mean_abs_sz_error,survival_error_at_tmax\n";
    const auto& ex = out[0];
    for (std::size_t k = 1; k < n_jobs; ++k) {
      double mean = 0.0;
      for (std::size_t i = 0; i < ex.size(); ++i) mean += std::abs(out[k][i].sz - ex[i].sz);
      mean /= static_cast<double>(ex.size());
      t += join({std::to_string(c.n_trot[k - 1]), fmt12(std::abs(out[k].back().sz - ex.back().sz)), fmt12(mean),
                 fmt12(std::abs(out[k].back().survival - ex.back().survival))});
    }
    r.tables.push_back({"trotter_error", t});
  }
  double smin = 1.0;
  for (const auto& row : out[0]) smin = std::min(smin, row.survival);
  r.summary.push_back("exact survival minimum on grid: " + fmt12(smin));

  if (!c.emit_circuit.empty()) {
    const int n = c.n_trot.empty() ? 1 : c.n_trot.front();
    circuit::CircuitIR circ = circuit::trotter_circuit(m, c.t_max, n, trotter_options(c));
    circ.metadata["config_hash"] = r.manifest.config_hash;
    std::ofstream f(c.emit_circuit);
    if (!f) throw std::runtime_error("cannot write circuit to '" + c.emit_circuit + "'");
    f << circuit::to_text(circ);
    r.summary.push_back("circuit: " + c.emit_circuit + " (" + std::to_string(circ.gates.size()) + " gates, n_trot " +
                        std::to_string(n) + ")");
  }
  sw.lap("emit");
  return r;
}

RunResult cmd_resources(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("resources", c);
  Stopwatch sw(r.manifest);
  const auto omegas = c.resource_omegas.empty() ? default_resource_omegas() : c.resource_omegas;
  std::ostringstream os;
  mappings::write_comparison_csv(os, mappings::comparison_table(omegas));
  r.tables.push_back({"comparison", os.str()});

  std::string q = "omega,backend,gx,gy,phase,cx,cy,gxx,gyy,entangling\n";
  std::string b = "omega,mapping,h,rz,cnot\n";
  for (int o : omegas) {
    for (auto be : {circuit::Backend::Controlled, circuit::Backend::Native}) {
      const auto k = circuit::count_resources(o, be, c.form);
      const long long ent = be == circuit::Backend::Native ? k.native_entangling() : k.controlled_entangling();
      q += join({std::to_string(o), circuit::to_string(be), std::to_string(k.gx), std::to_string(k.gy),
                 std::to_string(k.phase), std::to_string(k.cx), std::to_string(k.cy), std::to_string(k.gxx),
                 std::to_string(k.gyy), std::to_string(ent)});
    }
    for (const auto& [name, k] : {std::pair{"paJW", mappings::count_pajw(o)}, std::pair{"StS", mappings::count_sts(o)}})
      b += join({std::to_string(o), name, std::to_string(k.h), std::to_string(k.rz), std::to_string(k.cnot)});
  }
  r.tables.push_back({"qu5it_counts", q});
  r.tables.push_back({"qubit_counts", b});
  sw.lap("compute");
  return r;
}

RunResult cmd_signprob(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("signprob", c);
  Stopwatch sw(r.manifest);
  const ModelInstance m = c.model();
  const auto st = oracle::sign_problem(m, c.initial_state(), c.t);
  sw.lap("compute");
  std::string d = "kind,index,value\n";
  for (std::size_t k = 0; k < st.probabilities.size(); ++k)
    d += join({"probability", std::to_string(k), fmt12(st.probabilities[k])});
  for (std::size_t k = 0; k < st.spin_densities.size(); ++k)
    d += join({"spin_density", std::to_string(k), fmt12(st.spin_densities[k])});
  r.tables.push_back({"densities", d});
  r.tables.push_back({"stats", "t,mean,stddev,sz,n_probabilities,n_spin_densities\n" +
                                   join({fmt12(c.t), fmt12(st.mean), fmt12(st.stddev), fmt12(st.sz),
                                         std::to_string(st.probabilities.size()),
                                         std::to_string(st.spin_densities.size())})});
  r.summary.push_back("mean " + fmt12(st.mean) + ", stddev " + fmt12(st.stddev) + ", sz " + fmt12(st.sz));
  sw.lap("emit");
  return r;
}

RunResult cmd_bench(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("bench", c);
  Stopwatch sw(r.manifest);
  std::string t = "omega,evolver,n_trot,gates,seconds\n";
  for (int o : c.bench_omegas) {
    const ModelInstance m{o, c.resolved_couplings()};
    const char label = (c.state == "B" && o % 4 == 0) ? 'B' : 'A';
    const StateVector psi0 = q5::initial_state(o, label);
    auto t0 = std::chrono::steady_clock::now();
    (void)oracle::evolve_exact(m, psi0, c.t_max);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t += join({std::to_string(o), "exact", "0", "0", fmt12(secs)});
    ApplyOptions ao;
    ao.threads = c.threads;
    for (int n : c.bench_n_trot) {
      const auto circ = circuit::trotter_circuit(m, c.t_max, n, trotter_options(c));
      t0 = std::chrono::steady_clock::now();
      (void)circuit::execute(circ, psi0, ao);
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      t += join({std::to_string(o), "trotter", std::to_string(n), std::to_string(circ.gates.size()), fmt12(secs)});
    }
  }
  r.tables.push_back({"timing", t});
  sw.lap("compute");
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum", "evolve", "resources", "signprob", "verify", "bench"};
  return names;
}

RunResult run_command(const std::string& name, const ExperimentConfig& c) {
  if (name == "spectrum") return cmd_spectrum(c);
  if (name == "evolve") return cmd_evolve(c);
  if (name == "resources") return cmd_resources(c);
  if (name == "signprob") return cmd_signprob(c);
  if (name == "verify") return cmd_verify(c);
  if (name == "bench") return cmd_bench(c);
  throw std::invalid_argument("unknown command '" + name + "'");
}

}  // namespace q5::runner
