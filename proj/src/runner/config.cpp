#include "q5/runner.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace q5::runner {
namespace {

template <typename T>
std::vector<T> as_list(const json& j) {
  if (j.is_array()) return j.get<std::vector<T>>();
  return {j.get<T>()};
}

// every key of `doc` must exist in `schema`, recursively through objects
void check_keys(const json& doc, const json& schema, const std::string& where) {
  if (!doc.is_object()) throw std::invalid_argument("config: '" + where + "' must be an object");
  for (const auto& [k, v] : doc.items()) {
    const std::string path = where.empty() ? k : where + "." + k;
    if (!schema.contains(k)) throw std::invalid_argument("config: unknown key '" + path + "'");
    const json& s = schema.at(k);
    if (s.is_object() && !v.is_null()) check_keys(v, s, path);
  }
}

json coupling_schema() { return {{"epsilon", 1.0}, {"v", 0.0}, {"g", 0.0}}; }

circuit::EntanglerForm parse_form(const std::string& s) {
  if (s == "improved") return circuit::EntanglerForm::Improved;
  if (s == "original") return circuit::EntanglerForm::Original;
  throw std::domain_error("unknown entangler form '" + s + "' (expected improved or original)");
}

}  // namespace

json default_config_json() {
  return json{
      {"model", {{"omega", 4}, {"preset", "set-3"}, {"couplings", nullptr}}},
      {"state", {{"label", "A"}, {"digits", json::array()}, {"prep_angles", json::array()}}},
      {"evolution",
       {{"t_max", 1.0},
        {"points", 11},
        {"n_trot", json::array()},
        {"backend", "native"},
        {"form", "improved"},
        {"shots", 0},
        {"seed", 1},
        {"threads", 1},
        {"t", 0.4}}},
      {"spectrum",
       {{"omegas", {2, 4, 6, 8}},
        {"sets", {"set-0", "set-1", "set-2", "set-3", "set-4"}},
        {"particle_numbers", json::array()},
        {"levels", 3}}},
      {"resources", {{"omegas", json::array()}}},
      {"bench", {{"omegas", {2, 4, 6}}, {"n_trot", {1, 2, 4, 8}}}},
      {"verify", {{"inject", "none"}}},
      {"output", {{"path", "-"}, {"format", "csv"}, {"emit_circuit", ""}}},
  };
}

ExperimentConfig config_from_json(const json& in) {
  json schema = default_config_json();
  schema["model"]["couplings"] = coupling_schema();
  check_keys(in, schema, "");
  json doc = default_config_json();
  doc.merge_patch(in);

  ExperimentConfig c;
  try {
    const json& m = doc.at("model");
    c.omega = m.at("omega").get<int>();
    c.preset = m.at("preset").get<std::string>();
    if (m.contains("couplings") && !m.at("couplings").is_null()) {
      json cj = coupling_schema();
      cj.merge_patch(m.at("couplings"));
      c.couplings = CouplingSet{cj.at("epsilon").get<double>(), cj.at("v").get<double>(), cj.at("g").get<double>()};
    }
    const json& s = doc.at("state");
    c.state = s.at("label").get<std::string>();
    c.digits = as_list<int>(s.at("digits"));
    c.prep_angles = as_list<double>(s.at("prep_angles"));
    const json& e = doc.at("evolution");
    c.t_max = e.at("t_max").get<double>();
    c.points = e.at("points").get<int>();
    c.n_trot = as_list<int>(e.at("n_trot"));
    c.backend = circuit::parse_backend(e.at("backend").get<std::string>());
    c.form = parse_form(e.at("form").get<std::string>());
    c.shots = e.at("shots").get<std::uint64_t>();
    c.seed = e.at("seed").get<std::uint64_t>();
    c.threads = e.at("threads").get<int>();
    c.t = e.at("t").get<double>();
    const json& sp = doc.at("spectrum");
    c.spectrum_omegas = as_list<int>(sp.at("omegas"));
    c.spectrum_sets = as_list<std::string>(sp.at("sets"));
    c.particle_numbers = as_list<int>(sp.at("particle_numbers"));
    c.levels = sp.at("levels").get<int>();
    c.resource_omegas = as_list<int>(doc.at("resources").at("omegas"));
    c.bench_omegas = as_list<int>(doc.at("bench").at("omegas"));
    c.bench_n_trot = as_list<int>(doc.at("bench").at("n_trot"));
    c.inject = doc.at("verify").at("inject").get<std::string>();
    const json& o = doc.at("output");
    c.output = o.at("path").get<std::string>();
    c.format = o.at("format").get<std::string>();
    c.emit_circuit = o.at("emit_circuit").get<std::string>();
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("config: ") + ex.what());
  }
  c.validate();
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json doc = default_config_json();
  doc["model"]["omega"] = c.omega;
  doc["model"]["preset"] = c.preset;
  if (c.couplings)
    doc["model"]["couplings"] = {{"epsilon", c.couplings->epsilon}, {"v", c.couplings->v}, {"g", c.couplings->g}};
  doc["state"] = {{"label", c.state}, {"digits", c.digits}, {"prep_angles", c.prep_angles}};
  doc["evolution"] = {{"t_max", c.t_max},
                      {"points", c.points},
                      {"n_trot", c.n_trot},
                      {"backend", circuit::to_string(c.backend)},
                      {"form", circuit::to_string(c.form)},
                      {"shots", c.shots},
                      {"seed", c.seed},
                      {"threads", c.threads},
                      {"t", c.t}};
  doc["spectrum"] = {{"omegas", c.spectrum_omegas},
                     {"sets", c.spectrum_sets},
                     {"particle_numbers", c.particle_numbers},
                     {"levels", c.levels}};
  doc["resources"]["omegas"] = c.resource_omegas;
  doc["bench"] = {{"omegas", c.bench_omegas}, {"n_trot", c.bench_n_trot}};
  doc["verify"]["inject"] = c.inject;
  doc["output"] = {{"path", c.output}, {"format", c.format}, {"emit_circuit", c.emit_circuit}};
  return doc;
}

json parse_override_value(const std::string& text) {
  auto scalar = [](const std::string& s) -> json {
    if (s.empty()) return s;
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || j.is_object()) return s;
    return j;
  };
  if (!text.empty() && text.front() == '[') {
    json j = json::parse(text, nullptr, false);
    if (!j.is_discarded()) return j;
  }
  if (text.find(',') == std::string::npos) return scalar(text);
  json arr = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(scalar(item));
  return arr;
}

json merge_config(const json& file_doc, const std::vector<std::string>& overrides) {
  json doc = default_config_json();
  if (!file_doc.is_null()) {
    json schema = default_config_json();
    schema["model"]["couplings"] = coupling_schema();
    check_keys(file_doc, schema, "");
    doc.merge_patch(file_doc);
  }
  // merge_patch drops null members
  if (!doc["model"].contains("couplings")) doc["model"]["couplings"] = nullptr;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("override '" + o + "' is not key=value");
    const std::string key = o.substr(0, eq);
    std::string ptr = "/" + key;
    for (auto& ch : ptr)
      if (ch == '.') ch = '/';
    const json::json_pointer jp(ptr);
    // a null object along the path is created on demand
    json::json_pointer parent = jp.parent_pointer();
    if (doc.contains(parent) && doc[parent].is_null()) doc[parent] = json::object();
    if (!doc.contains(parent) || !doc[parent].is_object())
      throw std::invalid_argument("override: unknown key '" + key + "'");
    doc[jp] = parse_override_value(o.substr(eq + 1));
  }
  // couplings given field by field start from the preset values
  if (doc["model"]["couplings"].is_object()) {
    const CouplingSet base = preset(doc["model"]["preset"].get<std::string>());
    json cj = {{"epsilon", base.epsilon}, {"v", base.v}, {"g", base.g}};
    cj.merge_patch(doc["model"]["couplings"]);
    doc["model"]["couplings"] = cj;
  }
  return doc;
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  json file_doc;
  if (!path.empty()) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config file '" + path + "'");
    try {
      file_doc = json::parse(is, nullptr, true, true);
    } catch (const json::parse_error& ex) {
      throw std::invalid_argument("config file '" + path + "': " + ex.what());
    }
  }
  return config_from_json(merge_config(file_doc, overrides));
}

CouplingSet ExperimentConfig::resolved_couplings() const { return couplings ? *couplings : q5::preset(preset); }

ModelInstance ExperimentConfig::model() const { return {omega, resolved_couplings()}; }

StateVector ExperimentConfig::initial_state() const {
  const int n = omega / 2;
  if (!prep_angles.empty()) {
    if (n == 1 && prep_angles.size() == 4) {
      const std::array<double, 4> a{prep_angles[0], prep_angles[1], prep_angles[2], prep_angles[3]};
      return circuit::execute(circuit::prep_single(a), init_basis_state(1, {1}));
    }
    if (n == 2 && prep_angles.size() == 24) return circuit::execute(circuit::prep_two(prep_angles), StateVector(2));
    throw std::invalid_argument("prep_angles: need 4 angles for omega=2 or 24 for omega=4");
  }
  if (!digits.empty()) {
    if (static_cast<int>(digits.size()) != n)
      throw std::invalid_argument("state.digits: need " + std::to_string(n) + " digits for omega=" + std::to_string(omega));
    return init_basis_state(n, digits);
  }
  if (state.size() != 1) throw std::invalid_argument("state.label must be A or B");
  return q5::initial_state(omega, state[0]);
}

void ExperimentConfig::validate() const {
  ModelInstance{omega, resolved_couplings()}.validate();
  if (!couplings && !is_preset_name(preset)) throw std::invalid_argument("unknown preset '" + preset + "'");
  for (const auto& s : spectrum_sets)
    if (!is_preset_name(s)) throw std::invalid_argument("spectrum.sets: unknown preset '" + s + "'");
  if (points < 1) throw std::invalid_argument("evolution.points must be >= 1");
  if (t_max < 0) throw std::invalid_argument("evolution.t_max must be >= 0");
  for (int n : n_trot)
    if (n < 1) throw std::invalid_argument("evolution.n_trot entries must be >= 1");
  for (int n : bench_n_trot)
    if (n < 1) throw std::invalid_argument("bench.n_trot entries must be >= 1");
  if (threads < 1) throw std::invalid_argument("evolution.threads must be >= 1");
  if (levels < 1) throw std::invalid_argument("spectrum.levels must be >= 1");
  if (format != "csv" && format != "json") throw std::invalid_argument("output.format must be csv or json");
  if (inject != "none" && inject != "sigma14") throw std::invalid_argument("verify.inject must be none or sigma14");
  for (const auto& list : {spectrum_omegas, resource_omegas, bench_omegas})
    for (int o : list)
      if (o < 2 || o % 2) throw std::invalid_argument("omega values must be even and >= 2");
}

}  // namespace q5::runner
