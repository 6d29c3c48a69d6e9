#include "q5/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

namespace q5::runner {

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string CheckResult::status() const {
  if (expected_fail) return passed ? "XPASS" : "XFAIL";
  return passed ? "PASS" : "FAIL";
}

bool RunResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.counts_ok(); });
}

namespace {

std::string checks_csv(const std::vector<CheckResult>& checks) {
  std::string s = "check,status,measured,tolerance,detail\n";
  for (const auto& c : checks)
    s += c.name + ',' + c.status() + ',' + fmt12(c.measured) + ',' + fmt12(c.tolerance) + ',' + c.detail + '\n';
  return s;
}

}  // namespace

std::string render_csv(const RunResult& r) {
  std::string out = r.manifest.comment_block();
  for (const auto& s : r.summary) out += "# " + s + '\n';
  bool first = true;
  auto emit = [&](const std::string& name, const std::string& csv) {
    if (!first) out += "# table: " + name + '\n';
    out += csv;
    first = false;
  };
  for (const auto& t : r.tables) emit(t.name, t.csv);
  if (!r.checks.empty()) emit("checks", checks_csv(r.checks));
  return out;
}

json csv_to_json(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  std::vector<std::string> header;
  json rows = json::array();
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::stringstream ss(l);
    std::string x;
    while (std::getline(ss, x, ',')) f.push_back(x);
    if (!l.empty() && l.back() == ',') f.emplace_back();
    return f;
  };
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto f = split(line);
    json row = json::object();
    for (std::size_t k = 0; k < header.size(); ++k) {
      const std::string v = k < f.size() ? f[k] : "";
      char* end = nullptr;
      const double d = std::strtod(v.c_str(), &end);
      if (!v.empty() && end == v.c_str() + v.size()) row[header[k]] = d;
      else row[header[k]] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json render_json(const RunResult& r) {
  json doc;
  doc["manifest"] = r.manifest.to_json();
  doc["summary"] = r.summary;
  json tables = json::object();
  for (const auto& t : r.tables) tables[t.name] = csv_to_json(t.csv);
  doc["tables"] = tables;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.status()},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  doc["checks"] = checks;
  doc["ok"] = r.ok();
  return doc;
}

std::string render(const RunResult& r, const std::string& format) {
  if (format == "json") return render_json(r).dump(2) + '\n';
  if (format == "csv") return render_csv(r);
  throw std::invalid_argument("unknown output format '" + format + "'");
}

std::vector<std::string> data_rows(const std::string& rendered) {
  std::vector<std::string> out;
  std::istringstream is(rendered);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

void run_jobs(std::size_t n, int threads, const std::function<void(std::size_t)>& job) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) job(k);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < n; k += workers) {
        try {
          job(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  // first failure by job order
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace q5::runner
