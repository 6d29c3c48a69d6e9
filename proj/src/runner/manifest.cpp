#include "q5/runner.hpp"

#include <cstdio>
#include <sstream>

#ifndef Q5_VERSION
#define Q5_VERSION "0.0.0"
#endif

namespace q5::runner {

std::string tool_version() { return Q5_VERSION; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

RunManifest RunManifest::for_config(const std::string& command, const ExperimentConfig& c) {
  RunManifest m;
  m.command = command;
  // output locations do not change results
  json doc = config_to_json(c);
  doc.erase("output");
  m.config_hash = hex64(fnv1a64(doc.dump()));
  m.version = tool_version();
  m.seed = c.seed;
  return m;
}

std::string RunManifest::comment_block() const {
  std::ostringstream os;
  os << "# command: " << command << '\n';
  os << "# config_hash: " << config_hash << '\n';
  os << "# version: " << version << '\n';
  os << "# prng: " << prng << '\n';
  os << "# seed: " << seed << '\n';
  for (const auto& s : stages) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", s.seconds);
    os << "# stage " << s.stage << ": " << buf << " s\n";
  }
  return os.str();
}

json RunManifest::to_json() const {
  json st = json::array();
  for (const auto& s : stages) st.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
  return {{"command", command}, {"config_hash", config_hash}, {"version", version},
          {"prng", prng},       {"seed", seed},                {"stages", st}};
}

void Stopwatch::lap(const std::string& stage) {
  const auto now = std::chrono::steady_clock::now();
  m_.stages.push_back({stage, std::chrono::duration<double>(now - t0_).count()});
  t0_ = now;
}

}  // namespace q5::runner
