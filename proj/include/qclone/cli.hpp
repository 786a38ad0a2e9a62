// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command implementations behind the qclone executable. Each command writes
// its report to `out` (or to config.out_path) and diagnostics to `err`, and
// returns the process exit code.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qclone/cazac.hpp"
#include "qclone/circuit.hpp"
#include "qclone/identities.hpp"
#include "qclone/protocol.hpp"
#include "qclone/random.hpp"
#include "qclone/serialize.hpp"

namespace qclone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kConfigError = 2,
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& message) : std::invalid_argument(message) {}
};

struct IntRange {
  int lo = 2;
  int hi = 2;
};

struct RunConfig {
  std::string command;
  int d = 3;
  int n = 2;
  int target_party = 1;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  std::string format;  // json | csv; empty picks the command default
  std::string out_path;
  std::optional<IntRange> d_range;
  std::vector<int> n_set{2, 5, 10};
  bool circuit = false;
  bool timings = false;
  std::string which = "udec";  // circuit-dump: vpz | vpx | uenc | udec
  SizeCaps caps{};

  void validate() const {
    if (d < 2) throw ConfigError("--d must be >= 2");
    if (n < 1) throw ConfigError("--n must be >= 1");
    if (!(tolerance > 0.0)) throw ConfigError("--tol must be > 0");
    if (d_range && (d_range->lo < 2 || d_range->hi < d_range->lo)) {
      throw ConfigError("--d-range must be lo..hi with 2 <= lo <= hi");
    }
    for (int v : n_set) {
      if (v < 1) throw ConfigError("--n-set entries must be >= 1");
    }
    if (!format.empty() && format != "json" && format != "csv") {
      throw ConfigError("--format must be json or csv");
    }
  }
};

inline int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

/// "lo..hi" or a single integer.
inline IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range")};
}

/// Comma-separated integers.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), "list entry"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

namespace detail {

// Writes `payload` to config.out_path, or to `out` when no path was given.
inline int emit(const RunConfig& config, const std::string& payload, std::ostream& out,
                std::ostream& err) {
  if (config.out_path.empty()) {
    out << payload;
    return kSuccess;
  }
  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << config.out_path << "' for writing\n";
    return kConfigError;
  }
  file << payload;
  file.flush();
  if (!file) {
    err << "error: write to '" << config.out_path << "' failed\n";
    return kConfigError;
  }
  return kSuccess;
}

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

inline int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const IntRange range = config.d_range.value_or(IntRange{2, 7});
  VerifyOptions options;
  options.tolerance = config.tolerance;
  options.seed = config.seed;
  options.caps = config.caps;
  int max_parties = 0;
  for (int p : options.party_counts) max_parties = std::max(max_parties, p);
  for (int d = range.lo; d <= range.hi; ++d) {
    ProtocolParams(d, max_parties, 1, config.caps);
  }

  std::vector<IdentityReport> reports;
  bool passed = true;
  for (int d = range.lo; d <= range.hi; ++d) {
    reports.push_back(verify_identities(d, options));
    passed = passed && reports.back().all_passed();
  }

  std::string payload;
  if (config.format == "csv") {
    std::ostringstream os;
    os << "d,check,max_deviation,cases,passed\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        os << r.d << ',' << c.name << ',' << detail::fmt_double(c.max_deviation) << ','
           << c.cases << ',' << (c.passed ? 1 : 0) << '\n';
      }
    }
    payload = os.str();
  } else {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = "verify";
    j["tolerance"] = config.tolerance;
    j["seed"] = config.seed;
    j["d_range"] = {range.lo, range.hi};
    j["passed"] = passed;
    Json per_d = Json::array();
    for (const auto& r : reports) per_d.push_back(to_json(r));
    j["reports"] = per_d;
    payload = j.dump(2) + "\n";
  }
  if (int rc = detail::emit(config, payload, out, err); rc != kSuccess) return rc;
  if (!passed) {
    err << "verification failed at tolerance " << config.tolerance << '\n';
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        if (!c.passed) {
          err << "  d=" << r.d << ' ' << c.name << " max_deviation=" << c.max_deviation << '\n';
        }
      }
    }
    return kVerificationFailure;
  }
  return kSuccess;
}

inline int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == "csv") throw ConfigError("run only emits json");
  const ProtocolParams params(config.d, config.n, config.target_party, config.caps);
  params.state_dim();
  const auto psi = random_state(config.d, config.seed);
  RunOptions options;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  options.path = config.circuit ? DecryptionPath::Circuit : DecryptionPath::Dense;
  const auto report = run_protocol(params, psi, options);
  Json j = to_json(report, config.timings);
  if (int rc = detail::emit(config, j.dump(2) + "\n", out, err); rc != kSuccess) return rc;
  if (!report.passed()) {
    err << "protocol check failed: see marginals / fidelities in the report\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

inline int cmd_counts(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const IntRange range = config.d_range.value_or(IntRange{2, 10});
  const auto rows = counts_table(range.lo, range.hi, config.n_set);
  std::string payload;
  if (config.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"d", r.d}, {"n", r.n}, {"NE1Q", r.ne1q}, {"NE2Q", r.ne2q},
                     {"ND1Q", r.nd1q}, {"ND2Q", r.nd2q}});
    }
    payload = arr.dump(2) + "\n";
  } else {
    std::ostringstream os;
    write_counts_csv(os, rows);
    payload = os.str();
  }
  return detail::emit(config, payload, out, err);
}

/// A single --d writes m,n,magnitude rows; a --d-range prefixes each row with d.
inline int cmd_autocorr(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream os;
  if (config.format == "json") {
    const IntRange range = config.d_range.value_or(IntRange{config.d, config.d});
    Json arr = Json::array();
    for (int d = range.lo; d <= range.hi; ++d) {
      const auto grid = autocorr2d(d);
      for (Eigen::Index m = 0; m < grid.rows(); ++m) {
        for (Eigen::Index n = 0; n < grid.cols(); ++n) {
          arr.push_back({{"d", d}, {"m", m}, {"n", n}, {"magnitude", grid(m, n)}});
        }
      }
    }
    os << arr.dump(2) << '\n';
  } else if (!config.d_range) {
    write_autocorr_csv(os, autocorr2d(config.d));
  } else {
    os << "d,m,n,magnitude\n";
    for (int d = config.d_range->lo; d <= config.d_range->hi; ++d) {
      const auto grid = autocorr2d(d);
      for (Eigen::Index m = 0; m < grid.rows(); ++m) {
        for (Eigen::Index n = 0; n < grid.cols(); ++n) {
          os << d << ',' << m << ',' << n << ',' << detail::fmt_double(grid(m, n)) << '\n';
        }
      }
    }
  }
  return detail::emit(config, os.str(), out, err);
}

inline int cmd_circuit_dump(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format == "csv") throw ConfigError("circuit-dump only emits json");
  const ProtocolParams params(config.d, config.n, config.target_party, config.caps);
  Circuit c = [&] {
    if (config.which == "vpz") return build_vpz_circuit(config.d, config.n, config.caps);
    if (config.which == "vpx") return build_vpx_circuit(config.d, config.n, config.caps);
    if (config.which == "uenc") return build_uenc_circuit(config.d, config.n, config.caps);
    if (config.which == "udec") return build_udec_circuit(params);
    throw ConfigError("--which must be one of vpz, vpx, uenc, udec");
  }();
  return detail::emit(config, to_json(c).dump(2) + "\n", out, err);
}

/// Validates the config, runs the command, and maps errors onto exit codes.
inline int dispatch(const RunConfig& config, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  try {
    config.validate();
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "run") return cmd_run(config, out, err);
    if (config.command == "counts") return cmd_counts(config, out, err);
    if (config.command == "autocorr") return cmd_autocorr(config, out, err);
    if (config.command == "circuit-dump") return cmd_circuit_dump(config, out, err);
    throw ConfigError("unknown command '" + config.command + "'");
  } catch (const SizeCapError& e) {
    err << "error: size cap exceeded: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace qclone::cli
