// Copyright 2026 The haar-forge Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "haarforge/analytics.hpp"
#include "haarforge/errors.hpp"
#include "haarforge/spectra.hpp"
#include "haarforge/stats.hpp"
#include "haarforge/verification.hpp"

namespace haarforge::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Group> kGroups = {
    {"so", Group::so}, {"o", Group::o}, {"u", Group::u}, {"sp", Group::sp}, {"sn", Group::sn}};
const std::map<std::string, Method> kMethods = {
    {"euler", Method::euler},           {"qr", Method::qr},   {"householder", Method::householder},
    {"hessenberg", Method::hessenberg}, {"cmv", Method::cmv}, {"bubble", Method::bubble}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Method resolved_method(const RunConfig& cfg) {
  if (cfg.method) return *cfg.method;
  return cfg.group == Group::sn ? Method::bubble : Method::euler;
}

bool complex_group(Group g) { return g == Group::u || g == Group::sp; }

// Runs `body` against stdout or the --out file, mapping failures to exit codes.
int with_output(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  try {
    if (cfg.out.empty()) return body(out);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + cfg.out + "'");
    const int code = body(file);
    file.flush();
    if (!file) throw IoError("failed writing output file '" + cfg.out + "'");
    return code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void write_matrix_json(std::ostream& os, const SquareMatrix& m) {
  os << '[';
  bool first = true;
  for (const Complex& z : m.entries()) {
    if (!first) os << ',';
    first = false;
    os << '[' << format_double(z.real()) << ',' << format_double(z.imag()) << ']';
  }
  os << ']';
}

void write_matrix_csv(std::ostream& os, const SquareMatrix& m, bool complex) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) os << ',';
      os << format_double(m(r, c).real());
      if (complex) os << ',' << format_double(m(r, c).imag());
    }
    os << '\n';
  }
}

void write_header_json(std::ostream& os, const RunConfig& cfg, Method method) {
  os << "{\"group\":\"" << to_string(cfg.group) << "\",\"n\":" << cfg.n << ",\"method\":\"" << to_string(method)
     << "\",\"seed\":" << cfg.seed;
}

void require_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Method method = resolved_method(cfg);
  const std::size_t count = cfg.count.value_or(1);
  return with_output(cfg, out, err, [&](std::ostream& os) {
    require_n(cfg);
    if (count < 1) throw UsageError("--count must be at least 1");
    if (cfg.group == Group::sn) {
      if (method != Method::bubble) throw UsageError("group sn supports only --method bubble");
      const auto words = sample_batch(count, cfg.seed, cfg.streams,
                                      [&](RandomStream& s) { return sample_permutation(s, cfg.n).sigma; });
      if (cfg.format == Format::json) {
        write_header_json(os, cfg, method);
        os << ",\"permutations\":[";
        for (std::size_t k = 0; k < words.size(); ++k) {
          if (k) os << ',';
          os << '[';
          for (std::size_t i = 0; i < words[k].size(); ++i) os << (i ? "," : "") << words[k][i];
          os << ']';
        }
        os << "]}\n";
      } else {
        for (const auto& w : words) {
          for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
          os << '\n';
        }
      }
      return kExitOk;
    }
    const GroupId group{cfg.group, cfg.n};
    // Reject unsupported combinations before spawning lanes.
    {
      RandomStream probe(cfg.seed, 0);
      (void)sample_group(probe, group, method);
    }
    const auto mats = sample_batch(count, cfg.seed, cfg.streams,
                                   [&](RandomStream& s) { return sample_group(s, group, method); });
    if (cfg.format == Format::json) {
      write_header_json(os, cfg, method);
      os << ",\"matrices\":[";
      for (std::size_t k = 0; k < mats.size(); ++k) {
        if (k) os << ',';
        write_matrix_json(os, mats[k]);
      }
      os << "]}\n";
    } else {
      for (std::size_t k = 0; k < mats.size(); ++k) {
        if (k) os << '\n';
        write_matrix_csv(os, mats[k], complex_group(cfg.group));
      }
    }
    return kExitOk;
  });
}

int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Method method = resolved_method(cfg);
  const std::size_t count = cfg.count.value_or(100000);
  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.group != Group::so) throw UsageError("moments are available for --group so only");
    if (cfg.n < 2) throw UsageError("moments need --n >= 2");
    if (count < 2) throw UsageError("moments need --count >= 2");
    const double n = static_cast<double>(cfg.n);
    const bool joint = cfg.q != 0.0;
    const double exact = joint ? moment_joint(n, cfg.p, cfg.q) : moment_single(n, cfg.p);
    const GroupId group{Group::so, cfg.n};
    {
      RandomStream probe(cfg.seed, 0);
      (void)sample_group(probe, group, method);
    }
    const auto values = sample_batch(count, cfg.seed, cfg.streams, [&](RandomStream& s) {
      const SquareMatrix x = sample_group(s, group, method);
      const double a = std::pow(std::abs(x(cfg.n - 1, cfg.n - 1).real()), 2.0 * cfg.p);
      return joint ? a * std::pow(std::abs(x(cfg.n - 2, cfg.n - 2).real()), 2.0 * cfg.q) : a;
    });
    const MeanEstimate est = mean_estimate(values);
    const TestReport z = moment_z(est.mean, est.std_error, exact, values.size());
    json report = {{"group", "so"},
                   {"n", cfg.n},
                   {"method", std::string(to_string(method))},
                   {"p", cfg.p},
                   {"q", cfg.q},
                   {"samples", values.size()},
                   {"exact", exact},
                   {"estimate", est.mean},
                   {"std_error", est.std_error},
                   {"z_score", z.statistic},
                   {"pass", z.pass}};
    if (joint) report["derivation_range"] = moment_joint_in_derivation_range(n);
    os << report.dump(2) << '\n';
    return z.pass ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_volumes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return with_output(cfg, out, err, [&](std::ostream& os) {
    require_n(cfg);
    const std::size_t n = cfg.n;
    json report = {{"group", std::string(to_string(cfg.group))}, {"n", n}};
    bool pass = true;
    auto cross_check = [&](double quadrature, double closed) {
      const double rel = std::abs(quadrature - closed) / closed;
      const bool ok = rel <= 1e-6;
      pass = pass && ok;
      return json{{"value", quadrature}, {"relative_error", rel}, {"pass", ok}};
    };
    switch (cfg.group) {
      case Group::so:
      case Group::o: {
        report["volumes"] = {{"SO(N)", volume(VolumeTag::so, n)},
                             {"O(N)", volume(VolumeTag::o, n)},
                             {"O(N)/O(1)^N", volume(VolumeTag::o_mod_o1, n)}};
        if (n >= 2) {
          const auto ratio = sphere_ratio_so(n);
          report["sphere_ratio"] = {{"volume_ratio", ratio.first}, {"sphere_area", ratio.second}};
        }
        if (n == 2 || n == 3) report["quadrature"] = cross_check(quadrature_volume_so(n), volume(VolumeTag::so, n));
        break;
      }
      case Group::u: {
        report["volumes"] = {{"U(N)", volume(VolumeTag::u, n)},
                             {"U(N)/U(1)^N", volume(VolumeTag::u_mod_u1, n)},
                             {"U(N)/O(N)", volume(VolumeTag::u_mod_o, n)}};
        report["normalizations"] = {{"C_N", coe_normalization(n)},
                                    {"C_N_raw", coe_normalization_raw(n)},
                                    {"C~_N", cue_normalization(n)}};
        if (n >= 2) {
          const auto ratio = sphere_ratio_u(n);
          report["sphere_ratio"] = {{"volume_ratio", ratio.first}, {"sphere_area_over_sqrt2", ratio.second}};
        }
        if (n <= 2) report["quadrature"] = cross_check(quadrature_volume_u(n), volume(VolumeTag::u, n));
        break;
      }
      default:
        throw UsageError("volumes are available for --group so, o and u");
    }
    report["pass"] = pass;
    os << report.dump(2) << '\n';
    return pass ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_spectra(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Method method = resolved_method(cfg);
  const std::size_t count = cfg.count.value_or(1000);
  return with_output(cfg, out, err, [&](std::ostream& os) {
    require_n(cfg);
    if (count < 1) throw UsageError("--count must be at least 1");
    std::function<SquareMatrix(RandomStream&)> make;
    const GroupId group{cfg.group, cfg.n};
    if (method == Method::hessenberg || method == Method::cmv) {
      if (cfg.group != Group::so) throw UsageError("hessenberg and cmv spectra are defined for --group so only");
      if (cfg.n < 2) throw UsageError("hessenberg and cmv spectra need --n >= 2");
      if (method == Method::hessenberg)
        make = [n = cfg.n](RandomStream& s) { return hessenberg_E(s, n); };
      else
        make = [n = cfg.n](RandomStream& s) { return cmv_matrix(s, n); };
    } else {
      RandomStream probe(cfg.seed, 0);
      (void)sample_group(probe, group, method);
      make = [group, method](RandomStream& s) { return sample_group(s, group, method); };
    }
    const bool drop = cfg.drop_unit && cfg.n % 2 == 1 && (cfg.group == Group::so);
    const auto phases = sample_batch(count, cfg.seed, cfg.streams, [&](RandomStream& s) {
      EigenPhaseList ph = eigenphases(make(s));
      return drop ? without_forced_unit(ph).phases : ph.phases;
    });
    if (cfg.format == Format::json) {
      write_header_json(os, cfg, method);
      os << ",\"phases\":[";
      for (std::size_t k = 0; k < phases.size(); ++k) {
        os << (k ? "," : "") << '[';
        for (std::size_t i = 0; i < phases[k].size(); ++i) os << (i ? "," : "") << format_double(phases[k][i]);
        os << ']';
      }
      os << "]}\n";
    } else {
      for (const auto& row : phases) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return with_output(cfg, out, err, [&](std::ostream& os) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.streams = cfg.streams;
    opts.level = cfg.level;
    bool all = true;
    json report = json::array();
    for (int id = 1; id <= kCriterionCount; ++id) {
      const CriterionResult r = run_criterion(id, opts);
      all = all && r.pass;
      if (cfg.format == Format::json && !cfg.out.empty()) {
        json checks = json::array();
        for (const auto& c : r.checks)
          checks.push_back({{"label", c.label}, {"pass", c.pass}, {"statistic", c.statistic}, {"critical", c.critical}});
        report.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds},
                          {"checks", checks}});
      } else {
        os << summary_line(r) << '\n';
        for (const auto& c : r.checks) {
          os << "    " << (c.pass ? "ok   " : "FAIL ") << c.label << ": " << format_double(c.statistic)
             << " <= " << format_double(c.critical) << '\n';
        }
      }
    }
    if (cfg.format == Format::json && !cfg.out.empty()) {
      os << json{{"seed", cfg.seed}, {"streams", cfg.streams}, {"level", cfg.level}, {"pass", all}, {"criteria", report}}
                .dump(2)
         << '\n';
    }
    out << (all ? "verify: all criteria passed\n" : "verify: FAILED\n");
    return all ? kExitOk : kExitVerifyFailed;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"haar-forge: Haar sampling of SO(N), O(N), U(N), Sp(2N) and S_N"};
  app.name("haar-forge");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string group = "so", method, format = "json";
  std::size_t count = 0;
  app.add_option("--group", group, "Group: so, o, u, sp, sn")->check(CLI::IsMember({"so", "o", "u", "sp", "sn"}));
  app.add_option("--n", cfg.n, "Dimension parameter N (Sp uses 2N x 2N matrices)")->check(CLI::PositiveNumber);
  auto* count_opt = app.add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
  app.add_option("--method", method, "Method: euler, qr, householder, hessenberg, cmv, bubble")
      ->check(CLI::IsMember({"euler", "qr", "householder", "hessenberg", "cmv", "bubble"}));
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--streams", cfg.streams, "Parallel sibling streams")->check(CLI::PositiveNumber);
  app.add_option("--level", cfg.level, "Statistical level in (0, 0.1]")->check(CLI::Range(1e-12, 0.1));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--format", format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--p", cfg.p, "Exponent p of |X_NN|^{2p}")->check(CLI::NonNegativeNumber);
  app.add_option("--q", cfg.q, "Exponent q of |X_{N-1,N-1}|^{2q}")->check(CLI::NonNegativeNumber);
  app.add_flag("--drop-unit", cfg.drop_unit, "spectra: drop the forced eigenvalue 1 of odd-N rotations");

  const std::map<std::string, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>> commands = {
      {"sample", cmd_sample},   {"moments", cmd_moments}, {"volumes", cmd_volumes},
      {"spectra", cmd_spectra}, {"verify", cmd_verify}};
  app.add_subcommand("sample", "Draw Haar-distributed matrices or permutations");
  app.add_subcommand("moments", "Compare closed-form SO(N) moments with Monte Carlo");
  app.add_subcommand("volumes", "Closed-form group volumes with quadrature cross-checks");
  app.add_subcommand("spectra", "Dump eigenphase samples");
  app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  cfg.group = kGroups.at(group);
  if (!method.empty()) cfg.method = kMethods.at(method);
  if (count_opt->count() > 0) cfg.count = count;
  cfg.format = format == "csv" ? Format::csv : Format::json;
  cfg.command = app.get_subcommands().front()->get_name();
  return commands.at(cfg.command)(cfg, out, err);
}

std::vector<SquareMatrix> read_matrices_json(std::istream& in) {
  const json doc = json::parse(in);
  const bool real = doc.at("group") == "so" || doc.at("group") == "o";
  std::vector<SquareMatrix> out;
  for (const auto& m : doc.at("matrices")) {
    std::vector<Complex> entries;
    for (const auto& z : m) entries.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    SquareMatrix mat = SquareMatrix::from_complex(entries);
    if (real) {
      SquareMatrix r(mat.dim(), MatrixKind::real);
      for (std::size_t i = 0; i < mat.dim(); ++i)
        for (std::size_t j = 0; j < mat.dim(); ++j) r.set(i, j, mat(i, j));
      mat = std::move(r);
    }
    out.push_back(std::move(mat));
  }
  return out;
}

std::vector<SquareMatrix> read_matrices_csv(std::istream& in, bool complex) {
  std::vector<SquareMatrix> out;
  std::vector<std::vector<double>> rows;
  auto flush = [&]() {
    if (rows.empty()) return;
    const std::size_t n = rows.size();
    SquareMatrix m(n, complex ? MatrixKind::complex : MatrixKind::real);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != (complex ? 2 * n : n)) throw DimensionError("read_matrices_csv: ragged block");
      for (std::size_t c = 0; c < n; ++c)
        m.set(r, c, complex ? Complex(rows[r][2 * c], rows[r][2 * c + 1]) : Complex(rows[r][c], 0.0));
    }
    out.push_back(std::move(m));
    rows.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) values.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(values));
  }
  flush();
  return out;
}

}  // namespace haarforge::cli
