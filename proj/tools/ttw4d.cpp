#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ttw4d/report.hpp"
#include "ttw4d/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value file; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw UsageError("config line without '=': " + line);
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

struct Options {
  std::string suite = "all";
  std::string k, a;
  std::string omega = "1";
  long nmax = -1;
  std::size_t points = 20;
  std::uint64_t seed = 20240611;
  std::optional<double> tol;
  std::string report;
  std::string format = "json";
  std::string convention = "auto";
  std::size_t threads = 0;
  std::string config;
};

// Fill options that were not given on the command line from the config file.
void apply_config(CLI::App& cmd, Options& o) {
  if (o.config.empty()) return;
  const auto kv = read_config(o.config);
  auto unset = [&cmd](const std::string& key) {
    try {
      return cmd.get_option("--" + key)->count() == 0;
    } catch (const CLI::OptionNotFound&) {
      throw UsageError("unknown config key: " + key);
    }
  };
  for (const auto& [key, value] : kv) {
    if (!unset(key)) continue;
    try {
      if (key == "suite") o.suite = value;
      else if (key == "k") o.k = value;
      else if (key == "a") o.a = value;
      else if (key == "omega") o.omega = value;
      else if (key == "nmax") o.nmax = std::stol(value);
      else if (key == "points") o.points = std::stoul(value);
      else if (key == "seed") o.seed = std::stoull(value);
      else if (key == "tol") o.tol = std::stod(value);
      else if (key == "report") o.report = value;
      else if (key == "format") o.format = value;
      else if (key == "convention") o.convention = value;
      else if (key == "threads") o.threads = std::stoul(value);
      else throw UsageError("unsupported config key: " + key);
    } catch (const std::logic_error&) {
      throw UsageError("bad value for config key " + key + ": " + value);
    }
  }
}

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--k", o.k, "k1,k2,k3 as rationals, e.g. 2,1,1");
  cmd.add_option("--a", o.a, "a1,a2,a3,a4 as rationals");
  cmd.add_option("--omega", o.omega, "frequency (rational) or 'formal'");
  cmd.add_option("--nmax", o.nmax, "largest quantum number (<= 8)");
  cmd.add_option("--config", o.config, "key=value file; command-line flags win");
}

void emit(const std::vector<ttw4d::SuiteReport>& reports, const Options& o) {
  // Keep stdout clean for the report when it is streamed there.
  std::ostream& log = o.report == "-" ? std::cerr : std::cout;
  for (const auto& r : reports) {
    log << (r.pass ? "PASS " : "FAIL ") << r.suite << " k=(" << r.k << ") a=(" << r.a
              << ") omega=" << r.omega << " cases=" << r.cases.size()
              << " max_residual=" << r.max_residual << " wall_ms=" << static_cast<long>(r.wall_ms)
              << "\n";
    for (const auto& c : r.conventions) log << "  convention " << c << "\n";
    int shown = 0;
    for (const auto& c : r.cases)
      if (!c.pass && !c.diagnostic && shown++ < 5)
        log << "  failed: " << c.identity << " " << c.state << " residual=" << c.residual
                  << (c.conventions.empty() ? "" : " [" + c.conventions + "]") << "\n";
  }
  if (o.report.empty()) return;
  const std::string bytes = ttw4d::emit_reports(reports, ttw4d::parse_format(o.format));
  if (o.report == "-")
    std::cout << bytes;
  else
    ttw4d::write_file(o.report, bytes);
}

int run_verify(const Options& o) {
  if (o.nmax > ttw4d::kMaxNmax) throw UsageError("--nmax must be at most 8");
  ttw4d::parse_format(o.format);
  ttw4d::SuiteConfig base;
  base.suite = ttw4d::parse_suite(o.suite);
  base.nmax = o.nmax >= 0 ? o.nmax : 3;
  base.points = o.points;
  base.seed = o.seed;
  base.threads = o.threads;
  if (o.convention != "auto") base.convention = ttw4d::parse_p_convention(o.convention);
  if (o.tol) {
    auto& t = base.tol;
    t.eigen = t.ladder = t.curvature = t.conformal = t.example = *o.tol;
  }
  std::vector<ttw4d::SystemParams> grid;
  const std::string a = o.a.empty() ? "1/2,1/2,1/2,1/2" : o.a;
  const std::optional<std::string_view> omega =
      o.omega == "formal" ? std::nullopt : std::optional<std::string_view>(o.omega);
  if (base.suite == ttw4d::SuiteId::all && o.k.empty() && o.a.empty())
    grid = ttw4d::default_grid();
  else
    grid.push_back(ttw4d::SystemParams::parse(o.k.empty() ? "1,1,1" : o.k, a, omega));

  std::vector<ttw4d::SuiteReport> reports;
  for (const auto& P : grid) {
    base.params = P;
    if (base.suite == ttw4d::SuiteId::all) {
      for (auto& r : ttw4d::run_all(base)) reports.push_back(std::move(r));
    } else {
      reports.push_back(ttw4d::run_suite(base));
    }
  }
  emit(reports, o);
  for (const auto& r : reports)
    if (!r.pass) return kExitFail;
  return kExitPass;
}

int run_spectrum(const Options& o) {
  if (o.nmax > ttw4d::kMaxNmax) throw UsageError("--nmax must be at most 8");
  const auto P = ttw4d::SystemParams::parse(o.k.empty() ? "1,1,1" : o.k,
                                            o.a.empty() ? "1/2,1/2,1/2,1/2" : o.a, std::nullopt);
  std::cout << ttw4d::format_spectrum(ttw4d::spectrum_table(P, o.nmax >= 0 ? o.nmax : 2));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the four-dimensional TTW-type system"};
  app.require_subcommand(1);
  Options vo, so;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(*verify, vo);
  verify->add_option("--suite", vo.suite,
                     "eigen|ladders|xi|algebra|m1|curvature|conformal|example211|all");
  verify->add_option("--points", vo.points, "sample points per check");
  verify->add_option("--seed", vo.seed, "seed for points and test functions");
  verify->add_option("--tol", vo.tol, "override every numeric tolerance");
  verify->add_option("--report", vo.report, "write a report to this path ('-' for stdout)");
  verify->add_option("--format", vo.format, "json|csv");
  verify->add_option("--convention", vo.convention,
                     "printed|antisymmetric|antisymmetric-reversed|auto");
  verify->add_option("--threads", vo.threads, "worker threads (0 = all cores)");
  auto* spectrum = app.add_subcommand("spectrum", "print the spectrum and degeneracy classes");
  add_common(*spectrum, so);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (verify->parsed()) {
      apply_config(*verify, vo);
      return run_verify(vo);
    }
    apply_config(*spectrum, so);
    return run_spectrum(so);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
