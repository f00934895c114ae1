#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttw4d/lattice.hpp"
#include "ttw4d/model.hpp"

namespace ttw4d {

enum class SuiteId { eigen, ladders, xi, algebra, m1, curvature, conformal, example211, all };
std::string to_string(SuiteId id);
SuiteId parse_suite(const std::string& text);
std::vector<SuiteId> concrete_suites();

// Thrown for parameter/suite combinations that cannot run (a usage error, not a failed check).
struct UnsupportedSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Tolerances {
  double eigen = 1e-7;
  double ladder = 1e-8;
  double curvature = 1e-9;
  double weyl_flat = 1e-10;
  double symmetry = 1e-10;
  double conformal = 1e-8;
  double example = 1e-7;
};

struct SuiteConfig {
  SuiteId suite = SuiteId::all;
  SystemParams params = SystemParams::parse("1,1,1", "1/2,1/2,1/2,1/2", "1");
  long nmax = 3;
  std::size_t points = 20;
  std::uint64_t seed = 20240611;
  Tolerances tol;
  // Empty means try every P⁽⁻⁾ convention and record the one that works.
  std::optional<PConvention> convention;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

inline constexpr long kMaxNmax = 8;

struct CaseRecord {
  std::string identity;
  std::string state;
  std::string point;
  double residual = 0;
  bool pass = true;
  std::string conventions;
  bool diagnostic = false;  // reported, never counted toward pass
};

struct SuiteReport {
  std::string suite;
  std::string k, a, omega;
  std::vector<std::string> conventions;
  std::vector<CaseRecord> cases;
  double max_residual = 0;
  bool pass = true;
  double wall_ms = 0;

  // Recomputes max_residual and pass from the non-diagnostic cases.
  void finalize();
};

// Largest |rational coefficient| over all terms; 0 iff the vector is zero.
double exact_norm(const LatticeVector& v);

// Runs fn(0..count-1) on a pool; results are stored by index.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

SuiteReport run_suite(const SuiteConfig& config);
// Runs every concrete suite that applies to config.params (example211 and m1 only at k=(2,1,1)).
std::vector<SuiteReport> run_all(const SuiteConfig& config);

// States [m, m+2]^4 with m the interior margin; used by the algebra and M1 suites.
std::vector<QuantumState> interior_window(const SystemParams& params);

// Default parameter grid for `all`.
std::vector<SystemParams> default_grid();

struct SpectrumRow {
  QuantumState state;
  Rational A0, ell1, ell2, ell3;
  OmegaPoly E;
  std::size_t class_index = 0;
  std::size_t class_size = 1;
};

std::vector<SpectrumRow> spectrum_table(const SystemParams& params, long nmax);
std::string format_spectrum(const std::vector<SpectrumRow>& rows);

bool is_k211(const SystemParams& params);

}  // namespace ttw4d
