#pragma once

// Named verification suites. Each suite runs a family of identity and
// property checks at a degree bound and reports them sorted by name.

#include "naphopf/json_io.hpp"
#include "naphopf/series.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace naphopf {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // nonempty when the check fails
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  /// Overrides the per-check default degree when set.
  std::optional<std::size_t> degree;
  std::uint64_t seed = 20260415;
};

/// poset, mobius, hopf, main-theorem, ck-iso, series, projections, all.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument on an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

/// Timing is omitted unless requested, so reports compare byte for byte.
Json to_json(const SuiteReport& report, bool with_timing = false);
std::string render_text(const SuiteReport& report, bool with_timing = false);

/// Deterministic sampling for randomized checks; uses only the raw engine
/// output so the stream is the same with every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// p/q with |p| <= 3 and 1 <= q <= 3.
  Rational small_rational();
  /// Group element with roughly `density` percent of trees nonzero.
  TreeSeries group_element(std::size_t n, unsigned density = 70);
  /// x + random higher terms.
  PowerSeries composition_element(std::size_t n);
  RootedTree tree(std::size_t size);

 private:
  std::mt19937_64 engine_;
};

// Individual check families, shared by the suites and the acceptance runner.
std::vector<Check> check_lattices(std::size_t max_size);
std::vector<Check> check_negative_controls();
std::vector<Check> check_brute_force(std::size_t n);
std::vector<Check> check_comm_partition_lattice();
std::vector<Check> check_round_trip(std::size_t max_size);
std::vector<Check> check_mobius(std::size_t max_size);
std::vector<Check> check_displayed_coproducts();
std::vector<Check> check_hopf_identities(std::size_t max_size);
std::vector<Check> check_main_theorem(std::size_t max_size, std::size_t brute_force_size);
std::vector<Check> check_ck_bridge(std::size_t max_size);

}  // namespace naphopf
