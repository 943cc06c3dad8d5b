#ifndef SNAP_BENCH_HPP
#define SNAP_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace snap {

/// Aggregated operation counts for recognition runs at one degree.
/// search_* figures exclude the certification phase, whose cost is
/// attributable to certificate checking rather than the search itself.
struct BenchDegreeResult {
  unsigned degree = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double mean_total_ops = 0.0;
  double mean_search_ops = 0.0;
  double mean_multiplications = 0.0;
  double mean_random_draws = 0.0;
  std::uint64_t peak_elements = 0;  ///< max live element handles over trials
};

/// Per-degree operation counts plus the least-squares slope of
/// log(mean_search_ops) against log(degree).  The slope needs at least
/// two degrees and is omitted otherwise.
struct BenchReport {
  std::vector<BenchDegreeResult> degrees;
  std::optional<double> slope;

  std::string to_json() const;
};

/// Runs `trials` recognitions of a shrouded alternating group of each
/// listed degree n, with degree bound N = n and failure budget 1/4, and
/// aggregates the operation counters.  Trial seeds are derived from the
/// root seed by splitting per degree and then per trial index:
/// RandomStream(seed).split(degree).split(trial).  Requires trials >= 1
/// and every degree >= 9 (throws std::invalid_argument).
BenchReport run_bench(const std::vector<unsigned>& degrees, std::uint64_t trials,
                      std::uint64_t seed);

}  // namespace snap

#endif  // SNAP_BENCH_HPP
