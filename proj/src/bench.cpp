#include "snap/bench.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "snap/backend.hpp"
#include "snap/recognizer.hpp"
#include "snap/rng.hpp"

namespace snap {

namespace {

constexpr double kBenchEpsilon = 0.25;

double log_log_slope(const std::vector<BenchDegreeResult>& rows) {
  const std::size_t m = rows.size();
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& row : rows) {
    mean_x += std::log(static_cast<double>(row.degree));
    mean_y += std::log(row.mean_search_ops);
  }
  mean_x /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);
  double cov = 0.0;
  double var = 0.0;
  for (const auto& row : rows) {
    const double dx = std::log(static_cast<double>(row.degree)) - mean_x;
    const double dy = std::log(row.mean_search_ops) - mean_y;
    cov += dx * dy;
    var += dx * dx;
  }
  return cov / var;
}

}  // namespace

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : degrees) {
    nlohmann::ordered_json r;
    r["degree"] = row.degree;
    r["trials"] = row.trials;
    r["successes"] = row.successes;
    r["mean_total_ops"] = row.mean_total_ops;
    r["mean_search_ops"] = row.mean_search_ops;
    r["mean_multiplications"] = row.mean_multiplications;
    r["mean_random_draws"] = row.mean_random_draws;
    r["peak_elements"] = row.peak_elements;
    rows.push_back(r);
  }
  j["degrees"] = rows;
  if (slope) {
    j["slope"] = *slope;
  } else {
    j["slope"] = nullptr;
  }
  return j.dump(2) + "\n";
}

BenchReport run_bench(const std::vector<unsigned>& degrees, std::uint64_t trials,
                      std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("run_bench: trials must be at least 1");
  }
  if (degrees.empty()) {
    throw std::invalid_argument("run_bench: need at least one degree");
  }
  for (const unsigned n : degrees) {
    if (n < 9) {
      throw std::invalid_argument("run_bench: degrees must be at least 9");
    }
  }

  RandomStream root(seed);
  BenchReport report;
  for (const unsigned n : degrees) {
    RandomStream degree_stream = root.split(n);
    BenchDegreeResult row;
    row.degree = n;
    row.trials = trials;
    std::uint64_t total_ops = 0;
    std::uint64_t search_ops = 0;
    std::uint64_t mults = 0;
    std::uint64_t draws = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      const std::uint64_t trial_seed = degree_stream.split(trial).seed();
      auto oracle = shroud_oracle(GroupSpec::alt(n), trial_seed);
      const RecognitionOutcome outcome = recognise(*oracle, kBenchEpsilon, n);
      if (outcome.status == RecognitionOutcome::Status::success) {
        ++row.successes;
      }
      total_ops += outcome.counters.total();
      search_ops += outcome.counters.total() - outcome.phases.certification.total();
      mults += outcome.counters.multiplications;
      draws += outcome.counters.random_draws;
      row.peak_elements = std::max(row.peak_elements, oracle->element_stats().peak);
    }
    const auto denom = static_cast<double>(trials);
    row.mean_total_ops = static_cast<double>(total_ops) / denom;
    row.mean_search_ops = static_cast<double>(search_ops) / denom;
    row.mean_multiplications = static_cast<double>(mults) / denom;
    row.mean_random_draws = static_cast<double>(draws) / denom;
    report.degrees.push_back(row);
  }
  if (report.degrees.size() >= 2) {
    report.slope = log_log_slope(report.degrees);
  }
  return report;
}

}  // namespace snap
