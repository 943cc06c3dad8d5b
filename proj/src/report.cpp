#include "snap/report.hpp"

#include <chrono>

#include "json.hpp"

namespace snap {

namespace {

nlohmann::ordered_json counters_json(const OpCounters& c) {
  nlohmann::ordered_json j;
  j["multiplications"] = c.multiplications;
  j["inversions"] = c.inversions;
  j["equality_tests"] = c.equality_tests;
  j["random_draws"] = c.random_draws;
  j["total"] = c.total();
  return j;
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  const bool ok = status == RecognitionOutcome::Status::success;
  j["status"] = ok ? "success" : "fail";
  j["degree"] = degree;
  if (ok) {
    j["kind"] = kind == RecognisedKind::alternating ? "alt" : "sym";
  } else {
    j["kind"] = nullptr;
  }
  j["epsilon"] = epsilon;
  j["N"] = N;
  j["seed"] = seed;
  j["certified"] = certified;
  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  for (const Permutation& p : generator_images) {
    images.push_back(p.image_list());
  }
  j["generator_images"] = images;
  j["counters"] = counters_json(counters);
  j["wall_time"] = wall_time;
  nlohmann::ordered_json breakdown;
  breakdown["candidates"] = counters_json(phases.candidates);
  breakdown["long_cycle"] = counters_json(phases.long_cycle);
  breakdown["standard_generators"] = counters_json(phases.standard_generators);
  breakdown["certification"] = counters_json(phases.certification);
  j["phase_breakdown"] = breakdown;
  return j.dump(2) + "\n";
}

RunReport run_recognition(const GroupSpec& spec, unsigned N, double epsilon,
                          std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  auto oracle = shroud_oracle(spec, seed);
  const RecognitionOutcome outcome = recognise(*oracle, epsilon, N);
  const auto stop = std::chrono::steady_clock::now();

  RunReport report;
  report.status = outcome.status;
  report.degree = outcome.degree;
  report.kind = outcome.kind;
  report.epsilon = epsilon;
  report.N = N;
  report.seed = seed;
  report.certified = outcome.status == RecognitionOutcome::Status::success;
  report.generator_images = outcome.generator_images;
  report.counters = outcome.counters;
  report.wall_time = std::chrono::duration<double>(stop - start).count();
  report.phases = outcome.phases;
  return report;
}

}  // namespace snap
