#ifndef SNAP_REPORT_HPP
#define SNAP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "snap/backend.hpp"
#include "snap/recognizer.hpp"

namespace snap {

/// Self-contained record of one recognition run: the inputs (N, epsilon,
/// seed), the verdict, the certified generator images, operation counters
/// and their per-phase split, and the wall time.  Two runs with identical
/// inputs serialize to byte-identical JSON except for the wall_time field.
struct RunReport {
  RecognitionOutcome::Status status = RecognitionOutcome::Status::fail;
  std::uint64_t degree = 0;                  ///< 0 unless status == success
  RecognisedKind kind = RecognisedKind::alternating;
  double epsilon = 0.0;
  unsigned N = 0;
  std::uint64_t seed = 0;
  bool certified = false;                    ///< success always implies true
  std::vector<Permutation> generator_images;
  OpCounters counters;
  double wall_time = 0.0;                    ///< seconds, excluded from replay
  PhaseBreakdown phases;

  std::string to_json() const;
};

/// Runs one recognition on the group described by `spec`, shrouded under
/// the run seed, and assembles the report.  The seed is consumed exactly
/// as shroud_oracle documents: the root stream is split with tag "shroud"
/// for the secret relabeling (unless the spec pins its own shroud seed)
/// and with tag "sample" for the oracle's random-element stream; the
/// recognizer draws no randomness of its own.
RunReport run_recognition(const GroupSpec& spec, unsigned N, double epsilon,
                          std::uint64_t seed);

}  // namespace snap

#endif  // SNAP_REPORT_HPP
