#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

// SNAP_CLI_PATH and SNAP_GROUP_DIR are injected by the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SNAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string group_file(const std::string& name) {
  return std::string(SNAP_GROUP_DIR) + "/" + name + ".json";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("recognize emits a certified success report") {
  const auto result = run_cli("recognize --group " + group_file("alt9") +
                              " --N 16 --epsilon 0.05 --seed 42");
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report.at("status") == "success");
  CHECK(report.at("degree") == 9);
  CHECK(report.at("kind") == "alt");
  CHECK(report.at("epsilon") == 0.05);
  CHECK(report.at("N") == 16);
  CHECK(report.at("seed") == 42);
  CHECK(report.at("certified") == true);
  CHECK(report.at("generator_images").size() == 2);
  for (const auto& image : report.at("generator_images")) {
    CHECK(image.size() == 9);
  }
  const auto& counters = report.at("counters");
  CHECK(counters.at("total").get<std::uint64_t>() ==
        counters.at("multiplications").get<std::uint64_t>() +
            counters.at("inversions").get<std::uint64_t>() +
            counters.at("equality_tests").get<std::uint64_t>() +
            counters.at("random_draws").get<std::uint64_t>());
  // Every phase is populated and no phase outweighs the run total.
  std::uint64_t phase_sum = 0;
  for (const char* phase :
       {"candidates", "long_cycle", "standard_generators", "certification"}) {
    const auto total =
        report.at("phase_breakdown").at(phase).at("total").get<std::uint64_t>();
    CHECK(total > 0);
    phase_sum += total;
  }
  CHECK(phase_sum <= counters.at("total").get<std::uint64_t>());
  CHECK(report.at("wall_time").get<double>() > 0.0);
}

TEST_CASE("recognize reports are replayable except for wall time") {
  const std::string out1 = "/tmp/snap_cli_replay_1.json";
  const std::string out2 = "/tmp/snap_cli_replay_2.json";
  const std::string args = "recognize --group " + group_file("sym12") +
                           " --N 16 --epsilon 0.1 --seed 2024 --out ";
  CHECK(run_cli(args + out1).exit_code == 0);
  CHECK(run_cli(args + out2).exit_code == 0);
  const auto lines1 = split_lines(read_file(out1));
  const auto lines2 = split_lines(read_file(out2));
  REQUIRE(lines1.size() == lines2.size());
  std::size_t wall_time_lines = 0;
  for (std::size_t i = 0; i < lines1.size(); ++i) {
    if (lines1[i].find("wall_time") != std::string::npos) {
      ++wall_time_lines;
      CHECK(lines2[i].find("wall_time") != std::string::npos);
      continue;
    }
    CHECK(lines1[i] == lines2[i]);
  }
  CHECK(wall_time_lines == 1);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("recognize rejects non-members and bad input") {
  const auto negative = run_cli("recognize --group " + group_file("d20") +
                                " --N 16 --epsilon 0.1 --seed 5");
  CHECK(negative.exit_code == 1);
  const auto report = nlohmann::json::parse(negative.output);
  CHECK(report.at("status") == "fail");
  CHECK(report.at("degree") == 0);
  CHECK(report.at("kind").is_null());
  CHECK(report.at("certified") == false);
  CHECK(report.at("generator_images").empty());

  // Below the algorithm's degree domain.
  CHECK(run_cli("recognize --group " + group_file("alt9") +
                " --N 8 --epsilon 0.1 --seed 5")
            .exit_code == 2);
  // Epsilon outside (0,1).
  CHECK(run_cli("recognize --group " + group_file("alt9") +
                " --N 16 --epsilon 1.5 --seed 5")
            .exit_code == 2);
  // Missing file.
  CHECK(run_cli("recognize --group /tmp/snap_cli_no_such_group.json"
                " --N 16 --epsilon 0.1 --seed 5")
            .exit_code == 2);
  // Malformed file.
  const std::string bad = "/tmp/snap_cli_bad_group.json";
  std::ofstream(bad) << "{\"kind\": \"alt\"}";
  const auto malformed =
      run_cli("recognize --group " + bad + " --N 16 --epsilon 0.1 --seed 5");
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.output.find("error:") != std::string::npos);
  std::remove(bad.c_str());
  // Missing required option.
  CHECK(run_cli("recognize --group " + group_file("alt9")).exit_code == 2);
  // Unknown subcommand.
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("proportions tables, filters and formats") {
  const auto trip = run_cli("proportions --table trip --n-max 12");
  CHECK(trip.exit_code == 0);  // flagged rows do not fail the run
  const auto lines = split_lines(trip.output);
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "n,param,exact,bound,status");
  bool saw_flagged = false;
  for (const auto& line : lines) {
    CHECK(line.find("fail") == std::string::npos);
    if (line.find("9,k=2,20/63,") == 0) {
      CHECK(line.find("flagged") != std::string::npos);
      saw_flagged = true;
    }
  }
  CHECK(saw_flagged);

  // The --k filter keeps only matching rows (and must not match k=1 by
  // prefix when asked for k=2).
  const auto filtered = run_cli("proportions --table trip --n-max 12 --k 1");
  CHECK(filtered.exit_code == 0);
  for (const auto& line : split_lines(filtered.output)) {
    if (line.find("n,param") == 0) continue;
    CHECK(line.find("k=1") != std::string::npos);
  }

  const auto json_out = run_cli("proportions --table common-fp --json");
  CHECK(json_out.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json_out.output);
  CHECK(parsed.at("table") == "common-fp");
  CHECK(parsed.at("all_pass") == true);
  REQUIRE(parsed.at("rows").size() == 3);
  CHECK(parsed.at("rows")[0].at("status") == "pass");

  const auto sigma = run_cli("proportions --table sigma --n-max 12");
  CHECK(sigma.exit_code == 0);
  CHECK(sigma.output.find("flagged") != std::string::npos);

  const auto prebolster = run_cli("proportions --table prebolster --n-max 8");
  CHECK(prebolster.exit_code == 0);
  CHECK(prebolster.output.find("aggregate;kind=sym") != std::string::npos);

  // Beyond the partition enumeration cap.
  CHECK(run_cli("proportions --table small-support --n-max 36").exit_code == 2);
  // Unknown table name.
  CHECK(run_cli("proportions --table no-such-table").exit_code == 2);
}

TEST_CASE("oracle queries") {
  const auto meet = run_cli("oracle --predicate involution-meet --n 9 --k 2");
  CHECK(meet.exit_code == 0);
  const auto parsed = nlohmann::json::parse(meet.output);
  CHECK(parsed.at("involutions") == "378");
  CHECK(parsed.at("noncommuting") == "340");
  CHECK(parsed.at("three_cycle_yield") == "140");
  CHECK(parsed.at("share_one_point") == "120");
  CHECK(parsed.at("trip") == "20/63");
  CHECK(parsed.at("sigma") == "7/17");

  const auto spans = run_cli("oracle --predicate pre-bolstering --n 7");
  CHECK(spans.exit_code == 0);
  const auto span_json = nlohmann::json::parse(spans.output);
  CHECK(span_json.at("count") == "288");
  CHECK(span_json.at("proportion") == "2/35");

  const auto small = run_cli("oracle --predicate small-support --n 9 --kind alt");
  CHECK(small.exit_code == 0);
  const auto small_json = nlohmann::json::parse(small.output);
  CHECK(small_json.at("proportion") == "7/32");
  CHECK(small_json.at("count") == "39690");  // 7/32 of 9!/2

  CHECK(run_cli("oracle --predicate involution-meet --n 9").exit_code == 2);
  CHECK(run_cli("oracle --predicate pre-bolstering --n 12").exit_code == 2);
  CHECK(run_cli("oracle --predicate no-such-predicate --n 9").exit_code == 2);
}

TEST_CASE("bench reports and guards") {
  const auto two = run_cli("bench --degrees 12,16 --trials 2 --seed 7");
  CHECK(two.exit_code == 0);
  const auto parsed = nlohmann::json::parse(two.output);
  REQUIRE(parsed.at("degrees").size() == 2);
  CHECK(parsed.at("degrees")[0].at("degree") == 12);
  CHECK(parsed.at("degrees")[0].at("trials") == 2);
  CHECK(parsed.at("degrees")[0].at("successes") == 2);
  CHECK(parsed.at("degrees")[0].at("peak_elements").get<std::uint64_t>() > 0);
  CHECK(parsed.at("slope").is_number());

  const auto single = run_cli("bench --degrees 12 --trials 1 --seed 7");
  CHECK(single.exit_code == 0);
  CHECK(nlohmann::json::parse(single.output).at("slope").is_null());

  CHECK(run_cli("bench --degrees 12 --trials 0 --seed 7").exit_code == 2);
  CHECK(run_cli("bench --degrees 8 --trials 1 --seed 7").exit_code == 2);
}
