// Command-line front end: recognition runs, proportion bound tables,
// brute-force oracle queries, and operation-count benchmarks.  Exit codes
// are uniform across subcommands: 0 success / all bounds pass, 1 negative
// verdict / a bound fails, 2 bad input of any sort.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "snap/backend.hpp"
#include "snap/bench.hpp"
#include "snap/perm.hpp"
#include "snap/proportions.hpp"
#include "snap/report.hpp"

namespace {

using snap::BoundTable;
using snap::ExactRational;
using snap::PermGroup;

// Writes to the --out file when given, else to stdout.
void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  }
  out << text;
}

std::string rational_string(const ExactRational& value) {
  std::ostringstream os;
  os << numerator(value) << '/' << denominator(value);
  return os.str();
}

std::string bigint_string(const snap::BigInt& value) {
  return value.str();
}

// True when one ';'-separated subfield of param equals key=value.
bool param_has(const std::string& param, const std::string& key,
               const std::string& value) {
  const std::string needle = key + "=" + value;
  std::size_t start = 0;
  while (start <= param.size()) {
    const std::size_t end = param.find(';', start);
    const std::string field =
        param.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (field == needle) {
      return true;
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return false;
}

void filter_rows(BoundTable& table, const std::string& key,
                 const std::optional<std::uint32_t>& value) {
  if (!value) {
    return;
  }
  const std::string wanted = std::to_string(*value);
  std::vector<snap::BoundRow> kept;
  for (auto& row : table.rows) {
    if (param_has(row.param, key, wanted)) {
      kept.push_back(std::move(row));
    }
  }
  table.rows = std::move(kept);
}

std::string table_to_json(const BoundTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["param"] = row.param;
    r["exact"] = rational_string(row.exact);
    r["bound"] = row.bound;
    r["status"] = row.flagged ? "flagged" : row.pass ? "pass" : "fail";
    rows.push_back(r);
  }
  nlohmann::ordered_json j;
  j["table"] = table.name;
  j["rows"] = rows;
  j["all_pass"] = table.all_pass();
  return j.dump(2) + "\n";
}

int cmd_recognize(const std::string& group_file, unsigned N, double epsilon,
                  std::uint64_t seed, const std::string& out_path) {
  std::ifstream in(group_file);
  if (!in) {
    std::cerr << "error: cannot open group file '" << group_file << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  snap::GroupSpec spec;
  try {
    spec = snap::GroupSpec::parse_json(buffer.str());
  } catch (const snap::GroupFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (N < 9) {
    std::cerr << "error: the degree bound N must be at least 9\n";
    return 2;
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    std::cerr << "error: epsilon must lie strictly between 0 and 1\n";
    return 2;
  }
  const snap::RunReport report = snap::run_recognition(spec, N, epsilon, seed);
  write_output(report.to_json(), out_path);
  return report.status == snap::RecognitionOutcome::Status::success ? 0 : 1;
}

int cmd_proportions(const std::string& table_name,
                    std::optional<std::uint32_t> n_min,
                    std::optional<std::uint32_t> n_max,
                    std::optional<std::uint32_t> k,
                    std::optional<std::uint32_t> b,
                    std::optional<std::uint32_t> t, bool as_json,
                    const std::string& out_path) {
  BoundTable table;
  try {
    if (table_name == "small-support") {
      table = snap::small_support_table(n_min.value_or(9), n_max.value_or(35));
    } else if (table_name == "tb") {
      const std::vector<std::uint32_t> bs =
          b ? std::vector<std::uint32_t>{*b} : std::vector<std::uint32_t>{2, 4, 8};
      table = snap::t_b_table(bs, n_max.value_or(60));
    } else if (table_name == "ub") {
      table = snap::u_b_table(n_min.value_or(36), n_max.value_or(60));
      filter_rows(table, "b", b);
    } else if (table_name == "trip") {
      table = snap::trip_table(n_min.value_or(9), n_max.value_or(20));
      filter_rows(table, "k", k);
    } else if (table_name == "sigma") {
      table = snap::sigma_table(n_min.value_or(9), n_max.value_or(24));
      filter_rows(table, "k", k);
    } else if (table_name == "prebolster") {
      table = snap::pre_bolstering_table(n_min.value_or(7), n_max.value_or(9));
      filter_rows(table, "k", k);
    } else if (table_name == "common-fp") {
      table = snap::common_fixed_point_table();
      filter_rows(table, "k", k);
      filter_rows(table, "t", t);
    } else {
      std::cerr << "error: unknown table '" << table_name
                << "' (expected small-support, tb, ub, trip, sigma, prebolster "
                   "or common-fp)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  write_output(as_json ? table_to_json(table) : snap::to_csv(table), out_path);
  return table.all_pass() ? 0 : 1;
}

int cmd_oracle(const std::string& predicate, std::uint32_t n,
               std::optional<std::uint32_t> k, const std::string& kind_name,
               const std::string& out_path) {
  const PermGroup group =
      kind_name == "alt" ? PermGroup::alternating : PermGroup::symmetric;
  nlohmann::ordered_json j;
  j["predicate"] = predicate;
  j["n"] = n;
  try {
    if (predicate == "pre-bolstering") {
      j["kind"] = kind_name;
      const auto counts = snap::pre_bolstering_span_counts(n, group);
      nlohmann::ordered_json by_span = nlohmann::ordered_json::object();
      snap::BigInt total = 0;
      for (std::uint32_t span = 0; span < counts.size(); ++span) {
        if (counts[span] != 0) {
          by_span[std::to_string(span)] = bigint_string(counts[span]);
          total += counts[span];
        }
      }
      j["count"] = bigint_string(total);
      j["by_span"] = by_span;
      j["proportion"] = rational_string(snap::pre_bolstering_aggregate(n, group));
    } else if (predicate == "small-support") {
      j["kind"] = kind_name;
      const ExactRational proportion =
          n <= 11 ? snap::enumerate_proportion(
                        n, group,
                        [n](const snap::Permutation& x) {
                          return snap::powers_to_small_involution(x, n);
                        })
                  : snap::small_support_proportion(n, group);
      const snap::BigInt order = group == PermGroup::symmetric
                                     ? snap::factorial(n)
                                     : snap::factorial(n) / 2;
      j["count"] = bigint_string(
          snap::BigInt(numerator(proportion) * order / denominator(proportion)));
      j["proportion"] = rational_string(proportion);
    } else if (predicate == "involution-meet") {
      if (!k) {
        std::cerr << "error: --predicate involution-meet needs --k\n";
        return 2;
      }
      j["k"] = *k;
      const snap::InvolutionMeetStats stats = snap::involution_meet_stats(n, *k);
      j["involutions"] = bigint_string(stats.involutions);
      j["noncommuting"] = bigint_string(stats.noncommuting);
      j["three_cycle_yield"] = bigint_string(stats.three_cycle_yield);
      j["share_one_point"] = bigint_string(stats.share_one_point);
      j["disjoint_support"] = bigint_string(stats.disjoint_support);
      j["trip"] = rational_string(
          ExactRational(stats.share_one_point, stats.involutions));
      if (stats.noncommuting != 0) {
        j["sigma"] = rational_string(
            ExactRational(stats.three_cycle_yield, stats.noncommuting));
      } else {
        j["sigma"] = nullptr;
      }
    } else {
      std::cerr << "error: unknown predicate '" << predicate
                << "' (expected pre-bolstering, small-support or "
                   "involution-meet)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  write_output(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_bench(const std::vector<unsigned>& degrees, std::uint64_t trials,
              std::uint64_t seed, const std::string& out_path) {
  snap::BenchReport report;
  try {
    report = snap::run_bench(degrees, trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  write_output(report.to_json(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive recognition of alternating and symmetric groups"};
  app.require_subcommand(1);

  // recognize
  auto* recognize = app.add_subcommand(
      "recognize", "Recognize a black-box group from a JSON group file");
  std::string group_file;
  unsigned N = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string out_path;
  recognize->add_option("--group", group_file, "group description file")->required();
  recognize->add_option("--N", N, "upper bound on the degree")->required();
  recognize->add_option("--epsilon", epsilon, "failure probability budget")->required();
  recognize->add_option("--seed", seed, "root seed (shroud + sampling)")->required();
  recognize->add_option("--out", out_path, "write the report here instead of stdout");

  // proportions
  auto* proportions = app.add_subcommand(
      "proportions", "Verify proportion lower bounds with exact arithmetic");
  std::string table_name;
  std::optional<std::uint32_t> n_min;
  std::optional<std::uint32_t> n_max;
  std::optional<std::uint32_t> opt_k;
  std::optional<std::uint32_t> opt_b;
  std::optional<std::uint32_t> opt_t;
  bool as_json = false;
  std::string prop_out;
  proportions
      ->add_option("--table", table_name,
                   "small-support, tb, ub, trip, sigma, prebolster or common-fp")
      ->required();
  proportions->add_option("--n-min", n_min, "first degree");
  proportions->add_option("--n-max", n_max, "last degree (point cap for tb)");
  proportions->add_option("--k", opt_k, "restrict to one involution size / chain length");
  proportions->add_option("--b", opt_b, "restrict to one block size");
  proportions->add_option("--t", opt_t, "restrict to one round count");
  proportions->add_flag("--json", as_json, "emit JSON instead of CSV");
  proportions->add_option("--out", prop_out, "write the table here instead of stdout");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force enumeration oracle for proportion spot checks");
  std::string predicate;
  std::uint32_t oracle_n = 0;
  std::optional<std::uint32_t> oracle_k;
  std::string oracle_kind = "sym";
  std::string oracle_out;
  oracle
      ->add_option("--predicate", predicate,
                   "pre-bolstering, small-support or involution-meet")
      ->required();
  oracle->add_option("--n", oracle_n, "degree")->required();
  oracle->add_option("--k", oracle_k, "involution size (involution-meet)");
  oracle->add_option("--kind", oracle_kind, "sym or alt")
      ->check(CLI::IsMember({"sym", "alt"}));
  oracle->add_option("--out", oracle_out, "write the result here instead of stdout");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Measure group-operation counts of recognition runs");
  std::vector<unsigned> degrees;
  std::uint64_t trials = 0;
  std::uint64_t bench_seed = 0;
  std::string bench_out;
  bench->add_option("--degrees", degrees, "comma-separated degree list")
      ->required()
      ->delimiter(',');
  bench->add_option("--trials", trials, "recognition runs per degree")->required();
  bench->add_option("--seed", bench_seed, "root seed")->required();
  bench->add_option("--out", bench_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (recognize->parsed()) {
      return cmd_recognize(group_file, N, epsilon, seed, out_path);
    }
    if (proportions->parsed()) {
      return cmd_proportions(table_name, n_min, n_max, opt_k, opt_b, opt_t,
                             as_json, prop_out);
    }
    if (oracle->parsed()) {
      return cmd_oracle(predicate, oracle_n, oracle_k, oracle_kind, oracle_out);
    }
    if (bench->parsed()) {
      return cmd_bench(degrees, trials, bench_seed, bench_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
