// partdist: distances between clusterings and exhaustive lattice checks.

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partdist/bounds.hpp"
#include "partdist/classifiers.hpp"
#include "partdist/clustering_io.hpp"
#include "partdist/errors.hpp"
#include "partdist/measures.hpp"
#include "partdist/oracle.hpp"

namespace {

using namespace partdist;
using ordered_json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kVerification = 3 };

// A bad argument value, as opposed to bad file contents.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MeasureId measure_arg(const std::string& name) {
  try {
    return parse_measure(name);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct ClusteringArgs {
  std::string measure;
  std::vector<std::string> files;
  std::string input_format;
  bool normalized = false;
};

std::optional<ClusteringFormat> input_format(const ClusteringArgs& args) {
  if (args.input_format.empty()) return std::nullopt;
  try {
    return parse_clustering_format(args.input_format);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

std::vector<ClusteringFile> load_all(const ClusteringArgs& args) {
  std::vector<ClusteringFile> files;
  for (const auto& path : args.files) files.push_back(load_clustering(path, input_format(args)));
  for (std::size_t i = 1; i < files.size(); ++i) {
    if (auto diff = ground_set_difference(files[0], files[i]); !diff.empty()) throw MismatchError(diff);
  }
  return files;
}

int cmd_dist(const Globals& g, const ClusteringArgs& args) {
  const MeasureId id = measure_arg(args.measure);
  const auto files = load_all(args);
  const DistanceValue value = distance(id, files[0].partition, files[1].partition);
  if (g.format == "json") {
    ordered_json out;
    out["measure"] = measure_name(id);
    out["raw"] = value.raw;
    out["normalized"] = std::to_string(value.normalized.num) + "/" + std::to_string(value.normalized.den);
    out["value"] = value.normalized.to_double();
    std::cout << out.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << "measure,raw,normalized\n"
              << measure_name(id) << ',' << value.raw << ',' << value.normalized.num << '/'
              << value.normalized.den << '\n';
  } else {
    std::cout << (args.normalized ? value.normalized_string() : std::to_string(value.raw)) << '\n';
  }
  return kOk;
}

std::string cell_text(const DistanceValue& v, bool normalized) {
  if (!normalized) return std::to_string(v.raw);
  if (v.normalized.num == 0) return "0";
  return std::to_string(v.normalized.num) + "/" + std::to_string(v.normalized.den);
}

int cmd_matrix(const Globals& g, const ClusteringArgs& args) {
  const MeasureId id = measure_arg(args.measure);
  const auto files = load_all(args);
  const std::size_t m = files.size();
  std::vector<std::vector<DistanceValue>> table(m, std::vector<DistanceValue>(m, normalize(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      table[i][j] = table[j][i] = distance(id, files[i].partition, files[j].partition);
    }
  }

  if (g.format == "json") {
    ordered_json out;
    out["measure"] = measure_name(id);
    out["names"] = ordered_json::array();
    for (const auto& f : files) out["names"].push_back(f.name);
    out["matrix"] = ordered_json::array();
    for (const auto& row : table) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) {
        if (args.normalized) {
          r.push_back(cell_text(v, true));
        } else {
          r.push_back(v.raw);
        }
      }
      out["matrix"].push_back(r);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  // text and csv share the layout; text pads columns.
  std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    cells[0][i + 1] = files[i].name;
    cells[i + 1][0] = files[i].name;
    for (std::size_t j = 0; j < m; ++j) cells[i + 1][j + 1] = cell_text(table[i][j], args.normalized);
  }
  std::vector<std::size_t> width(m + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c <= m; ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= m; ++c) {
      if (g.format == "csv") {
        line += (c ? "," : "") + row[c];
      } else {
        line += (c ? "  " : "") + row[c] + std::string(c < m ? width[c] - row[c].size() : 0, ' ');
      }
    }
    std::cout << line << '\n';
  }
  return kOk;
}

int cmd_classify(const Globals& g, int n, const std::vector<std::string>& names) {
  std::vector<MeasureId> measures;
  for (const auto& name : names) measures.push_back(measure_arg(name));
  if (measures.empty()) measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  const ClassificationReport report = classify_all(n, measures, ClassifierOptions{kDefaultPairScanLimit, g.jobs});
  if (g.format == "json") {
    std::cout << render_json(report) << '\n';
  } else if (g.format == "csv") {
    std::cout << "measure,property,holds,paper,witness_first,witness_second,observed_max\n";
    for (const Verdict& v : report.verdicts) {
      const Expectation e = paper_expectation(v.measure, v.property, n);
      std::cout << measure_name(v.measure) << ',' << property_name(v.property) << ','
                << (v.holds ? "true" : "false") << ','
                << (e == Expectation::HOLDS ? "holds" : e == Expectation::FAILS ? "fails" : "") << ','
                << (v.witness ? v.witness->first.to_string() : "") << ','
                << (v.witness ? v.witness->second.to_string() : "") << ','
                << (v.observed_max ? std::to_string(*v.observed_max) : "") << '\n';
    }
  } else {
    std::cout << render_text(report);
  }
  const auto bad = contradictions(report);
  for (const Verdict& v : bad) {
    std::cerr << "contradiction: " << measure_name(v.measure) << ' ' << property_name(v.property) << " at n=" << n
              << '\n';
  }
  return bad.empty() ? kOk : kVerification;
}

int cmd_bounds(const Globals& g, int n, bool with_oracle) {
  const auto rows = bounds_table(n);
  std::vector<Extremes> oracle;
  if (with_oracle) oracle = ih_extremes_by_d(n);
  bool all_agree = true;

  ordered_json json_rows = ordered_json::array();
  if (g.format != "json") std::cout << "n,k,min_ih,max_ih,case,oracle_min,oracle_max,agree\n";
  for (const BoundResult& r : rows) {
    std::string omin, omax, agree;
    bool ok = true;
    if (with_oracle) {
      const Extremes& e = oracle[static_cast<std::size_t>(r.k)];
      ok = e.count > 0 && e.min == r.min_ih && e.max == r.max_ih;
      omin = std::to_string(e.min);
      omax = std::to_string(e.max);
      agree = ok ? "yes" : "no";
      all_agree = all_agree && ok;
    }
    if (g.format == "json") {
      ordered_json row;
      row["n"] = r.n;
      row["k"] = r.k;
      row["min_ih"] = r.min_ih;
      row["max_ih"] = r.max_ih;
      row["case"] = bound_case_name(r.min_case);
      if (with_oracle) {
        const Extremes& e = oracle[static_cast<std::size_t>(r.k)];
        row["oracle_min"] = e.min;
        row["oracle_max"] = e.max;
        row["agree"] = ok;
        if (!ok) {
          row["oracle_argmin"] = {e.argmin.first.to_string(), e.argmin.second.to_string()};
        }
      }
      json_rows.push_back(row);
    } else {
      std::cout << r.n << ',' << r.k << ',' << r.min_ih << ',' << r.max_ih << ',' << bound_case_name(r.min_case)
                << ',' << omin << ',' << omax << ',' << agree << '\n';
    }
  }
  if (g.format == "json") std::cout << json_rows.dump(2) << '\n';
  return all_agree ? kOk : kVerification;
}

int cmd_sizes(const Globals& g, int n) {
  const auto sizes = available_sizes(n);
  if (g.format == "json") {
    ordered_json out;
    out["n"] = n;
    out["sizes"] = sizes;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::string line;
  for (long long s : sizes) line += (line.empty() ? "" : (g.format == "csv" ? "," : " ")) + std::to_string(s);
  std::cout << line << '\n';
  return kOk;
}

// --inject-fault exists so the test suite can exercise the failure path on a
// claim set that otherwise verifies.
int cmd_verify(const Globals& g, int n, std::size_t sample, int sample_n, bool inject_fault) {
  auto reports = verify_claims(n);
  if (sample > 0) {
    ClaimReport r;
    r.claim_id = "D_SAMPLE";
    r.n = sample_n;
    r.verified = true;
    for (const auto& pair : sample_pairs(sample_n, sample, g.seed)) {
      const long long fast = pd_distance(pair.first, pair.second);
      const long long slow = d_by_definition(pair.first, pair.second);
      if (fast != slow) {
        r.verified = false;
        r.counterexample = pair;
        r.detail = "matching gives " + std::to_string(fast) + ", definition gives " + std::to_string(slow);
        break;
      }
    }
    if (r.verified) r.detail = std::to_string(sample) + " sampled pairs, seed " + std::to_string(g.seed);
    reports.push_back(std::move(r));
  }
  if (inject_fault && !reports.empty()) {
    ClaimReport& r = reports.front();
    r.verified = false;
    r.counterexample = PartitionPair{Partition::bottom(n), Partition::top(n)};
    r.detail = "injected fault";
  }
  std::cout << (g.format == "json" ? render_json(reports) + "\n" : render_text(reports));
  for (const auto& r : reports) {
    if (!r.verified) return kVerification;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances between set partitions and exhaustive lattice checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for exhaustive scans")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();

  ClusteringArgs dist_args;
  auto* dist = app.add_subcommand("dist", "Distance between two clusterings");
  dist->add_option("measure", dist_args.measure, "pd, sd, rb, rbp, sb or ih")->required();
  dist->add_option("files", dist_args.files, "Two clustering files")->required()->expected(2);
  dist->add_flag("--normalized", dist_args.normalized, "Print raw/(raw+1) as a fraction and decimal");
  dist->add_option("--input-format", dist_args.input_format, "labels, blocks-json or literal");

  ClusteringArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix");
  matrix->add_option("measure", matrix_args.measure, "pd, sd, rb, rbp, sb or ih")->required();
  matrix->add_option("files", matrix_args.files, "Two or more clustering files")->required()->expected(2, -1);
  matrix->add_flag("--normalized", matrix_args.normalized, "Report raw/(raw+1)");
  matrix->add_option("--input-format", matrix_args.input_format, "labels, blocks-json or literal");

  int classify_n = 0;
  std::vector<std::string> classify_measures;
  auto* classify = app.add_subcommand("classify", "Check every lattice property for each measure at n");
  classify->add_option("n", classify_n, "Ground set size")->required()->check(CLI::PositiveNumber);
  classify->add_option("--measures", classify_measures, "Subset of measures")->delimiter(',');

  int bounds_n = 0;
  bool bounds_oracle = false;
  auto* bounds = app.add_subcommand("bounds", "Min and max IH for each D value");
  bounds->add_option("n", bounds_n, "Ground set size")->required()->check(CLI::Range(2, 64));
  bounds->add_flag("--oracle", bounds_oracle, "Compare with brute force");

  int sizes_n = 0;
  auto* sizes = app.add_subcommand("sizes", "Sizes realized by partitions of an n-set");
  sizes->add_option("n", sizes_n, "Ground set size")->required()->check(CLI::PositiveNumber);

  int verify_n = 0;
  std::size_t verify_sample = 0;
  int verify_sample_n = 8;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Verify every claim exhaustively at n");
  verify->add_option("n", verify_n, "Ground set size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--sample", verify_sample, "Also compare D two ways on this many random pairs");
  verify->add_option("--sample-n", verify_sample_n, "Ground set size for --sample")
      ->check(CLI::Range(1, kDefinitionalLimit))
      ->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dist) return cmd_dist(g, dist_args);
    if (*matrix) return cmd_matrix(g, matrix_args);
    if (*classify) return cmd_classify(g, classify_n, classify_measures);
    if (*bounds) return cmd_bounds(g, bounds_n, bounds_oracle);
    if (*sizes) return cmd_sizes(g, sizes_n);
    if (*verify) return cmd_verify(g, verify_n, verify_sample, verify_sample_n, inject_fault);
  } catch (const UsageError& e) {
    std::cerr << "partdist: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "partdist: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    std::cerr << "partdist: " << e.what() << '\n';
    return kUsage;
  } catch (const MismatchError& e) {
    std::cerr << "partdist: " << e.what() << '\n';
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "partdist: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
