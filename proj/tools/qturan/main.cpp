#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "qturan/errors.hpp"
#include "qturan/partitions.hpp"
#include "suites.hpp"

namespace {

using namespace qturan;

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text) {
  static const std::regex single(R"(\d+)");
  static const std::regex span(R"((\d+):(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, single)) return {std::stol(text), std::stol(text)};
  if (std::regex_match(text, m, span)) {
    Range r{std::stol(m[1]), std::stol(m[2])};
    if (r.lo <= r.hi) return r;
  }
  throw ArgumentError("expected N or A:B with A <= B, got '" + text + "'");
}

int cmd_compute(const std::string& kind_name, const std::string& range_text, std::optional<long> k,
                const std::filesystem::path& cache_dir) {
  PartitionKind kind;
  if (kind_name == "q") {
    kind = PartitionKind::Distinct;
  } else if (kind_name == "odd") {
    kind = PartitionKind::OddParts;
  } else if (kind_name == "pk") {
    kind = PartitionKind::NoMultiplesOf;
    if (!k || *k < 2) throw ArgumentError("compute pk needs --k >= 2");
  } else {
    throw ArgumentError("unknown kind '" + kind_name + "' (q, odd, pk)");
  }
  const Range r = parse_range(range_text);
  const PartitionTable t = load_or_compute(cache_dir, kind, k.value_or(2), r.hi);
  for (long n = r.lo; n <= r.hi; ++n) std::cout << n << ' ' << t[n].get_str() << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const cli::SuiteOptions& options,
               const std::string& format, const std::string& out_path) {
  const auto reports = cli::run_suite(suite, options);
  const std::string text =
      format == "csv" ? cli::to_csv(reports) : cli::to_json(reports).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ArgumentError("cannot write " + out_path);
    out << text;
  }
  return cli::exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified verification of inequalities for the distinct partition function"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Directory for cached partition tables")
      ->envname("QTURAN_CACHE_DIR");

  auto* compute = app.add_subcommand("compute", "Print exact partition counts as `n value`");
  std::string kind;
  std::string range;
  std::optional<long> k;
  compute->add_option("kind", kind, "q, odd or pk")->required();
  compute->add_option("range", range, "N or A:B")->required();
  compute->add_option("--k", k, "Modulus for pk")->envname("QTURAN_K");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  cli::SuiteOptions options;
  std::string format = "json";
  std::string out_path;
  long precision = options.precision;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--bound", options.bound, "Scan bound")
      ->capture_default_str()
      ->envname("QTURAN_BOUND");
  verify->add_option("--precision", precision, "Starting precision in bits")
      ->capture_default_str()
      ->envname("QTURAN_PRECISION");
  verify->add_option("--out", out_path, "Write the report here instead of stdout")
      ->envname("QTURAN_OUT");
  verify->add_option("--format", format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("QTURAN_FORMAT");
  verify->add_option("--jobs", options.jobs, "Worker threads for scans")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u))
      ->envname("QTURAN_JOBS");
  verify->add_option("--k", options.k, "Restrict `pk` to one modulus")->envname("QTURAN_K");

  app.add_subcommand("report-schema", "Print the JSON schema of verification reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(kind, range, k, cache_dir);
    if (verify->parsed()) {
      options.precision = precision;
      options.cache_dir = cache_dir;
      return cmd_verify(suite, options, format, out_path);
    }
    std::cout << cli::report_schema().dump(2) << '\n';
    return 0;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return 3;
  }
}
