#pragma once

// Verification suites behind `qturan verify`, and their report format.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qturan/enclosure.hpp"

namespace qturan::cli {

enum class Status { Pass, Fail, Indeterminate };

const char* to_string(Status s);

struct VerificationReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Indeterminate;
  std::optional<long> witness;
  long precision_bits = 0;
  long runtime_ms = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct SuiteOptions {
  long bound = 5000;
  Precision precision = kDefaultPrecision;
  std::filesystem::path cache_dir;
  unsigned jobs = 1;
  std::optional<long> k;
};

const std::vector<std::string>& suite_names();

// Runs one suite by name ("all" runs every suite). ArgumentError on unknown names.
std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options);

nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports);
// Columns check,params,status,witness.
std::string to_csv(const std::vector<VerificationReport>& reports);

const nlohmann::ordered_json& report_schema();

// 1 if anything failed, else 3 if anything was undecided, else 0.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace qturan::cli
