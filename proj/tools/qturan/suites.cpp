#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "qturan/bessel.hpp"
#include "qturan/chern.hpp"
#include "qturan/errors.hpp"
#include "qturan/nu.hpp"
#include "qturan/partitions.hpp"
#include "qturan/symbolic.hpp"
#include "qturan/turan.hpp"

namespace qturan::cli {

using json = nlohmann::ordered_json;

namespace {

template <class Body>
VerificationReport timed(std::string check, json params, Body&& body) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const PrecisionExhausted& e) {
    r.status = Status::Indeterminate;
    r.details["error"] = e.what();
  }
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

PrecisionPolicy policy_of(const SuiteOptions& o) { return PrecisionPolicy{o.precision, kPrecisionCap}; }

PartitionTable distinct_table(const SuiteOptions& o, long N) {
  return load_or_compute(o.cache_dir, PartitionKind::Distinct, 2, N);
}

// Dense run [from, dense_to], then a fixed geometric ladder, then the bound itself.
std::vector<long> samples(long from, long dense_to, long bound) {
  std::set<long> out;
  for (long n = from; n <= std::min(dense_to, bound); ++n) out.insert(n);
  for (long n : {500L, 1000L, 2000L, 5000L, 10000L, 20000L, 50000L, 100000L}) {
    if (n >= from && n <= bound) out.insert(n);
  }
  if (bound >= from) out.insert(bound);
  return {out.begin(), out.end()};
}

// Runs `check(n)` over ns; the first failing n becomes the witness.
template <class Check>
void certify_all(VerificationReport& r, const std::vector<long>& ns, Check&& check) {
  r.status = Status::Pass;
  r.details["samples"] = ns.size();
  if (!ns.empty()) {
    r.details["first"] = ns.front();
    r.details["last"] = ns.back();
  }
  for (long n : ns) {
    BoundReport b;
    try {
      b = check(n);
    } catch (const PrecisionExhausted& e) {
      r.status = Status::Indeterminate;
      r.witness = n;
      r.details["error"] = e.what();
      return;
    }
    r.precision_bits = std::max<long>(r.precision_bits, b.precision_bits);
    if (b.verdict == Verdict::Fails) {
      r.status = Status::Fail;
      r.witness = n;
      return;
    }
    if (b.verdict == Verdict::Indeterminate) {
      r.status = Status::Indeterminate;
      r.witness = n;
      return;
    }
  }
}

VerificationReport threshold_report(const std::string& check, TuranPredicate p,
                                     const PartitionTable& table, long bound, long claimed,
                                     unsigned jobs) {
  return timed(check, json{{"bound", bound}, {"claimed_from", claimed}}, [&](VerificationReport& r) {
    const ThresholdResult t = threshold_scan(p, table, bound, jobs);
    r.details["predicate"] = to_string(p);
    r.details["holds_from"] = t.holds_from;
    r.details["last_failure"] = t.last_failure ? json(*t.last_failure) : json(nullptr);
    r.details["exhaustive_to"] = t.exhaustive_to;
    r.status = t.holds_from <= claimed ? Status::Pass : Status::Fail;
    if (r.status == Status::Fail) r.witness = t.last_failure;
  });
}

std::vector<VerificationReport> suite_logconcave(const SuiteOptions& o) {
  const PartitionTable t = distinct_table(o, o.bound + 1);
  return {threshold_report("logconcave", TuranPredicate::LogConcave, t, o.bound, 33, o.jobs)};
}

std::vector<VerificationReport> suite_turan3(const SuiteOptions& o) {
  const PartitionTable t = distinct_table(o, std::max(o.bound, 2000L) + 2);
  std::vector<VerificationReport> out{
      threshold_report("turan3", TuranPredicate::HigherTuran, t, o.bound, 121, o.jobs)};
  const long to = std::min(o.bound, 2000L);
  out.push_back(timed("turan3.cubic_agreement", json{{"from", 2}, {"to", to}},
                      [&](VerificationReport& r) {
                        r.status = Status::Pass;
                        for (long n = 2; n <= to; ++n) {
                          if (cubic_hyperbolic_at(t, n) != higher_turan_at(t, n, true)) {
                            r.status = Status::Fail;
                            r.witness = n;
                            return;
                          }
                        }
                      }));
  return out;
}

std::vector<VerificationReport> suite_invariants(const SuiteOptions& o) {
  const PartitionTable t = distinct_table(o, o.bound + 3);
  return {threshold_report("invariants.A", TuranPredicate::APositive, t, o.bound, 230, o.jobs),
          threshold_report("invariants.B", TuranPredicate::BPositive, t, o.bound, 272, o.jobs),
          threshold_report("invariants.I", TuranPredicate::IPositive, t, o.bound, 267, o.jobs)};
}

std::vector<VerificationReport> suite_pk(const SuiteOptions& o) {
  static const std::map<long, std::pair<long, long>> expected{
      {3, {58, 185}}, {4, {17, 64}}, {5, {42, 137}}};
  std::vector<long> ks{3, 4, 5};
  if (o.k) {
    if (!expected.count(*o.k)) throw ArgumentError("--k must be 3, 4 or 5 for verify pk");
    ks = {*o.k};
  }
  std::vector<VerificationReport> out;
  for (long k : ks) {
    const auto [n_exp, m_exp] = expected.at(k);
    out.push_back(timed("pk.k" + std::to_string(k), json{{"k", k}, {"bound", o.bound}},
                        [&](VerificationReport& r) {
                          const PkThresholds p = pk_thresholds(k, o.bound, o.jobs, o.cache_dir);
                          r.details["N"] = p.N();
                          r.details["M"] = p.M();
                          r.details["expected_N"] = n_exp;
                          r.details["expected_M"] = m_exp;
                          r.status = Status::Pass;
                          if (p.N() != n_exp) {
                            r.status = Status::Fail;
                            r.witness = p.log_concave.last_failure.value_or(p.N());
                          } else if (p.M() != m_exp) {
                            r.status = Status::Fail;
                            r.witness = p.higher_turan.last_failure.value_or(p.M());
                          }
                        }));
  }
  return out;
}

std::vector<VerificationReport> suite_thm12(const SuiteOptions& o) {
  const std::vector<long> ns = samples(135, 335, o.bound);
  const PartitionTable t = distinct_table(o, std::max(o.bound, 335L));
  return {timed("thm12", json{{"bound", o.bound}}, [&](VerificationReport& r) {
    certify_all(r, ns, [&](long n) { return residual_bound_check(n, t[n], policy_of(o)); });
  })};
}

std::vector<VerificationReport> suite_thm13(const SuiteOptions& o) {
  const long from = nu_min_n(43, policy_of(o));
  const std::vector<long> ns = samples(from, from + 40, o.bound);
  const PartitionTable t = distinct_table(o, std::max(o.bound, from + 40));
  std::vector<VerificationReport> out;
  out.push_back(timed("thm13", json{{"bound", o.bound}, {"from", from}}, [&](VerificationReport& r) {
    certify_all(r, ns, [&](long n) { return q_sandwich_check(n, t[n], policy_of(o)); });
  }));
  out.push_back(timed("thm13.helpers", json::object(), [&](VerificationReport& r) {
    std::vector<BoundReport> checks = helper_monotone_checks({562, 1000, 5000}, policy_of(o));
    for (long s : {26L, 30L, 50L, 100L, 500L}) checks.push_back(bessel_sandwich(ExactRational(s), policy_of(o)));
    r.status = Status::Pass;
    json items = json::array();
    for (const auto& b : checks) {
      r.precision_bits = std::max<long>(r.precision_bits, b.precision_bits);
      items.push_back(json{{"quantity", b.quantity}, {"verdict", to_string(b.verdict)}});
      if (b.verdict == Verdict::Fails) r.status = Status::Fail;
      if (b.verdict == Verdict::Indeterminate && r.status == Status::Pass) r.status = Status::Indeterminate;
    }
    r.details["checks"] = items;
  }));
  return out;
}

std::vector<VerificationReport> suite_thm14(const SuiteOptions& o) {
  const long from = nu_min_n(67, policy_of(o));
  const std::vector<long> ns = samples(from, from + 35, o.bound);
  const long top = std::max(o.bound, from + 35) + 2;
  const PartitionTable t = distinct_table(o, top);
  std::vector<VerificationReport> out;
  out.push_back(timed("thm14", json{{"bound", o.bound}, {"from", from}}, [&](VerificationReport& r) {
    certify_all(r, ns, [&](long n) { return Q_sandwich_check(n, t, policy_of(o)); });
  }));
  const long chain_to = std::max(o.bound, from);
  out.push_back(timed("thm14.q_chain", json{{"from", from}, {"to", chain_to}},
                      [&](VerificationReport& r) {
                        r.status = Status::Pass;
                        for (long n = from; n <= chain_to; ++n) {
                          if (!q_chain_check(t, n).holds()) {
                            r.status = Status::Fail;
                            r.witness = n;
                            return;
                          }
                        }
                      }));
  return out;
}

std::vector<VerificationReport> suite_chern(const SuiteOptions& o) {
  const EtaQuotient eq = EtaQuotient::distinct_parts();
  std::vector<long> ns;
  for (long n = 135; n <= o.bound; n += 50) ns.push_back(n);
  const PartitionTable t = distinct_table(o, std::max(o.bound, 135L));
  std::vector<VerificationReport> out;
  out.push_back(timed("chern.hybrid", json{{"bound", o.bound}, {"step", 50}, {"E", 173}},
                      [&](VerificationReport& r) {
                        certify_all(r, ns, [&](long n) {
                          return hybrid_residual_check(eq, t, n, std::nullopt, 173, policy_of(o));
                        });
                      }));
  std::vector<long> tail;
  for (std::size_t i = 0; i < ns.size(); i += 10) tail.push_back(ns[i]);
  out.push_back(timed("chern.q_tail", json{{"bound", o.bound}}, [&](VerificationReport& r) {
    certify_all(r, tail, [&](long n) { return q_tail_check(n, policy_of(o)); });
  }));
  out.push_back(timed("chern.imaginary", json{{"bound", o.bound}}, [&](VerificationReport& r) {
    certify_all(r, tail, [&](long n) { return imaginary_part_check(eq, n, o.precision); });
  }));
  return out;
}

std::optional<long> published_index(const std::string& name) {
  if (name.rfind("published ", 0) != 0) return std::nullopt;
  const auto underscore = name.rfind('_');
  if (underscore == std::string::npos) return std::nullopt;
  return std::stol(name.substr(underscore + 1));
}

std::vector<VerificationReport> suite_symbolic(const SuiteOptions&) {
  std::vector<VerificationReport> out;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SymbolicReport> suite = symbolic_suite();
  const long total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  for (const auto& s : suite) {
    VerificationReport r;
    r.check = "symbolic." + s.name;
    r.status = s.all_hold() ? Status::Pass : Status::Fail;
    r.runtime_ms = total_ms / static_cast<long>(suite.size());
    json items = json::array();
    for (const auto& c : s.checks) {
      json item{{"name", c.name}, {"holds", c.holds}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      items.push_back(item);
      if (!c.holds && !r.witness) r.witness = published_index(c.name);
    }
    r.details["checks"] = items;
    out.push_back(std::move(r));
  }
  return out;
}

using SuiteFn = std::vector<VerificationReport> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"logconcave", suite_logconcave}, {"turan3", suite_turan3}, {"thm12", suite_thm12},
      {"thm13", suite_thm13},           {"thm14", suite_thm14},   {"chern", suite_chern},
      {"symbolic", suite_symbolic},     {"pk", suite_pk},         {"invariants", suite_invariants},
  };
  return r;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.bound < 1) throw ArgumentError("--bound must be positive");
  if (options.precision < 32 || options.precision > kPrecisionCap) {
    throw ArgumentError("--precision must lie in [32, " + std::to_string(kPrecisionCap) + "]");
  }
  std::vector<VerificationReport> out;
  for (const auto& [name, fn] : registry()) {
    if (suite == name || suite == "all") {
      auto part = fn(options);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  if (out.empty()) throw ArgumentError("unknown suite: " + suite);
  return out;
}

json to_json(const VerificationReport& r) {
  json j{{"check", r.check},
         {"params", r.params},
         {"status", to_string(r.status)},
         {"witness", r.witness ? json(*r.witness) : json(nullptr)},
         {"precision_bits", r.precision_bits},
         {"runtime_ms", r.runtime_ms}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

json to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "check,params,status,witness\n";
  for (const auto& r : reports) {
    out << quote(r.check) << ',' << quote(r.params.dump()) << ',' << to_string(r.status) << ',';
    if (r.witness) out << *r.witness;
    out << '\n';
  }
  return out.str();
}

const json& report_schema() {
  static const json schema = json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "qturan verification report",
  "$defs": {
    "report": {
      "type": "object",
      "required": ["check", "params", "status", "witness", "precision_bits", "runtime_ms"],
      "properties": {
        "check": {"type": "string", "minLength": 1},
        "params": {"type": "object"},
        "status": {"enum": ["pass", "fail", "indeterminate"]},
        "witness": {"type": ["integer", "null"]},
        "precision_bits": {"type": "integer", "minimum": 0},
        "runtime_ms": {"type": "integer", "minimum": 0},
        "details": {"type": "object"}
      },
      "additionalProperties": false
    }
  },
  "anyOf": [
    {"$ref": "#/$defs/report"},
    {"type": "array", "items": {"$ref": "#/$defs/report"}}
  ]
})");
  return schema;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::Indeterminate) undecided = true;
  }
  return undecided ? 3 : 0;
}

}  // namespace qturan::cli
