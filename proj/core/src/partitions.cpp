#include "qturan/partitions.hpp"

#include <fstream>
#include <system_error>

#include "qturan/errors.hpp"

namespace qturan {

namespace fs = std::filesystem;

const char* to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Distinct: return "distinct";
    case PartitionKind::OddParts: return "odd-parts";
    case PartitionKind::NoMultiplesOf: return "no-multiples-of";
  }
  return "?";
}

std::optional<PartitionKind> parse_partition_kind(const std::string& name) {
  for (auto kind : {PartitionKind::Distinct, PartitionKind::OddParts,
                    PartitionKind::NoMultiplesOf}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

const ExactInteger& PartitionTable::at(long n) const {
  if (n < 0 || n > limit) {
    throw IndexError("index " + std::to_string(n) + " outside table [0, " +
                     std::to_string(limit) + "]");
  }
  return values[static_cast<std::size_t>(n)];
}

namespace {

void require_limit(long N) {
  if (N < 0) throw ArgumentError("table limit must be non-negative");
}

PartitionTable blank(PartitionKind kind, long k, long N) {
  require_limit(N);
  PartitionTable t;
  t.kind = kind;
  t.k = k;
  t.limit = N;
  t.values.assign(static_cast<std::size_t>(N) + 1, ExactInteger(0));
  t.values[0] = 1;
  return t;
}

// Multiplies the series by 1/(1 - x^j).
void unbounded_part(std::vector<ExactInteger>& v, std::size_t j) {
  for (std::size_t i = j; i < v.size(); ++i) v[i] += v[i - j];
}

}  // namespace

PartitionTable q_table(long N) {
  PartitionTable t = blank(PartitionKind::Distinct, 2, N);
  auto& v = t.values;
  for (std::size_t j = 1; j < v.size(); ++j) {
    for (std::size_t i = v.size() - 1; i >= j; --i) v[i] += v[i - j];
  }
  return t;
}

PartitionTable q_oracle_table(long N) {
  PartitionTable t = blank(PartitionKind::OddParts, 2, N);
  for (std::size_t j = 1; j < t.values.size(); j += 2) unbounded_part(t.values, j);
  return t;
}

PartitionTable pk_table(long k, long N) {
  if (k < 2) throw ArgumentError("pk_table needs k >= 2");
  PartitionTable t = blank(PartitionKind::NoMultiplesOf, k, N);
  for (std::size_t j = 1; j < t.values.size(); ++j) {
    if (j % static_cast<std::size_t>(k) != 0) unbounded_part(t.values, j);
  }
  return t;
}

PartitionTable compute_table(PartitionKind kind, long k, long N) {
  switch (kind) {
    case PartitionKind::Distinct: return q_table(N);
    case PartitionKind::OddParts: return q_oracle_table(N);
    case PartitionKind::NoMultiplesOf: return pk_table(k, N);
  }
  throw ArgumentError("unknown partition kind");
}

void write_table(const fs::path& path, const PartitionTable& table) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << to_string(table.kind) << ' ' << table.k << ' ' << table.limit << '\n';
    for (const auto& v : table.values) out << v.get_str() << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  fs::rename(tmp, path);
}

PartitionTable read_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file " + path.string());
  std::string kind_name;
  PartitionTable t;
  if (!(in >> kind_name >> t.k >> t.limit) || t.limit < 0) {
    throw std::runtime_error("malformed cache header in " + path.string());
  }
  const auto kind = parse_partition_kind(kind_name);
  if (!kind) throw std::runtime_error("unknown table kind '" + kind_name + "'");
  t.kind = *kind;
  t.values.reserve(static_cast<std::size_t>(t.limit) + 1);
  std::string line;
  while (static_cast<long>(t.values.size()) <= t.limit && in >> line) {
    ExactInteger v;
    if (v.set_str(line, 10) != 0) throw std::runtime_error("malformed cache value: " + line);
    t.values.push_back(std::move(v));
  }
  if (static_cast<long>(t.values.size()) != t.limit + 1) {
    throw std::runtime_error("truncated cache file " + path.string());
  }
  return t;
}

namespace {

std::string cache_stem(PartitionKind kind, long k) {
  std::string stem = to_string(kind);
  if (kind == PartitionKind::NoMultiplesOf) stem += "-k" + std::to_string(k);
  return stem;
}

}  // namespace

PartitionTable load_or_compute(const fs::path& cache_dir, PartitionKind kind, long k, long N) {
  if (cache_dir.empty()) return compute_table(kind, k, N);
  const std::string stem = cache_stem(kind, k);
  std::error_code ec;
  if (fs::is_directory(cache_dir, ec)) {
    for (const auto& entry : fs::directory_iterator(cache_dir, ec)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind(stem + "-N", 0) != 0 || entry.path().extension() != ".txt") continue;
      try {
        PartitionTable t = read_table(entry.path());
        if (t.kind != kind || t.k != k || t.limit < N) continue;
        t.values.resize(static_cast<std::size_t>(N) + 1);
        t.limit = N;
        return t;
      } catch (const std::exception&) {
        // Unreadable cache entries are ignored and recomputed.
      }
    }
  }
  PartitionTable t = compute_table(kind, k, N);
  fs::create_directories(cache_dir, ec);
  if (!ec) {
    try {
      write_table(cache_dir / (stem + "-N" + std::to_string(N) + ".txt"), t);
    } catch (const std::exception&) {
      // Caching is best effort.
    }
  }
  return t;
}

}  // namespace qturan
