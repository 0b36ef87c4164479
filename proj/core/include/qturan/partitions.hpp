#pragma once

// Exact partition-count tables built from truncated power-series products.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qturan/exact.hpp"

namespace qturan {

enum class PartitionKind { Distinct, OddParts, NoMultiplesOf };

const char* to_string(PartitionKind kind);
std::optional<PartitionKind> parse_partition_kind(const std::string& name);

struct PartitionTable {
  PartitionKind kind = PartitionKind::Distinct;
  long k = 2;  // only meaningful for NoMultiplesOf
  long limit = 0;
  std::vector<ExactInteger> values;

  // Throws IndexError outside [0, limit].
  const ExactInteger& at(long n) const;
  const ExactInteger& operator[](long n) const { return values[static_cast<std::size_t>(n)]; }
};

// q(n): product of (1 + x^j), j = 1..N.
PartitionTable q_table(long N);
// q(n) again, as partitions into odd parts: product of 1/(1 - x^j), j odd.
PartitionTable q_oracle_table(long N);
// p_k(n): partitions with no part divisible by k.
PartitionTable pk_table(long k, long N);

PartitionTable compute_table(PartitionKind kind, long k, long N);

// Text format: header line "kind k N", then N+1 decimal values, one per line.
void write_table(const std::filesystem::path& path, const PartitionTable& table);
PartitionTable read_table(const std::filesystem::path& path);

// Reuses a cached table covering N (possibly longer, then truncated);
// otherwise computes and stores it. An empty cache_dir disables caching.
PartitionTable load_or_compute(const std::filesystem::path& cache_dir, PartitionKind kind,
                               long k, long N);

}  // namespace qturan
