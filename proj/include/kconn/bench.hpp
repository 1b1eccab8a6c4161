#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kconn/digraph.hpp"

namespace kconn {

struct BenchRecord {
  std::string family;
  int n = 0;
  long long m = 0;
  int k = 2;
  std::string mode;
  std::string algorithm;  // "fast" or "baseline"
  double wall_seconds = 0;
  long long edges_scanned = 0;
  int recursion_depth = 0;
  int component_count = 0;
};

struct BenchSpec {
  std::vector<std::string> families{"cycle-chain"};
  /// Target live-edge counts, one cell per (family, size).
  std::vector<long long> sizes{1000, 10000, 100000};
  std::string mode = "2ecs";
  int k = 2;
  uint64_t seed = 1;
  /// Compare fast vs baseline whenever m is at most this.
  long long verify_max_m = 20000;
  bool run_baseline = true;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  bool diverged = false;
  std::string divergence_note;
};

/// Runs every (family, size) cell, fast and (optionally) baseline, and
/// verifies agreement on the small cells. Cells run on up to
/// harness_thread_cap() threads.
BenchOutcome run_benchmark(const BenchSpec& spec);

std::string bench_to_csv(const std::vector<BenchRecord>& records);

/// KCONN_THREADS (if set) capped by hardware concurrency; at least 1.
int harness_thread_cap();

}  // namespace kconn
