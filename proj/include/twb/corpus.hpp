#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twb/finite_group.hpp"

namespace twb {

struct CorpusGroup {
  std::string name;
  FiniteGroup group;
};

/// Built-in sweep corpus: cyclic 1..24, dihedral 3..8, S3, S4, A4, Q8,
/// Z/2+Z/4, Z/2+Z/2+Z/2, keeping those of order <= max_order.
std::vector<CorpusGroup> builtin_corpus(std::size_t max_order);

struct CorpusOptions {
  std::size_t max_order = 24;
  bool automorphisms_only = false;
  std::size_t n_max = 12;
  std::size_t jobs = 1;
  /// Test mode: corrupts the fixed-point count so every pair must fail.
  bool inject_fault = false;
};

struct CorpusGroupResult {
  std::string name;
  std::size_t order = 0;
  std::size_t maps = 0;
  std::size_t burnside_failures = 0;
  std::size_t congruence_failures = 0;
  std::vector<std::string> failure_details;
};

struct CorpusSummary {
  std::vector<CorpusGroupResult> groups;

  std::size_t pairs() const;
  std::size_t failures() const;
};

/// burnside_check and finite_group_congruence_suite over every (group,
/// endomorphism) pair. Results are in corpus order for any job count.
CorpusSummary run_corpus(const CorpusOptions& options);

}  // namespace twb
