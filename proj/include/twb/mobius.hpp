#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twb/bigint.hpp"
#include "twb/group_map.hpp"
#include "twb/integer_matrix.hpp"

namespace twb {

/// Moebius function by trial division.
int mobius(std::size_t d);

/// Divisors of n in increasing order.
std::vector<std::size_t> divisors(std::size_t n);

/// R(phi^n) for n = 1..values.size().
struct ReidemeisterSequence {
  std::vector<ReidemeisterValue> values;
  std::string source;

  std::size_t length() const noexcept { return values.size(); }
  /// R(phi^n), 1-based.
  const ReidemeisterValue& at(std::size_t n) const { return values.at(n - 1); }
};

/// P_n = sum_{d|n} mu(d) R(phi^(n/d)) for n = 1..length. Throws
/// InfiniteEntry naming the first n whose sum needs an infinite value.
std::vector<BigInt> periodic_class_counts(const ReidemeisterSequence& seq);

struct CongruenceEntry {
  std::size_t n = 0;
  std::optional<BigInt> periodic_count;  // empty when a needed R value is infinite
  bool passes = false;                   // P_n >= 0 and n | P_n
};

struct CongruenceReport {
  std::vector<CongruenceEntry> entries;

  /// Every entry finite and passing.
  bool all_pass() const;
  /// Every finite entry passes; infinite ones are skipped.
  bool finite_entries_pass() const;
  std::vector<std::size_t> failures() const;
};

/// Strict check: throws InfiniteEntry if any needed value is infinite.
CongruenceReport congruence_check(const ReidemeisterSequence& seq);

/// Infinite values only poison the n whose divisor sums need them.
CongruenceReport congruence_check_partial(const ReidemeisterSequence& seq);

/// R(f^n) = |det(I - A^n)| for the torus map inducing A on Z^k.
ReidemeisterSequence torus_map_reidemeister(const IntegerMatrix& a, std::size_t n_max);

/// R(phi^n) by orbit counting, then the strict congruence check.
CongruenceReport finite_group_congruence_suite(const GroupMap& phi, std::size_t n_max);

/// R(phi^n) for n = 1..n_max by orbit counting.
ReidemeisterSequence finite_group_sequence(const GroupMap& phi, std::size_t n_max);

}  // namespace twb
