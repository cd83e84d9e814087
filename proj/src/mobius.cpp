#include "twb/mobius.hpp"

#include "twb/errors.hpp"
#include "twb/twisted.hpp"

namespace twb {

namespace {

std::optional<BigInt> periodic_count(const ReidemeisterSequence& seq, std::size_t n) {
  BigInt sum = 0;
  for (std::size_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const ReidemeisterValue& r = seq.at(n / d);
    if (r.is_infinite()) return std::nullopt;
    sum += mu * r.value();
  }
  return sum;
}

CongruenceEntry judge(std::size_t n, std::optional<BigInt> p) {
  CongruenceEntry entry{n, std::move(p), false};
  if (entry.periodic_count) entry.passes = *entry.periodic_count >= 0 && *entry.periodic_count % n == 0;
  return entry;
}

}  // namespace

int mobius(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "mobius is defined for d >= 1");
  int sign = 1;
  for (std::size_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<BigInt> periodic_class_counts(const ReidemeisterSequence& seq) {
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= seq.length(); ++n) {
    auto p = periodic_count(seq, n);
    if (!p) throw Error(ErrorCode::InfiniteEntry, "P_" + std::to_string(n) + " needs an infinite Reidemeister number");
    out.push_back(std::move(*p));
  }
  return out;
}

bool CongruenceReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.passes) return false;
  return true;
}

bool CongruenceReport::finite_entries_pass() const {
  for (const auto& e : entries)
    if (e.periodic_count && !e.passes) return false;
  return true;
}

std::vector<std::size_t> CongruenceReport::failures() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries)
    if (e.periodic_count && !e.passes) out.push_back(e.n);
  return out;
}

CongruenceReport congruence_check(const ReidemeisterSequence& seq) {
  CongruenceReport report;
  auto counts = periodic_class_counts(seq);
  for (std::size_t n = 1; n <= counts.size(); ++n) report.entries.push_back(judge(n, std::move(counts[n - 1])));
  return report;
}

CongruenceReport congruence_check_partial(const ReidemeisterSequence& seq) {
  CongruenceReport report;
  for (std::size_t n = 1; n <= seq.length(); ++n) report.entries.push_back(judge(n, periodic_count(seq, n)));
  return report;
}

ReidemeisterSequence torus_map_reidemeister(const IntegerMatrix& a, std::size_t n_max) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidInput, "torus map matrix must be square");
  ReidemeisterSequence seq{{}, "torus " + a.to_string()};
  const IntegerMatrix id = IntegerMatrix::identity(a.rows());
  IntegerMatrix power = id;
  for (std::size_t n = 1; n <= n_max; ++n) {
    power = power * a;
    BigInt det = determinant(id - power);
    if (det == 0) seq.values.push_back(ReidemeisterValue::infinite());
    else seq.values.push_back(det < 0 ? BigInt(-det) : det);
  }
  return seq;
}

ReidemeisterSequence finite_group_sequence(const GroupMap& phi, std::size_t n_max) {
  ReidemeisterSequence seq{{}, "finite group of order " + std::to_string(phi.source().order())};
  GroupMap power = GroupMap::identity(phi.source());
  for (std::size_t n = 1; n <= n_max; ++n) {
    power = phi.after(power);
    seq.values.emplace_back(static_cast<long long>(reidemeister_number(power)));
  }
  return seq;
}

CongruenceReport finite_group_congruence_suite(const GroupMap& phi, std::size_t n_max) {
  return congruence_check(finite_group_sequence(phi, n_max));
}

}  // namespace twb
