#include "twb/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "twb/character_table.hpp"
#include "twb/errors.hpp"
#include "twb/mobius.hpp"

namespace twb {

namespace {

struct Recipe {
  std::string name;
  std::size_t order;
  std::function<FiniteGroup()> make;
};

std::vector<Recipe> recipes() {
  std::vector<Recipe> out;
  for (std::size_t n = 1; n <= 24; ++n)
    out.push_back({"cyclic(" + std::to_string(n) + ")", n, [n] { return cyclic_group(n); }});
  for (std::size_t n = 3; n <= 8; ++n)
    out.push_back({"dihedral(" + std::to_string(n) + ")", 2 * n, [n] { return dihedral_group(n); }});
  out.push_back({"symmetric(3)", 6, [] { return symmetric_group(3); }});
  out.push_back({"symmetric(4)", 24, [] { return symmetric_group(4); }});
  out.push_back({"alternating(4)", 12, [] { return alternating_group(4); }});
  out.push_back({"quaternion8", 8, [] { return quaternion_group(); }});
  out.push_back({"abelian(2,4)", 8, [] { return abelian_group(std::vector<std::size_t>{2, 4}); }});
  out.push_back({"abelian(2,2,2)", 8, [] { return abelian_group(std::vector<std::size_t>{2, 2, 2}); }});
  return out;
}

CorpusGroupResult check_group(const CorpusGroup& entry, const CorpusOptions& options) {
  CorpusGroupResult result{entry.name, entry.group.order(), 0, 0, 0, {}};
  const CharacterTable table = character_table(entry.group);
  const auto maps = enumerate_endomorphisms(entry.group, options.automorphisms_only);
  result.maps = maps.size();
  for (std::size_t m = 0; m < maps.size(); ++m) {
    BurnsideReport report = burnside_check(table, maps[m]);
    if (options.inject_fault) report.fixed_points += 1;
    if (!report.equal()) {
      ++result.burnside_failures;
      result.failure_details.push_back(entry.name + " map " + std::to_string(m) + ": R=" +
                                       std::to_string(report.reidemeister) + " S=" + std::to_string(report.fixed_points));
    }
    const CongruenceReport congruences = finite_group_congruence_suite(maps[m], options.n_max);
    if (!congruences.all_pass()) {
      ++result.congruence_failures;
      std::string ns;
      for (std::size_t n : congruences.failures()) ns += " " + std::to_string(n);
      result.failure_details.push_back(entry.name + " map " + std::to_string(m) + ": congruence fails at n =" + ns);
    }
  }
  return result;
}

}  // namespace

std::vector<CorpusGroup> builtin_corpus(std::size_t max_order) {
  std::vector<CorpusGroup> out;
  for (const auto& r : recipes())
    if (r.order <= max_order) out.push_back({r.name, r.make()});
  return out;
}

std::size_t CorpusSummary::pairs() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.maps;
  return n;
}

std::size_t CorpusSummary::failures() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.burnside_failures + g.congruence_failures;
  return n;
}

CorpusSummary run_corpus(const CorpusOptions& options) {
  const auto corpus = builtin_corpus(options.max_order);
  CorpusSummary summary;
  summary.groups.resize(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        summary.groups[i] = check_group(corpus[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, corpus.size()));
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return summary;
}

}  // namespace twb
