#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twb/abelian.hpp"
#include "twb/character_table.hpp"
#include "twb/corpus.hpp"
#include "twb/errors.hpp"
#include "twb/json_io.hpp"
#include "twb/lattice_extension.hpp"
#include "twb/mobius.hpp"
#include "twb/twisted.hpp"

namespace twb::cli {

namespace {

using nlohmann::json;
namespace jio = twb::json_io;

// Largest R for which the abelian command lists representatives.
constexpr std::size_t kMaxListedReps = 1000;

struct Job {
  std::string command;
  std::string input_path;
  std::string inline_json;
  std::string format = "table";
  std::size_t n_max = 12;
  std::size_t max_order = 24;
  std::size_t jobs = 1;
  bool automorphisms_only = false;
  bool inject_fault = false;
};

struct Result {
  json payload;
  std::string table;
  int code = kExitOk;
};

json read_input(const Job& job, std::istream& in) {
  std::string text;
  if (!job.inline_json.empty()) {
    text = job.inline_json;
  } else if (job.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (!job.input_path.empty()) {
    std::ifstream f(job.input_path);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open input file '" + job.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  } else {
    throw Error(ErrorCode::InvalidInput, "command '" + job.command + "' needs --input or --json");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::InvalidInput, std::string("input needs a '") + key + "' field");
  return j.at(key);
}

std::string join_values(const std::vector<ReidemeisterValue>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].to_string();
  return s;
}

std::string vec_string(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Result cmd_classes(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  const FiniteGroup G = jio::parse_group(require(input, "group"));
  const GroupMap phi = jio::parse_map(G, input.value("map", json(nullptr)));
  const TwistedPartition part = twisted_classes(phi);
  Result r;
  r.payload = jio::to_json(G, part);
  std::ostringstream t;
  t << "order " << G.order() << "\n";
  t << "class  rep  size  label\n";
  for (std::size_t c = 0; c < part.count(); ++c)
    t << c << "  " << part.class_reps[c] << "  " << part.class_sizes[c] << "  " << G.label(part.class_reps[c]) << "\n";
  t << "R = " << part.count() << "\n";
  r.table = t.str();
  return r;
}

Result cmd_burnside(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  const FiniteGroup G = jio::parse_group(require(input, "group"));
  const GroupMap phi = jio::parse_map(G, input.value("map", json(nullptr)));
  const CharacterTable table = character_table(G);
  const BurnsideReport report = burnside_check(table, phi);
  Result r;
  r.payload = jio::to_json(report);
  std::ostringstream t;
  t << "R = " << report.reidemeister << "\nS = " << report.fixed_points << "\n"
    << (report.equal() ? "equal" : "NOT EQUAL") << "\n";
  r.table = t.str();
  r.code = report.equal() ? kExitOk : kExitViolation;
  return r;
}

Result cmd_corpus(const Job& job) {
  CorpusOptions opts;
  opts.max_order = job.max_order;
  opts.automorphisms_only = job.automorphisms_only;
  opts.n_max = job.n_max;
  opts.jobs = job.jobs;
  opts.inject_fault = job.inject_fault;
  const CorpusSummary summary = run_corpus(opts);

  Result r;
  json groups = json::array();
  json details = json::array();
  std::ostringstream t;
  t << "group                 order  maps  burnside_fail  congruence_fail\n";
  for (const auto& g : summary.groups) {
    groups.push_back({{"name", g.name},
                      {"order", g.order},
                      {"maps", g.maps},
                      {"burnside_failures", g.burnside_failures},
                      {"congruence_failures", g.congruence_failures}});
    for (const auto& d : g.failure_details) details.push_back(d);
    std::string name = g.name;
    name.resize(std::max<std::size_t>(name.size(), 20), ' ');
    t << name << "  " << g.order << "  " << g.maps << "  " << g.burnside_failures << "  " << g.congruence_failures
      << "\n";
  }
  r.payload = {{"max_order", job.max_order},
               {"n_max", job.n_max},
               {"automorphisms_only", job.automorphisms_only},
               {"groups", std::move(groups)},
               {"pairs", summary.pairs()},
               {"failures", summary.failures()},
               {"failure_details", std::move(details)}};
  t << "pairs checked: " << summary.pairs() << "\nfailures: " << summary.failures() << "\n";
  for (const auto& g : summary.groups)
    for (const auto& d : g.failure_details) t << "  " << d << "\n";
  r.table = t.str();
  r.code = summary.failures() == 0 ? kExitOk : kExitViolation;
  return r;
}

Result cmd_abelian(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  const AbelianEndo phi = jio::parse_abelian(input);
  const ReidemeisterValue R = reidemeister_abelian(phi);
  const auto seq = reidemeister_abelian_sequence(phi, job.n_max);

  Result r;
  r.payload = {{"R", jio::to_json(R)}};
  json sj = json::array();
  for (const auto& v : seq) sj.push_back(jio::to_json(v));
  r.payload["sequence"] = std::move(sj);
  std::ostringstream t;
  t << "R = " << R << "\n";
  if (R.is_finite() && R.value() <= kMaxListedReps) {
    json reps = json::array();
    t << "representatives:";
    for (const auto& rep : twisted_class_reps_abelian(phi)) {
      json v = json::array();
      for (const auto& x : rep) v.push_back(x.str());
      reps.push_back(std::move(v));
      t << " " << vec_string(rep);
    }
    t << "\n";
    r.payload["representatives"] = std::move(reps);
  }
  t << "R(phi^n), n = 1.." << job.n_max << ": " << join_values(seq) << "\n";
  r.table = t.str();
  return r;
}

Result cmd_extension(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  const auto [group, phi] = jio::parse_extension(input);
  const ReidemeisterValue R = reidemeister_extension(group, phi);

  Result r;
  r.payload = {{"R", jio::to_json(R)}};
  std::ostringstream t;
  t << "R = " << R << "\n";
  if (R.is_finite()) {
    json reps = json::array();
    json fibers = json::array();
    for (int fiber : {0, 1}) {
      const auto m = fiber_lattice(group, phi, fiber);
      fibers.push_back({{"fiber", fiber}, {"index", jio::to_json(cokernel_order(FgAbelianGroup::free(group.rank()), m))}});
    }
    t << "representatives:";
    for (const auto& rep : fiber_class_reps(group, phi)) {
      json v = json::array();
      for (const auto& x : rep.v) v.push_back(x.str());
      reps.push_back({{"v", std::move(v)}, {"n", rep.fiber}});
      t << " (" << vec_string(rep.v) << ", " << rep.fiber << ")";
    }
    t << "\n";
    r.payload["fibers"] = std::move(fibers);
    r.payload["representatives"] = std::move(reps);
  }
  r.table = t.str();
  return r;
}

IntegerMatrix torus_matrix(const json& input) {
  return jio::parse_matrix(input.is_object() ? require(input, "matrix") : input);
}

Result cmd_torus(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  const auto seq = torus_map_reidemeister(torus_matrix(input), job.n_max);
  Result r;
  r.payload = jio::to_json(seq);
  std::ostringstream t;
  for (std::size_t n = 1; n <= seq.length(); ++n) t << "R(f^" << n << ") = " << seq.at(n) << "\n";
  r.table = t.str();
  return r;
}

Result cmd_congruence(const Job& job, std::istream& in) {
  const json input = read_input(job, in);
  ReidemeisterSequence seq;
  if (input.is_object() && input.contains("sequence")) seq = jio::parse_sequence(input.at("sequence"));
  else if (input.is_array() && (input.empty() || !input.front().is_array())) seq = jio::parse_sequence(input);
  else seq = torus_map_reidemeister(torus_matrix(input), job.n_max);
  const CongruenceReport report = congruence_check_partial(seq);

  Result r;
  r.payload = jio::to_json(report);
  std::ostringstream t;
  t << "n  P_n  n | P_n\n";
  for (const auto& e : report.entries) {
    t << e.n << "  " << (e.periodic_count ? e.periodic_count->str() : std::string("-")) << "  "
      << (e.periodic_count ? (e.passes ? "yes" : "NO") : "skipped (infinite R)") << "\n";
  }
  t << (report.finite_entries_pass() ? "all finite entries pass" : "congruence violated") << "\n";
  r.table = t.str();
  r.code = report.finite_entries_pass() ? kExitOk : kExitViolation;
  return r;
}

Result dispatch(const Job& job, std::istream& in) {
  if (job.command == "classes") return cmd_classes(job, in);
  if (job.command == "burnside") return cmd_burnside(job, in);
  if (job.command == "corpus") return cmd_corpus(job);
  if (job.command == "abelian") return cmd_abelian(job, in);
  if (job.command == "extension") return cmd_extension(job, in);
  if (job.command == "torus") return cmd_torus(job, in);
  return cmd_congruence(job, in);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Twisted conjugacy classes, Reidemeister numbers and twisted Burnside checks", "twb"};
  app.require_subcommand(1);

  auto add_io = [&job](CLI::App* sub) {
    auto* input = sub->add_option("--input", job.input_path, "JSON input file, - for stdin");
    sub->add_option("--json", job.inline_json, "inline JSON input")->excludes(input);
  };
  auto add_common = [&job](CLI::App* sub) {
    sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };

  std::vector<std::pair<std::string, std::string>> commands{
      {"classes", "twisted conjugacy classes of an endomorphism of a finite group"},
      {"burnside", "compare R(phi) with the number of irreducible characters fixed by phi"},
      {"corpus", "burnside and congruence checks over every endomorphism of the built-in groups"},
      {"abelian", "Reidemeister number of an endomorphism of a finitely generated abelian group"},
      {"extension", "Reidemeister number on Z^k x| Z for phi(v, n) = (B v, eps n)"},
      {"torus", "R(f^n) = |det(I - A^n)| for a torus map"},
      {"congruence", "Moebius congruences for a Reidemeister sequence or torus matrix"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name != "corpus") add_io(sub);
    if (name == "abelian" || name == "torus" || name == "congruence" || name == "corpus")
      sub->add_option("--n-max", job.n_max, "largest iterate")->check(CLI::Range(1, 100000));
    if (name == "corpus") {
      sub->add_option("--max-order", job.max_order, "largest group order in the sweep");
      sub->add_option("--jobs", job.jobs, "worker threads")->check(CLI::Range(1, 256));
      sub->add_flag("--automorphisms-only", job.automorphisms_only, "only bijective maps");
      sub->add_flag("--inject-fault", job.inject_fault, "corrupt every fixed-point count (self-test)");
    }
    sub->callback([&job, name = name] { job.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    const Result r = dispatch(job, in);
    if (job.format == "json") out << r.payload.dump(2) << "\n";
    else out << r.table;
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool defect = e.code() == ErrorCode::InternalDefect || e.code() == ErrorCode::LiftFailure;
    return defect ? kExitViolation : kExitInvalid;
  } catch (const json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace twb::cli
