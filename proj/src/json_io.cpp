#include "twb/json_io.hpp"

#include <string>

#include "twb/errors.hpp"

namespace twb::json_io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) invalid("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing field '") + key + "'");
  return *it;
}

long long as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) invalid(what + " must be an integer");
  return j.get<long long>();
}

std::size_t as_index(const json& j, const std::string& what) {
  const long long v = as_int(j, what);
  if (v < 0) invalid(what + " must be nonnegative");
  return std::size_t(v);
}

BigInt as_bigint(const json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  invalid(what + " must be an integer or a decimal string");
}

std::vector<Elem> index_list(const json& j, const std::string& what) {
  if (!j.is_array()) invalid(what + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(Elem(as_index(v, what + " entry")));
  return out;
}

}  // namespace

FiniteGroup parse_group(const json& j, const GroupOptions& options) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) invalid("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "cayley") {
    const json& t = field(j, "table");
    if (!t.is_array()) invalid("'table' must be an array of rows");
    std::vector<std::vector<Elem>> table;
    for (const auto& row : t) table.push_back(index_list(row, "table row"));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      for (const auto& l : j.at("labels")) {
        if (!l.is_string()) invalid("labels must be strings");
        labels.push_back(l.get<std::string>());
      }
    }
    return FiniteGroup::from_cayley(table, std::move(labels), options);
  }
  if (k == "permutation") {
    const std::size_t degree = as_index(field(j, "degree"), "degree");
    const json& gens = field(j, "generators");
    if (!gens.is_array()) invalid("'generators' must be an array");
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& g : gens) {
      std::vector<std::size_t> p;
      for (Elem v : index_list(g, "permutation")) p.push_back(v);
      perms.push_back(std::move(p));
    }
    return FiniteGroup::from_permutations(degree, perms, options);
  }
  if (k == "builtin") {
    const json& name = field(j, "name");
    if (!name.is_string()) invalid("'name' must be a string");
    const json params = j.contains("params") ? j.at("params") : json::array();
    if (!params.is_array()) invalid("'params' must be an array");
    if (name.get<std::string>() == "direct_product") {
      if (params.size() != 2) invalid("direct_product takes two group descriptors");
      return direct_product(parse_group(params[0], options), parse_group(params[1], options), options);
    }
    std::vector<long long> ints;
    for (const auto& p : params) ints.push_back(as_int(p, "builtin parameter"));
    return builtin_group(name.get<std::string>(), ints, options);
  }
  invalid("unknown group kind '" + k + "'");
}

GroupMap parse_map(const FiniteGroup& group, const json& j) {
  if (j.is_null()) return GroupMap::identity(group);
  if (!j.is_object()) invalid("map descriptor must be an object");
  if (j.contains("image")) {
    return GroupMap::from_image(group, group, index_list(j.at("image"), "image"));
  }
  const auto gens = index_list(field(j, "generators"), "generators");
  const auto images = index_list(field(j, "images"), "images");
  return endo_from_images(group, gens, images);
}

IntegerMatrix parse_matrix(const json& j) {
  if (!j.is_array()) invalid("matrix must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) invalid("matrix rows must be arrays");
    std::vector<BigInt> r;
    for (const auto& v : row) r.push_back(as_bigint(v, "matrix entry"));
    if (!rows.empty() && r.size() != rows.front().size()) invalid("matrix rows differ in length");
    rows.push_back(std::move(r));
  }
  IntegerMatrix m(rows);
  if (!m.is_square()) invalid("matrix must be square");
  return m;
}

AbelianEndo parse_abelian(const json& j) {
  const std::size_t rank = as_index(field(j, "rank"), "rank");
  std::vector<BigInt> torsion;
  if (j.contains("torsion")) {
    if (!j.at("torsion").is_array()) invalid("'torsion' must be an array");
    for (const auto& d : j.at("torsion")) torsion.push_back(as_bigint(d, "torsion invariant"));
  }
  FgAbelianGroup group(rank, std::move(torsion));
  return AbelianEndo(std::move(group), parse_matrix(field(j, "matrix")));
}

std::pair<LatticeExtensionGroup, ExtensionEndo> parse_extension(const json& j) {
  LatticeExtensionGroup group(parse_matrix(field(j, "theta")));
  if (j.contains("k") && as_index(j.at("k"), "k") != group.rank()) invalid("'k' does not match theta");
  const long long eps = as_int(field(j, "eps"), "eps");
  auto endo = validate_extension_endo(group, parse_matrix(field(j, "B")), int(eps));
  return {std::move(group), std::move(endo)};
}

ReidemeisterSequence parse_sequence(const json& j) {
  if (!j.is_array()) invalid("sequence must be an array");
  ReidemeisterSequence seq{{}, "input sequence"};
  for (const auto& v : j) {
    if (v.is_string() && v.get<std::string>() == "infinite") seq.values.push_back(ReidemeisterValue::infinite());
    else seq.values.emplace_back(as_bigint(v, "sequence entry"));
  }
  return seq;
}

json to_json(const BigInt& value) { return value.str(); }

json to_json(const ReidemeisterValue& value) { return value.to_string(); }

json to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const Cyclotomic& value) {
  json coeffs = json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(c.str());
  return {{"order", value.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const FiniteGroup& group, const TwistedPartition& partition) {
  json classes = json::array();
  for (std::size_t c = 0; c < partition.count(); ++c) {
    classes.push_back({{"rep", partition.class_reps[c]},
                       {"label", group.label(partition.class_reps[c])},
                       {"size", partition.class_sizes[c]}});
  }
  return {{"order", group.order()}, {"R", partition.count()}, {"classes", std::move(classes)}};
}

json to_json(const CharacterTable& table) {
  json chars = json::array();
  for (const auto& row : table.chars) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    chars.push_back(std::move(r));
  }
  return {{"order", table.group.order()},
          {"exponent", table.classes.exponent},
          {"prime", table.prime},
          {"class_reps", table.classes.reps},
          {"class_sizes", table.classes.sizes},
          {"degrees", table.degrees},
          {"characters", std::move(chars)}};
}

json to_json(const CharacterTable& table, const std::vector<DualImage>& action) {
  json out = json::array();
  for (std::size_t i = 0; i < action.size(); ++i) {
    const auto& a = action[i];
    json entry{{"character", i}, {"degree", table.degrees[i]}};
    switch (a.kind) {
      case DualImage::Kind::FixedBy: entry["kind"] = "fixed"; entry["index"] = a.index; break;
      case DualImage::Kind::MappedTo: entry["kind"] = "mapped"; entry["index"] = a.index; break;
      case DualImage::Kind::Reducible: entry["kind"] = "reducible"; break;
    }
    json m = json::array();
    for (const auto& v : a.multiplicities) m.push_back(v.str());
    entry["multiplicities"] = std::move(m);
    out.push_back(std::move(entry));
  }
  return out;
}

json to_json(const BurnsideReport& report) {
  return {{"R", report.reidemeister}, {"S", report.fixed_points}, {"equal", report.equal()}};
}

json to_json(const CongruenceReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"n", e.n},
                       {"P_n", e.periodic_count ? json(e.periodic_count->str()) : json(nullptr)},
                       {"passes", e.passes}});
  }
  return {{"all_pass", report.all_pass()}, {"finite_entries_pass", report.finite_entries_pass()},
          {"entries", std::move(entries)}};
}

json to_json(const ReidemeisterSequence& seq) {
  json values = json::array();
  for (const auto& v : seq.values) values.push_back(to_json(v));
  return {{"source", seq.source}, {"values", std::move(values)}};
}

}  // namespace twb::json_io
