#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "twb/errors.hpp"
#include "twb/json_io.hpp"

using nlohmann::json;
using namespace twb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  EXPECT_EQ(r.code, expect_code) << r.err;
  return json::parse(r.out);
}

const char* kS3 = R"({"kind":"builtin","name":"symmetric","params":[3]})";

}  // namespace

TEST(JsonIo, ParseGroups) {
  EXPECT_EQ(json_io::parse_group(json::parse(R"({"kind":"cayley","table":[[0,1],[1,0]]})")).order(), 2u);
  EXPECT_EQ(json_io::parse_group(json::parse(R"({"kind":"permutation","degree":3,"generators":[[1,2,0],[1,0,2]]})"))
                .order(),
            6u);
  EXPECT_EQ(json_io::parse_group(json::parse(
                                     R"({"kind":"builtin","name":"direct_product","params":[
                  {"kind":"builtin","name":"cyclic","params":[2]},{"kind":"builtin","name":"cyclic","params":[3]}]})"))
                .order(),
            6u);
  EXPECT_THROW(json_io::parse_group(json::parse(R"({"kind":"lie"})")), Error);
  EXPECT_THROW(json_io::parse_group(json::parse(R"({"table":[[0]]})")), Error);
  EXPECT_THROW(json_io::parse_group(json::parse(R"({"kind":"cayley","table":[[0,-1],[1,0]]})")), Error);
}

TEST(JsonIo, ParseMapsAndMatrices) {
  auto G = cyclic_group(3);
  EXPECT_EQ(json_io::parse_map(G, nullptr), GroupMap::identity(G));
  EXPECT_EQ(json_io::parse_map(G, json::parse(R"({"image":[0,2,1]})")).image(), (std::vector<Elem>{0, 2, 1}));
  EXPECT_EQ(json_io::parse_map(G, json::parse(R"({"generators":[1],"images":[2]})")).image(),
            (std::vector<Elem>{0, 2, 1}));
  auto m = json_io::parse_matrix(json::parse(R"([[1,"123456789012345678901234567890"],[0,1]])"));
  EXPECT_EQ(m(0, 1), parse_bigint("123456789012345678901234567890"));
  EXPECT_THROW(json_io::parse_matrix(json::parse("[[1,2,3],[4,5,6]]")), Error);
  auto seq = json_io::parse_sequence(json::parse(R"([1,"infinite","7"])"));
  EXPECT_TRUE(seq.at(2).is_infinite());
  EXPECT_EQ(seq.at(3), ReidemeisterValue(7));
}

TEST(JsonIo, OutputUsesStringsForBigValues) {
  EXPECT_EQ(json_io::to_json(ReidemeisterValue::infinite()), json("infinite"));
  EXPECT_EQ(json_io::to_json(ReidemeisterValue(12)), json("12"));
  auto c = json_io::to_json(Cyclotomic::root_of_unity(3, 1) * BigRational(1, 2));
  EXPECT_EQ(c["order"], 3);
  EXPECT_EQ(c["coeffs"], json::parse(R"(["0","1/2"])"));
}

TEST(Cli, ClassesSymmetricIdentity) {
  auto j = run_json({"classes", "--json", std::string(R"({"group":)") + kS3 + "}"});
  EXPECT_EQ(j["R"], 3);
  EXPECT_EQ(j["classes"].size(), 3u);
  auto table = run({"classes", "--json", std::string(R"({"group":)") + kS3 + "}"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("R = 3"), std::string::npos);
}

TEST(Cli, ClassesInversionAndStdin) {
  const std::string input = R"({"group":{"kind":"builtin","name":"cyclic","params":[3]},
                               "map":{"generators":[1],"images":[2]}})";
  auto r = run({"classes", "--input", "-", "--format", "json"}, input);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["R"], 1);
}

TEST(Cli, MalformedInputExitsOne) {
  auto r = run({"classes", "--json", "{not json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("InvalidInput"), std::string::npos);
  EXPECT_EQ(run({"classes", "--json", R"({"group":{"kind":"nope"}})"}).code, 1);
  EXPECT_EQ(run({"classes"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"classes", "--input", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"torus", "--json", "[[1,2]]"}).code, 1);
  EXPECT_EQ(run({"extension", "--json", R"({"theta":[[2,1],[1,1]],"B":[[1,0],[0,1]],"eps":-1})"}).code, 1);
}

TEST(Cli, Burnside) {
  auto j = run_json({"burnside", "--json", std::string(R"({"group":)") + kS3 + R"(,"map":{"image":[0,1,5,4,3,2]}})"});
  // conjugation by (1 2)
  EXPECT_EQ(j["equal"], true);
  EXPECT_EQ(j["R"], j["S"]);
  auto z4 = run_json(
      {"burnside", "--json", R"({"group":{"kind":"builtin","name":"cyclic","params":[4]},"map":{"image":[0,2,0,2]}})"});
  EXPECT_EQ(z4, json::parse(R"({"R":1,"S":1,"equal":true})"));
  auto triv = run_json({"burnside", "--json", R"({"group":{"kind":"cayley","table":[[0]]}})"});
  EXPECT_EQ(triv, json::parse(R"({"R":1,"S":1,"equal":true})"));
}

TEST(Cli, CorpusSmallAndFault) {
  auto one = run_json({"corpus", "--max-order", "1"});
  EXPECT_EQ(one["groups"].size(), 1u);
  EXPECT_EQ(one["pairs"], 1);
  EXPECT_EQ(one["failures"], 0);

  auto a = run({"corpus", "--max-order", "8", "--format", "json"});
  auto b = run({"corpus", "--max-order", "8", "--format", "json", "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  auto bad = run({"corpus", "--max-order", "6", "--inject-fault"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Abelian) {
  auto j = run_json({"abelian", "--json", R"({"rank":1,"torsion":[],"matrix":[[-1]]})", "--n-max", "4"});
  EXPECT_EQ(j["R"], "2");
  EXPECT_EQ(j["sequence"], json::parse(R"(["2","infinite","2","infinite"])"));
  EXPECT_EQ(j["representatives"], json::parse(R"([["0"],["1"]])"));
  auto inf = run_json({"abelian", "--json", R"({"rank":2,"matrix":[[1,0],[0,1]]})"});
  EXPECT_EQ(inf["R"], "infinite");
}

TEST(Cli, ExtensionQuarterTurnExample) {
  auto r = run({"extension", "--json", R"({"k":2,"theta":[[2,1],[1,1]],"B":[[0,1],[-1,0]],"eps":-1})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("R = 4"), std::string::npos);
  auto j = run_json({"extension", "--json", R"({"theta":[[2,1],[1,1]],"B":[[0,1],[-1,0]],"eps":-1})"});
  EXPECT_EQ(j["R"], "4");
  EXPECT_EQ(j["representatives"].size(), 4u);
}

TEST(Cli, TorusAndCongruence) {
  auto j = run_json({"torus", "--json", R"({"matrix":[[2,1],[1,1]]})", "--n-max", "3"});
  EXPECT_EQ(j["values"], json::parse(R"(["1","5","16"])"));
  auto c = run_json({"congruence", "--json", R"({"matrix":[[2,1],[1,1]]})"});
  EXPECT_EQ(c["all_pass"], true);
  EXPECT_EQ(c["entries"].size(), 12u);
  auto bad = run_json({"congruence", "--json", R"({"sequence":[1,5,17]})"}, 2);
  EXPECT_EQ(bad["entries"][2]["passes"], false);
  EXPECT_EQ(bad["entries"][2]["P_n"], "16");
  auto mixed = run_json({"congruence", "--json", R"([2,"infinite",2,"infinite"])"});
  EXPECT_EQ(mixed["all_pass"], false);
  EXPECT_EQ(mixed["finite_entries_pass"], true);
  EXPECT_TRUE(mixed["entries"][1]["P_n"].is_null());
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"burnside", "--json", std::string(R"({"group":)") + kS3 + "}", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
