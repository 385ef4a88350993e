#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rootaut/cli.hpp"
#include "rootaut/serialize.hpp"

using namespace rootaut;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = cli(args);
  EXPECT_EQ(r.status, 0) << r.err << r.out;
  return Json::parse(r.out);
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(CliExamples, AutD4) {
  auto r = cli({"aut", "--type", "D", "--rank", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "|Aut(DD)|  6"));
  auto j = cli_json({"aut", "--type", "D4"});
  EXPECT_EQ(j["diagram_order"], 6);
  EXPECT_EQ(j["aut_order"], 1152);
}

TEST(CliExamples, IsocheckSuSp) {
  auto r = cli({"--seed-catalogue", "isocheck", "su(2,3)", "sp(2,3)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "not isomorphic"));
  EXPECT_TRUE(has(r.out, "BC2[2,(2,1)]"));
  EXPECT_TRUE(has(r.out, "BC2[4,(4,3)]"));
  auto j = cli_json({"--seed-catalogue", "isocheck", "su(2,3)", "sp(2,3)"});
  EXPECT_FALSE(j["isomorphic"].get<bool>());
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["catalogue"], "built-in seed");
}

TEST(CliExamples, MinusIdE6) {
  auto r = cli({"minusid", "--type", "E", "--rank", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "opposition involution nontrivial"));
  EXPECT_TRUE(has(cli({"minusid", "--type", "E7"}).out, "opposition involution trivial"));
}

TEST(CliExamples, IsomorphicWitness) {
  auto j = cli_json({"isocheck", "sp(2,R)+sl(3,R)", "sl(3,R)+so(2,3)"});
  EXPECT_TRUE(j["isomorphic"].get<bool>());
  ASSERT_FALSE(j["witness"].is_null());
  EXPECT_EQ(j["witness"]["simple_map"].size(), 4u);
}

TEST(CliExamples, VerifyLiftAndSymspace) {
  auto j = cli_json({"verify-lift", "su(1,2)"});
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["type"], "BC1");
  EXPECT_EQ(j["omega"]["expected_order"], 2);
  auto s = cli_json({"symspace", "sl(3,R):1,sl(3,R):2", "--boundary", "1000", "0010"});
  EXPECT_EQ(s["autw_sigma_order"], 144);
  EXPECT_EQ(s["autw_diagram_order"], 4);
  EXPECT_FALSE(s["almost_killing"].get<bool>());
  EXPECT_FALSE(s["boundary"]["congruent"].get<bool>());
  auto human = cli({"symspace", "sl(3,R):1,sl(3,R):2", "--boundary", "1000", "0010"});
  EXPECT_TRUE(has(human.out, "no witness under Aut^w(DD)_M"));
}

TEST(CliExamples, CatalogueListing) {
  auto r = cli({"catalogue"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "su(2,3)"));
  EXPECT_TRUE(has(r.out, "paper-stated"));
  auto j = cli_json({"--seed-catalogue", "catalogue", "sl(3,H)"});
  EXPECT_EQ(j["entries"][0]["weights"], "4,4");
}

TEST(CliStatus, UsageErrors) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{}, {"frobnicate"}, {"aut"}, {"aut", "--type", "Q4"}, {"aut", "--type", "A0"},
        {"aut", "--type", "A2", "--sum", "A1"}, {"isocheck", "su(2,3)"}, {"--cap", "x", "aut", "--type", "A2"},
        {"verify-lift", "su(1,2)", "--tol", "-1"}, {"symspace", "sl(3,R):1", "--boundary", "1"},
        {"symspace", "sl(3,R):1", "--boundary", "100", "01"}, {"symspace", "sl(3,R):zero"},
        {"--seed-catalogue", "--catalogue", "x", "catalogue"}, {"construct", "--type", "A2", "--scale", "0"},
        {"decompose", "--file", "/nonexistent/roots.json"}}) {
    auto r = cli(args);
    EXPECT_EQ(r.status, 2) << ::testing::PrintToString(args) << r.out;
    EXPECT_TRUE(has(r.err, "Usage")) << ::testing::PrintToString(args);
  }
}

TEST(CliStatus, Refusals) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--cap", "100", "weyl", "--type", "E6"},
        {"isocheck", "su(3)", "su(1,2)"},
        {"isocheck", "xx(1,2)", "su(1,2)"},
        {"--catalogue", "/nonexistent/catalogue.txt", "catalogue"},
        {"verify-lift", "so(2,5)"},
        {"symspace", "su(4)"}}) {
    auto r = cli(args);
    EXPECT_EQ(r.status, 1) << ::testing::PrintToString(args);
    EXPECT_TRUE(has(r.err, "refused (")) << r.err;
  }
  auto r = cli({"--json", "--cap", "100", "weyl", "--type", "E6"});
  EXPECT_EQ(r.status, 1);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "size");
}

TEST(CliStatus, Help) {
  auto r = cli({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "verify-lift"));
}

TEST(CliRoundTrip, ConstructThenDecompose) {
  auto j = cli_json({"construct", "--sum", "B2+G2", "--scale", "1/2"});
  auto sys = root_system_from_json(j["system"]);
  EXPECT_EQ(sys.size(), 20);
  const auto path = std::filesystem::temp_directory_path() / "rootaut_cli_roots.json";
  {
    std::ofstream f(path);
    f << j["system"].dump();
  }
  auto d = cli_json({"decompose", "--file", path.string()});
  EXPECT_EQ(root_system_from_json(d["system"]).roots(), sys.roots());
  ASSERT_EQ(d["components"].size(), 2u);
  EXPECT_EQ(d["components"][0]["type"], "B2");
  std::filesystem::remove(path);
}

TEST(CliRoundTrip, WeylElementsAndDiagrams) {
  auto j = cli_json({"weyl", "--type", "B3", "--elements"});
  auto sys = root_system_from_json(j["system"]);
  auto ss = simple_system(sys);
  EXPECT_EQ(j["elements"].size(), 48u);
  for (const auto& e : j["elements"]) EXPECT_NO_THROW(weyl_element_from_json(ss, e));
  auto w0 = weyl_element_from_json(ss, j["longest"]);
  EXPECT_EQ(w0.perm, longest_element(ss).perm);

  auto a = cli_json({"aut", "--type", "E6"});
  auto dd = diagram_from_json(a["diagram"]);
  EXPECT_EQ(dd.cartan, diagram(simple_system(build_irreducible(RootType::E, 6))).cartan);
  for (const auto& s : a["diagram_automorphisms"]) EXPECT_NO_THROW(diagram_isomorphism_from_json(s));

  auto m = cli_json({"minusid", "--type", "A3"});
  EXPECT_EQ(diagram_isomorphism_from_json(m["involution"]).image, (std::vector<int>{2, 1, 0}));

  auto i = cli_json({"isocheck", "su(2,3)", "sp(2,3)"});
  auto wd = weighted_diagram_from_json(i["left"]["diagram"]);
  EXPECT_EQ(to_string(wd.weights), "2,(2,1)");
  EXPECT_EQ(root_system_from_json(i["right"]["system"]).size(), 12);
}

TEST(CliDeterminism, RepeatedRunsMatch) {
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "aut", "--type", "F4"},
                                        {"verify-lift", "sl(3,R)"},
                                        {"symspace", "sl(2,R),sl(2,R):2,sl(2,R)"},
                                        {"catalogue"}}) {
    auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, 0);
  }
}
