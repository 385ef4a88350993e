#include <gtest/gtest.h>

#include "rootaut/catalogue.hpp"
#include "rootaut/errors.hpp"
#include "rootaut/serialize.hpp"

using namespace rootaut;

namespace {

std::vector<TypeTag> small_types(int max_rank) {
  std::vector<TypeTag> out;
  for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E, RootType::F, RootType::G,
                 RootType::BC})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_type(t, r)) out.push_back({t, r});
  return out;
}

}  // namespace

TEST(SerializeRoots, RoundTripAllTypes) {
  for (auto t : small_types(8)) {
    auto sys = build_irreducible(t);
    auto text = to_json(sys).dump();
    auto back = root_system_from_json(Json::parse(text));
    EXPECT_EQ(back.roots(), sys.roots()) << to_string(t);
    EXPECT_EQ(back.dim(), sys.dim());
  }
}

TEST(SerializeRoots, Format) {
  auto j = to_json(scaled(build_irreducible(RootType::A, 1), make_rational(1, 3)));
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["roots"][0], Json::parse("[[-1,3],[1,3]]"));
}

TEST(SerializeRoots, WideIntegersAsStrings) {
  Rational big = make_rational(mpz_class("123456789012345678901234567891"), mpz_class(7));
  auto j = to_json(big);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(rational_from_json(j), big);
  auto sys = scaled(build_irreducible(RootType::B, 2), big);
  EXPECT_EQ(root_system_from_json(to_json(sys)).roots(), sys.roots());
}

TEST(SerializeRoots, Rejections) {
  EXPECT_THROW(root_system_from_json(Json::parse(R"({"roots": []})")), ParameterError);
  EXPECT_THROW(root_system_from_json(Json::parse(R"({"dim": 1, "roots": [[[1,0]],[[-1,1]]]})")), ParameterError);
  EXPECT_THROW(root_system_from_json(Json::parse(R"({"dim": 1, "roots": [[[1,1]],[[-1,1]],[[3,1]]]})")),
               IntegrityError);
  // A2 with one pair of roots removed is not closed under reflections.
  auto j = to_json(build_irreducible(RootType::A, 2));
  j["roots"].erase(0);
  j["roots"].erase(j["roots"].size() - 1);
  EXPECT_THROW(root_system_from_json(j), IntegrityError);
  EXPECT_THROW(rational_from_json(Json::parse(R"(["x", 1])")), ParameterError);
}

TEST(SerializeWeyl, RoundTrip) {
  auto ss = simple_system(build_irreducible(RootType::B, 3));
  for (const auto& w : generate_weyl(ss, 1000)) {
    auto back = weyl_element_from_json(ss, Json::parse(to_json(w).dump()));
    EXPECT_EQ(back.perm, w.perm);
    EXPECT_EQ(back.word, w.word);
  }
}

TEST(SerializeWeyl, Rejections) {
  auto ss = simple_system(build_irreducible(RootType::A, 2));
  auto j = to_json(longest_element(ss));
  j["word"].erase(0);
  EXPECT_THROW(weyl_element_from_json(ss, j), ParameterError);
  EXPECT_THROW(weyl_element_from_json(ss, Json::parse(R"({"word": [5], "perm": []})")), ParameterError);
}

TEST(SerializeDiagram, RoundTripAllTypes) {
  for (auto t : small_types(8)) {
    auto dd = diagram(simple_system(build_irreducible(t)));
    auto back = diagram_from_json(Json::parse(to_json(dd).dump()));
    EXPECT_EQ(back.cartan, dd.cartan) << to_string(t);
    EXPECT_EQ(back.doubled, dd.doubled) << to_string(t);
    EXPECT_EQ(back.vertices, dd.vertices) << to_string(t);
  }
}

TEST(SerializeDiagram, WeightedRoundTrip) {
  const Catalogue cat;
  for (const auto& e : seed_samples()) {
    auto ws = entry_system(e);
    auto wd = weighted_diagram(ws, simple_system(ws.base));
    auto back = weighted_diagram_from_json(to_json(wd));
    EXPECT_EQ(back.weights, wd.weights) << e.id.str();
    EXPECT_EQ(back.base.cartan, wd.base.cartan) << e.id.str();
  }
}

TEST(SerializeDiagram, Rejections) {
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"vertices": [{"doubled": false}]})")), ParameterError);
  EXPECT_THROW(diagram_from_json(Json::parse(
                   R"({"vertices": [{"doubled": false},{"doubled": false}], "edges": [{"a":0,"b":1,"bonds":2,"shorter":-1}]})")),
               ParameterError);
  EXPECT_THROW(diagram_from_json(Json::parse(
                   R"({"vertices": [{"doubled": false}], "edges": [{"a":0,"b":1,"bonds":1,"shorter":-1}]})")),
               ParameterError);
  EXPECT_THROW(weighted_diagram_from_json(Json::parse(R"({"vertices": [{"doubled": true, "weight": 2}], "edges": []})")),
               ParameterError);
  EXPECT_THROW(diagram_isomorphism_from_json(Json::parse("[0, 0]")), ParameterError);
  EXPECT_EQ(diagram_isomorphism_from_json(Json::parse("[1, 0]")).image, (std::vector<int>{1, 0}));
}
