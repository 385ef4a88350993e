#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rootaut/catalogue.hpp"
#include "rootaut/errors.hpp"

using namespace rootaut;

namespace {

SimpleSystem ss_of(RootType t, int r) { return simple_system(build_irreducible(t, r)); }

Catalogue shipped() { return Catalogue::load(default_catalogue_path()); }

// mult(s_b a) = mult(a) for every pair, with the reflection written out on
// coordinates rather than taken from the cached permutations.
bool orbit_constant(const WeightedRootSystem& ws) {
  const auto& s = ws.base;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      Rational c = 2 * dot(s.root(a), s.root(b)) / dot(s.root(b), s.root(b));
      auto img = s.find(sub(s.root(a), scaled(s.root(b), c)));
      if (!img || ws.mult[*img] != ws.mult[a]) return false;
    }
  }
  return true;
}

// Shape of a root in the BC_r model: 0 for +-e_i +- e_j, 1 for +-e_i, 2 for +-2e_i.
int bc_shape(const Vector& v) {
  int nonzero = 0;
  Rational top = 0;
  for (const auto& x : v)
    if (x != 0) {
      ++nonzero;
      top = abs(x);
    }
  if (nonzero == 2) return 0;
  return top == 1 ? 1 : 2;
}

// dim p = dim g - dim k, from the usual dimension formulas.
int p_dim(const std::string& id) {
  static const std::map<std::string, int> table = {
      {"su(1,1)", 2},   {"su(1,2)", 4},   {"su(2,3)", 12},  {"su(2,2)", 8},   {"su(3,3)", 18},  {"sp(2,3)", 24},
      {"sp(1,1)", 4},   {"sp(2,2)", 16},  {"so(1,3)", 3},   {"so(2,4)", 8},   {"so(2,5)", 10},
      {"so(3,5)", 15},  {"so(2,3)", 6},   {"so*(8)", 12},   {"so*(10)", 20},  {"sl(3,R)", 5},
      {"sl(3,C)", 8},   {"sl(3,H)", 14},  {"sl(4,H)", 27},  {"e6(-26)", 26},  {"e6(-14)", 32},
      {"e6(2)", 40},    {"e7(-5)", 64},   {"e7(-25)", 54},  {"e8(-24)", 112}, {"f4(-20)", 16},
      {"g2(2)", 8},     {"su(1,3)", 6},   {"su(2,4)", 16},  {"su(3,4)", 24},  {"su(3,5)", 30},
      {"sp(1,2)", 8},   {"sp(2,4)", 32},  {"sl(2,R)", 2},   {"sl(4,R)", 9},   {"sl(2,C)", 3},
      {"sl(4,C)", 15},  {"sl(2,H)", 5},   {"so(3,4)", 12},  {"so(4,4)", 16},  {"sp(2,R)", 6},
      {"sp(3,R)", 12},  {"sp(2,C)", 10},  {"so(5,C)", 10},  {"so(8,C)", 28},  {"e6(6)", 42},
      {"e7(7)", 70},    {"e8(8)", 128},   {"f4(4)", 28},    {"e6(C)", 78},    {"f4(C)", 52},
      {"g2(C)", 14}};
  auto it = table.find(id);
  return it == table.end() ? -1 : it->second;
}

}  // namespace

TEST(Weights, ParseAndPrint) {
  auto w = parse_weights("2, 2,(4,1)");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[2].mult, 4);
  EXPECT_EQ(w[2].doubled_mult, 1);
  EXPECT_EQ(to_string(w), "2,2,(4,1)");
  EXPECT_THROW(parse_weights("2,0"), ParameterError);
  EXPECT_THROW(parse_weights("2,(1"), ParameterError);
  EXPECT_THROW(parse_weights("2,"), ParameterError);
  EXPECT_THROW(parse_weights("x"), ParameterError);
}

TEST(Expand, SuWeightsMatchRootShapes) {
  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 3; ++n) {
      auto ws = entry_system(*seed_entry(parse_algebra_id("su(" + std::to_string(r) + "," + std::to_string(r + n) + ")")));
      for (int i = 0; i < ws.base.size(); ++i) {
        const int expected[3] = {2, 2 * n, 1};
        EXPECT_EQ(ws.mult[i], expected[bc_shape(ws.base.root(i))]);
      }
    }
  }
}

TEST(Expand, RejectsNonInvariantWeights) {
  auto ss = ss_of(RootType::A, 2);
  EXPECT_THROW(expand_weights(ss, {{1, {}}, {2, {}}}), IntegrityError);
  EXPECT_THROW(expand_weights(ss, {{1, {}}}), ParameterError);
  auto bc = ss_of(RootType::BC, 2);
  EXPECT_THROW(expand_weights(bc, {{2, {}}, {2, {}}}), IntegrityError);     // pair missing
  EXPECT_THROW(expand_weights(bc, {{2, 1}, {2, 1}}), IntegrityError);       // pair on a plain vertex
  EXPECT_NO_THROW(expand_weights(bc, {{2, {}}, {2, 1}}));
}

TEST(MakeWeighted, Invariants) {
  auto sys = build_irreducible(RootType::B, 2);
  std::vector<int> m(sys.size());
  for (int i = 0; i < sys.size(); ++i) m[i] = sys.norm2(i) == 1 ? 3 : 1;
  EXPECT_NO_THROW(make_weighted(sys, m));
  m[0] = 5;
  EXPECT_THROW(make_weighted(sys, m), IntegrityError);
  EXPECT_THROW(make_weighted(sys, std::vector<int>(sys.size(), 0)), IntegrityError);
  EXPECT_THROW(make_weighted(sys, {1}), ParameterError);
}

TEST(WeightedIsomorphisms, Examples) {
  auto su = entry_system(*seed_entry(parse_algebra_id("su(2,3)")));
  auto sp = entry_system(*seed_entry(parse_algebra_id("sp(2,3)")));
  auto self = weighted_isomorphisms(su, su);
  ASSERT_FALSE(self.empty());
  EXPECT_EQ(self.size(), 8u);
  bool has_identity = false;
  for (const auto& f : self) has_identity |= f.root_map == identity_perm(su.base.size());
  EXPECT_TRUE(has_identity);
  EXPECT_TRUE(weighted_isomorphisms(su, sp).empty());

  auto a2 = ss_of(RootType::A, 2);
  auto ones = expand_weights(a2, {{1, {}}, {1, {}}});
  auto twos = expand_weights(a2, {{2, {}}, {2, {}}});
  EXPECT_TRUE(weighted_isomorphisms(ones, twos).empty());
  EXPECT_EQ(weighted_isomorphisms(ones, ones).size(), 12u);
}

TEST(WeightedIsomorphisms, PreserveMultiplicitiesAndAreRootIsomorphisms) {
  for (const auto& e : shipped().entries()) {
    if (e.type.rank > 3) continue;
    auto ws = entry_system(e);
    auto all = weighted_isomorphisms(ws, ws);
    std::set<Perm> distinct;
    for (const auto& f : all) {
      distinct.insert(f.root_map);
      for (int i = 0; i < ws.base.size(); ++i) ASSERT_EQ(ws.mult[f.root_map[i]], ws.mult[i]) << e.id.str();
      auto check = is_isomorphism(f.matrix, ws.base, ws.base);
      ASSERT_TRUE(std::holds_alternative<RootIsomorphism>(check)) << e.id.str();
      EXPECT_EQ(std::get<RootIsomorphism>(check).root_map, f.root_map);
    }
    EXPECT_EQ(distinct.size(), all.size()) << e.id.str();
    EXPECT_EQ(all.size(), autw_order(ws, simple_system(ws.base), 100000)) << e.id.str();
  }
}

TEST(WeightedIsomorphisms, CountMatchesFilteredBruteForce) {
  // Filter every automorphism (brute force over images of a basis) by
  // multiplicity and compare with the structured enumeration.
  auto a2 = ss_of(RootType::A, 2);
  auto a2a2 = simple_system(direct_sum({build_irreducible(RootType::A, 2), build_irreducible(RootType::A, 2)}));
  std::vector<WeightedRootSystem> cases = {
      expand_weights(a2a2, {{1, {}}, {1, {}}, {2, {}}, {2, {}}}),
      expand_weights(a2a2, {{3, {}}, {3, {}}, {3, {}}, {3, {}}}),
      entry_system(*seed_entry(parse_algebra_id("su(1,3)"))),
      expand_weights(ss_of(RootType::B, 2), {{1, {}}, {2, {}}}),
      weighted_direct_sum({entry_system(*seed_entry(parse_algebra_id("su(1,2)"))),
                           entry_system(*seed_entry(parse_algebra_id("sp(1,2)")))}),
      weighted_direct_sum({entry_system(*seed_entry(parse_algebra_id("su(1,2)"))),
                           entry_system(*seed_entry(parse_algebra_id("su(1,2)")))}),
  };
  for (const auto& ws : cases) {
    auto ss = simple_system(ws.base);
    const RootSystem& s = ws.base;
    const int r = ss.rank();
    std::set<Perm> brute;
    std::vector<int> pick(r);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == r) {
        std::vector<Vector> src, dst;
        for (int i = 0; i < r; ++i) {
          src.push_back(s.root(ss.simple[i]));
          dst.push_back(s.root(pick[i]));
        }
        auto check = is_isomorphism(linear_extension(src, dst, s.dim()), s, s);
        if (auto* iso = std::get_if<RootIsomorphism>(&check)) {
          bool keeps = true;
          for (int i = 0; i < s.size(); ++i) keeps &= ws.mult[iso->root_map[i]] == ws.mult[i];
          if (keeps) brute.insert(iso->root_map);
        }
        return;
      }
      for (int c = 0; c < s.size(); ++c) {
        pick[k] = c;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    std::set<Perm> fast;
    for (const auto& f : weighted_isomorphisms(ws, ws)) fast.insert(f.root_map);
    EXPECT_EQ(fast, brute);
  }
}

TEST(WeightedDiagram, AutomorphismExamples) {
  auto su = entry_system(*seed_entry(parse_algebra_id("su(2,3)")));
  EXPECT_EQ(weighted_diagram_automorphisms(weighted_diagram(su, simple_system(su.base))).size(), 1u);

  auto sum = weighted_direct_sum({su, entry_system(*seed_entry(parse_algebra_id("sp(2,3)")))});
  auto ss = simple_system(sum.base);
  auto wd = weighted_diagram(sum, ss);
  EXPECT_EQ(diagram_automorphisms(wd.base).size(), 2u);
  EXPECT_EQ(weighted_diagram_automorphisms(wd).size(), 1u);

  for (int m = 1; m <= 4; ++m) {
    auto a2 = ss_of(RootType::A, 2);
    auto ws = expand_weights(a2, {{m, {}}, {m, {}}});
    EXPECT_EQ(weighted_diagram_automorphisms(weighted_diagram(ws, a2)).size(), 2u);
  }
}

TEST(AutwOrder, Examples) {
  auto a2 = ss_of(RootType::A, 2);
  EXPECT_EQ(autw_order(expand_weights(a2, {{3, {}}, {3, {}}}), a2, 1000), 12u);
  auto su = entry_system(*seed_entry(parse_algebra_id("su(2,3)")));
  EXPECT_EQ(autw_order(su, simple_system(su.base), 1000), 8u);
}

TEST(Catalogue, ShippedFileLoads) {
  auto cat = shipped();
  EXPECT_GE(cat.families(), 6u);
  EXPECT_GE(cat.file_rows(), 20u);
  EXPECT_EQ(cat.lookup("su(2,3)").provenance, Provenance::PaperStated);
  EXPECT_EQ(cat.lookup("sp(2,3)").provenance, Provenance::ExternalReference);
  EXPECT_EQ(cat.lookup("so(2,5)").provenance, Provenance::ExternalReference);
  EXPECT_EQ(cat.lookup("su(3,2)").id.str(), "su(2,3)");
}

TEST(Catalogue, EveryEntryIsConsistent) {
  // Orbit constancy (exhaustive for rank <= 6), Aut^w(DD) = Aut(DD) for
  // simple algebras, and dim p = rank + sum of positive multiplicities.
  for (const auto& e : shipped().entries()) {
    auto ws = entry_system(e);
    auto ss = simple_system(ws.base);
    if (e.type.rank <= 6) EXPECT_TRUE(orbit_constant(ws)) << e.id.str();
    for (int i = 0; i < ws.base.size(); ++i) EXPECT_EQ(ws.mult[i], ws.mult[ws.base.negative(i)]);
    auto wd = weighted_diagram(ws, ss);
    EXPECT_EQ(weighted_diagram_automorphisms(wd).size(), diagram_automorphisms(wd.base).size()) << e.id.str();
    const int expected = p_dim(e.id.str());
    ASSERT_GE(expected, 0) << "no dimension for " << e.id.str();
    int sum = ss.rank();
    for (int p : ss.positive) sum += ws.mult[p];
    EXPECT_EQ(sum, expected) << e.id.str();
  }
}

TEST(Catalogue, Rejections) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return Catalogue::parse(in, "test");
  };
  EXPECT_THROW(parse("su;2,3;C;2;2,1;external-reference\n"), CatalogueError);
  EXPECT_THROW(parse("su;2,3;BC;2;2,(4,1);paper-stated\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;1,3;external-reference\nso;5,2;B;2;1,3;external-reference\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;1,3;paper-stated\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;1,3;machine-verified\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;1,3\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;1;external-reference\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;B;2;3,1,1;external-reference\n"), CatalogueError);
  EXPECT_THROW(parse("so;2,5;A;2;1,3;external-reference\n"), CatalogueError);  // not W-invariant
  EXPECT_THROW(parse("su;4;A;3;1,1,1;external-reference\n"), CatalogueError);  // compact
  EXPECT_NO_THROW(parse("# comment only\n\nso;2,5;B;2;1,3;external-reference # trailing\n"));
}

TEST(Catalogue, LookupRefusals) {
  Catalogue seed;
  EXPECT_THROW(seed.lookup("su(5)"), CatalogueError);
  EXPECT_THROW(seed.lookup("so(0,5)"), CatalogueError);
  EXPECT_THROW(seed.lookup("e8(-248)"), CatalogueError);
  EXPECT_THROW(seed.lookup("so(2,5)"), CatalogueError);  // not in the built-in rows
  EXPECT_THROW(seed.lookup("xx(1)"), CatalogueError);
  EXPECT_THROW(seed.lookup("su(2,"), CatalogueError);
  EXPECT_EQ(seed.lookup("sl(3,ℝ)").id.str(), "sl(3,R)");
}

TEST(Catalogue, MachineVerifiedUpgradeIsACopy) {
  Catalogue seed;
  auto up = seed.with_verified(parse_algebra_id("sl(3,R)"));
  EXPECT_EQ(up.lookup("sl(3,R)").provenance, Provenance::MachineVerified);
  EXPECT_EQ(seed.lookup("sl(3,R)").provenance, Provenance::PaperStated);
}

TEST(RestrictedSystem, Examples) {
  Catalogue seed;
  auto sl3 = restricted_system({"sl(3,R)"}, seed);
  EXPECT_EQ(sl3.base.size(), 6);
  for (int m : sl3.mult) EXPECT_EQ(m, 1);
  auto h = restricted_system({"sl(3,H)"}, seed);
  for (int m : h.mult) EXPECT_EQ(m, 4);
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 2; ++n) {
      auto e = seed.lookup("su(" + std::to_string(r) + "," + std::to_string(r + n) + ")");
      EXPECT_EQ(e.type, (TypeTag{RootType::BC, r}));
      std::vector<VertexWeight> want(r, VertexWeight{2, {}});
      want.back() = {2 * n, 1};
      EXPECT_EQ(e.weights, want);
    }
  EXPECT_THROW(restricted_system({"nope(1)"}, seed), CatalogueError);
  EXPECT_THROW(restricted_system({}, seed), ParameterError);
}

TEST(AlgebrasIsomorphic, Examples) {
  Catalogue seed;
  auto v = algebras_isomorphic({"su(2,3)"}, {"sp(2,3)"}, seed);
  EXPECT_FALSE(v.isomorphic);
  EXPECT_NE(v.explanation.find("BC2[2,(2,1)]"), std::string::npos) << v.explanation;
  EXPECT_NE(v.explanation.find("BC2[4,(4,3)]"), std::string::npos) << v.explanation;

  EXPECT_TRUE(algebras_isomorphic({"sl(3,R)", "su(1,2)"}, {"su(1,2)", "sl(3,R)"}, seed).isomorphic);
  EXPECT_FALSE(algebras_isomorphic({"sl(3,C)"}, {"sl(3,R)"}, seed).isomorphic);
  // Low-rank coincidences show up as weighted isomorphisms.
  EXPECT_TRUE(algebras_isomorphic({"sp(2,R)"}, {"so(2,3)"}, seed).isomorphic);
  auto cat = shipped();
  EXPECT_TRUE(algebras_isomorphic({"su(2,2)"}, {"so(2,4)"}, cat).isomorphic);
  EXPECT_TRUE(algebras_isomorphic({"so(1,3)"}, {"sl(2,C)"}, cat).isomorphic);
  std::istringstream extra("so*;8;C;2;4,1;external-reference\nso;2,6;B;2;1,4;external-reference\n");
  EXPECT_TRUE(algebras_isomorphic({"so*(8)"}, {"so(2,6)"}, Catalogue::parse(extra, "inline")).isomorphic);
}

TEST(AlgebrasIsomorphic, ReorderingInvariance) {
  Catalogue seed;
  std::vector<std::string> pool = {"sl(3,R)", "su(1,2)", "sl(2,R)", "sl(2,C)", "sp(1,2)", "sl(3,C)", "su(2,3)"};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> a;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) a.push_back(pool[rng() % pool.size()]);
    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    auto v = algebras_isomorphic(a, b, seed);
    EXPECT_TRUE(v.isomorphic);
    ASSERT_TRUE(v.witness.has_value());
    auto sa = restricted_system(a, seed), sb = restricted_system(b, seed);
    for (int i = 0; i < sa.base.size(); ++i) EXPECT_EQ(sb.mult[v.witness->root_map[i]], sa.mult[i]);
    // The pool has no low-rank coincidences, so the verdict is multiset equality of ids.
    auto c = a;
    c[0] = pool[rng() % pool.size()];
    auto sorted_a = a, sorted_c = c;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_c.begin(), sorted_c.end());
    EXPECT_EQ(algebras_isomorphic(a, c, seed).isomorphic, sorted_a == sorted_c);
  }
}

TEST(WeightedIsometry, KillingNormalisedIsomorphismsPreserveNorms) {
  // Components are rescaled independently; after weighting the inner product
  // of each component by its Killing scale every weighted isomorphism is an
  // isometry.
  auto su12 = entry_system(*seed_entry(parse_algebra_id("su(1,2)")));
  auto sl3 = entry_system(*seed_entry(parse_algebra_id("sl(3,R)")));
  auto rescale = [](const WeightedRootSystem& ws, long num, long den) {
    auto base = scaled(ws.base, make_rational(num, den));
    std::vector<int> mult(base.size());
    for (int i = 0; i < ws.base.size(); ++i)
      mult[*base.find(scaled(ws.base.root(i), make_rational(num, den)))] = ws.mult[i];
    return WeightedRootSystem{base, mult};
  };
  std::vector<WeightedRootSystem> cases = {
      weighted_direct_sum({su12, rescale(su12, 3, 1)}),
      weighted_direct_sum({rescale(sl3, 1, 2), sl3, rescale(su12, 2, 1)}),
      rescale(entry_system(*seed_entry(parse_algebra_id("su(2,3)"))), 5, 3),
  };
  for (const auto& ws : cases) {
    const auto& s = ws.base;
    auto killing_norm = [&](int i) -> Rational { return killing_scale(s, s.component_of(i)) * s.norm2(i); };
    auto all = weighted_isomorphisms(ws, ws);
    ASSERT_FALSE(all.empty());
    for (const auto& f : all)
      for (int i = 0; i < s.size(); ++i) ASSERT_EQ(killing_norm(f.root_map[i]), killing_norm(i));
  }
}

TEST(Signature, EmptySystem) {
  WeightedRootSystem empty{RootSystem(), {}};
  EXPECT_TRUE(weighted_signature(empty).empty());
  auto iso = find_weighted_isomorphism(empty, empty);
  EXPECT_TRUE(iso.has_value());
  auto a1 = expand_weights(ss_of(RootType::A, 1), {{1, {}}});
  EXPECT_FALSE(find_weighted_isomorphism(empty, a1).has_value());
}
