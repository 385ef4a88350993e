#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>
#include <random>
#include <sstream>

#include "rootaut/errors.hpp"
#include "rootaut/lieverify.hpp"

using namespace rootaut;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

const std::vector<std::string>& realized() {
  static const std::vector<std::string> ids = {"sl(2,R)", "sl(3,R)", "sl(4,R)", "sl(2,C)", "sl(3,C)", "sl(2,H)",
                                               "sl(3,H)", "su(1,2)", "su(1,3)", "su(2,3)", "su(2,4)", "su(1,1)",
                                               "su(2,2)"};
  return ids;
}

VectorXd random_vector(std::mt19937& rng, int n) {
  std::normal_distribution<double> nd;
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = nd(rng);
  return v;
}

Catalogue shipped() { return Catalogue::load(default_catalogue_path()); }

}  // namespace

TEST(Realize, Examples) {
  auto sl3 = realize("sl(3,R)");
  EXPECT_EQ(sl3.dim(), 8);
  EXPECT_EQ(sl3.rank(), 2);
  auto su12 = realize("su(1,2)");
  EXPECT_EQ(su12.dim(), 8);
  EXPECT_EQ(su12.rank(), 1);
  auto h2 = realize("sl(2,H)");
  EXPECT_EQ(h2.dim(), 15);
  EXPECT_EQ(h2.rank(), 1);
  EXPECT_EQ(realize("sl(3,C)").dim(), 16);
  EXPECT_EQ(realize("su(2,3)").dim(), 24);
}

TEST(Realize, Refusals) {
  EXPECT_THROW(realize("so(2,3)"), ParameterError);
  EXPECT_THROW(realize("sp(2,3)"), ParameterError);
  EXPECT_THROW(realize("e6(-26)"), ParameterError);
  EXPECT_THROW(realize("sl(1,R)"), ParameterError);
  EXPECT_THROW(realize("su(3)"), ParameterError);
  EXPECT_THROW(realize("sl(20,R)"), ParameterError);
}

TEST(Realize, StructuralChecks) {
  for (const auto& id : realized()) {
    auto alg = realize(id);
    auto c = check_algebra(alg);
    EXPECT_TRUE(c.ok(1e-6)) << id << " theta_hom " << c.theta_hom << " k " << c.killing_k_max << " p "
                            << c.killing_p_min;
  }
}

TEST(Realize, KillingFormIsProportionalToTraceForm) {
  std::mt19937 rng(3);
  for (const auto& id : realized()) {
    auto alg = realize(id);
    double ratio = 0;
    for (int t = 0; t < 20; ++t) {
      VectorXd x = random_vector(rng, alg.dim()), y = random_vector(rng, alg.dim());
      const double b = x.dot(alg.killing * y);
      const double tr = (alg.element(x) * alg.element(y)).trace().real();
      if (t == 0) ratio = b / tr;
      EXPECT_NEAR(b / tr, ratio, 1e-6 * std::abs(ratio)) << id;
    }
  }
}

TEST(Expm, MatchesEigenMatrixFunctions) {
  std::mt19937 rng(17);
  for (int n : {1, 3, 8, 20}) {
    for (double scale : {1e-3, 0.4, 3.0, 25.0}) {
      MatrixXd a = MatrixXd::NullaryExpr(n, n, [&]() { return std::normal_distribution<double>()(rng); }) * scale;
      MatrixXd ours = expm(a), oracle = a.exp();
      EXPECT_LE((ours - oracle).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, oracle.cwiseAbs().maxCoeff()))
          << n << " " << scale;
    }
  }
  auto alg = realize("su(2,3)");
  VectorXd y = VectorXd::Zero(alg.dim());
  y.head(alg.dim_k) = random_vector(rng, alg.dim_k);
  MatrixXd ad = alg.ad_of(y);
  EXPECT_LE((expm(ad) - ad.exp()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(RestrictedRoots, Examples) {
  auto sl3 = restricted_roots(realize("sl(3,R)"));
  EXPECT_EQ(sl3.dim_g0, 2);
  EXPECT_EQ(sl3.dim_k0, 0);
  EXPECT_EQ(sl3.values.size(), 6u);
  for (int m : sl3.mult) EXPECT_EQ(m, 1);
  auto sig = weighted_signature(sl3.system);
  ASSERT_EQ(sig.size(), 1u);
  EXPECT_EQ(to_string(sig[0]), "A2[1,1]");

  auto c3 = restricted_roots(realize("sl(3,C)"));
  for (int m : c3.mult) EXPECT_EQ(m, 2);
  EXPECT_EQ(to_string(weighted_signature(c3.system)[0]), "A2[2,2]");

  auto su = restricted_roots(realize("su(1,2)"));
  EXPECT_EQ(to_string(weighted_signature(su.system)[0]), "BC1[(2,1)]");

  auto h3 = restricted_roots(realize("sl(3,H)"));
  EXPECT_EQ(to_string(weighted_signature(h3.system)[0]), "A2[4,4]");
}

TEST(RestrictedRoots, Bookkeeping) {
  for (const auto& id : realized()) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    int total = d.dim_g0;
    for (int m : d.mult) total += m;
    EXPECT_EQ(total, alg.dim()) << id;
    EXPECT_EQ(d.dim_g0, d.dim_k0 + d.dim_a) << id;
    // theta carries g_alpha onto g_-alpha
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      std::vector<long> neg;
      for (long x : d.values[i]) neg.push_back(-x);
      auto it = std::find(d.values.begin(), d.values.end(), neg);
      ASSERT_NE(it, d.values.end()) << id;
      const auto j = it - d.values.begin();
      EXPECT_EQ(d.mult[i], d.mult[j]);
      MatrixXd img = alg.theta * d.spaces[i];
      MatrixXd proj = d.spaces[j] * (d.spaces[j].transpose() * img);
      EXPECT_LE((img - proj).cwiseAbs().maxCoeff(), 1e-8) << id;
    }
  }
}

TEST(RestrictedRoots, AmbiguousClusteringIsReported) {
  auto alg = realize("sl(3,R)");
  // H_1 = diag(1,-1,0) is singular: e1 - e3 and e3 - e2 share a value.
  EXPECT_THROW(restricted_roots(alg, alg.a_basis, alg.a_factor, alg.a_basis[0], alg.regular), ResolutionError);
}

TEST(CatalogueUpgrade, EveryRealizedAlgebraMatches) {
  auto cat = shipped();
  for (const auto& id : realized()) {
    auto alg = realize(id);
    auto cc = cross_check(cat, alg, restricted_roots(alg));
    ASSERT_TRUE(cc.matches) << id;
    EXPECT_EQ(cc.upgraded.lookup(id).provenance, Provenance::MachineVerified) << id;
    cat = cc.upgraded;
  }
  EXPECT_EQ(cat.lookup("sp(2,3)").provenance, Provenance::ExternalReference);
  EXPECT_EQ(cat.lookup("e6(-26)").provenance, Provenance::ExternalReference);
}

TEST(CatalogueUpgrade, MismatchIsDetected) {
  std::istringstream wrong("su;2,2;C;2;2,2;external-reference\n");
  auto cat = Catalogue::parse(wrong, "wrong");
  auto alg = realize("su(2,2)");
  auto cc = cross_check(cat, alg, restricted_roots(alg));
  EXPECT_FALSE(cc.matches);
  EXPECT_EQ(cc.upgraded.lookup("su(2,2)").provenance, Provenance::ExternalReference);
}

TEST(ReflectionLift, EveryRootOfEveryRealizedAlgebra) {
  for (const auto& id : realized()) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      auto c = reflection_lift(alg, d, static_cast<int>(i));
      EXPECT_TRUE(c.valid) << id << " root " << i << " residual " << c.residual;
    }
  }
}

TEST(ReflectionLift, NormalisationSweep) {
  // B_theta(X,X) = 2/|alpha|^2 is the convention that yields s_alpha; the
  // alternatives by a factor sqrt 2 do not.
  for (const std::string id : {"sl(3,R)", "su(1,2)", "sl(2,H)"}) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    EXPECT_TRUE(reflection_lift(alg, d, 0, 1.0).valid);
    EXPECT_FALSE(reflection_lift(alg, d, 0, 1 / std::sqrt(2.0)).valid);
    EXPECT_FALSE(reflection_lift(alg, d, 0, std::sqrt(2.0)).valid);
  }
}

TEST(ReflectionLift, IdentityIsANegativeControl) {
  auto alg = realize("sl(3,R)");
  auto d = restricted_roots(alg);
  for (std::size_t i = 0; i < d.values.size(); ++i) EXPECT_FALSE(identity_control(alg, d, static_cast<int>(i)).valid);
}

TEST(Lifts, AreAutomorphismsOnRandomPairs) {
  std::mt19937 rng(23);
  for (const std::string id : {"sl(3,R)", "su(2,3)", "sl(3,H)"}) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    std::vector<MatrixXd> maps = {reflection_lift(alg, d, 0).automorphism};
    auto ss = computed_simple_system(d);
    for (const auto& s : weighted_diagram_automorphisms(weighted_diagram(d.system, ss)))
      maps.push_back(diagram_lift(alg, d, s).automorphism);
    for (const auto& a : maps)
      for (int t = 0; t < 50; ++t) {
        VectorXd x = random_vector(rng, alg.dim()), y = random_vector(rng, alg.dim());
        const double err = (a * alg.bracket(x, y) - alg.bracket(a * x, a * y)).norm();
        EXPECT_LE(err, 1e-6 * x.norm() * y.norm()) << id;
      }
  }
}

TEST(DiagramLift, Examples) {
  for (const std::string id : {"sl(3,R)", "sl(3,H)", "sl(3,C)", "sl(4,R)"}) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    auto ss = computed_simple_system(d);
    const int r = ss.rank();
    DiagramIsomorphism flip, identity;
    for (int i = 0; i < r; ++i) {
      flip.image.push_back(r - 1 - i);
      identity.image.push_back(i);
    }
    auto c = diagram_lift(alg, d, flip);
    EXPECT_TRUE(c.valid) << id << " residual " << c.residual << " n " << c.n_error;
    auto e = diagram_lift(alg, d, identity);
    EXPECT_TRUE(e.valid);
    EXPECT_LE((e.automorphism - MatrixXd::Identity(alg.dim(), alg.dim())).cwiseAbs().maxCoeff(), 0.0);
  }
  auto alg = realize("su(2,3)");
  auto d = restricted_roots(alg);
  EXPECT_THROW(diagram_lift(alg, d, DiagramIsomorphism{{1, 0}}), ParameterError);
}

TEST(OmegaImage, Orders) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"sl(3,R)", 12}, {"su(1,2)", 2}, {"sl(3,H)", 12}, {"sl(3,C)", 12},
      {"su(2,3)", 8},  {"su(2,2)", 8}, {"sl(2,R)", 2},  {"sl(2,H)", 2}};
  for (const auto& [id, order] : cases) {
    auto alg = realize(id);
    auto rep = omega_image_check(alg, restricted_roots(alg));
    EXPECT_TRUE(rep.surjective) << id;
    EXPECT_EQ(rep.induced_order, order) << id;
    EXPECT_EQ(rep.expected_order, order) << id;
  }
  auto big = realize("sl(4,R)");
  EXPECT_THROW(omega_image_check(big, restricted_roots(big)), ParameterError);
}

TEST(ChoiceIndependence, RandomRotations) {
  for (const std::string id : {"sl(3,R)", "su(1,2)", "su(2,3)", "sl(2,H)"}) {
    auto alg = realize(id);
    auto d = restricted_roots(alg);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto rep = choice_independence(alg, d, seed);
      EXPECT_TRUE(rep.isomorphic) << id << " seed " << seed;
      EXPECT_GT(rep.rotation, 0.0);
    }
    auto same = choice_independence(alg, d, 0, true);
    EXPECT_TRUE(same.identical);
    EXPECT_TRUE(same.isomorphic);
  }
}
