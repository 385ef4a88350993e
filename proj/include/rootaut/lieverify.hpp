#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rootaut/catalogue.hpp"

namespace rootaut {

// A real Lie algebra of complex N x N matrices. The basis is orthonormal for
// Re tr(X Y*), with the k part first; elements are handled through their
// real coordinate vectors in this basis.
struct MatrixAlgebra {
  AlgebraId id;
  int n = 0;  // size of the defining matrices
  std::vector<Eigen::MatrixXcd> basis;
  int dim_k = 0, dim_p = 0;
  std::vector<Eigen::MatrixXd> ad;  // ad of each basis element
  Eigen::MatrixXd theta;            // -X* in coordinates
  Eigen::MatrixXd killing;          // tr(ad X ad Y)

  // Maximal abelian subspace of p, spanned by real diagonal matrices.
  std::vector<Eigen::VectorXd> a_basis;
  // Diagonals of the a basis as columns (N x r). Restricted roots are written
  // in these trace-form coordinates, which makes them exact rationals.
  RationalMatrix a_factor;
  Eigen::VectorXd generic;  // coordinates of a regular element of a
  Vector regular;           // its diagonal, exactly

  int dim() const { return static_cast<int>(basis.size()); }
  int rank() const { return static_cast<int>(a_basis.size()); }
  Eigen::VectorXd coords(const Eigen::MatrixXcd& x) const;
  Eigen::MatrixXcd element(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd ad_of(const Eigen::VectorXd& x) const;
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
};

// "sl(n,R)", "sl(n,C)" (realified), "sl(n,H)" (2n x 2n complex blocks),
// "su(p,q)". ParameterError for anything else or for dim g > 128.
MatrixAlgebra realize(const std::string& id);

// Scaling and squaring with a degree-6 Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

struct AlgebraChecks {
  double theta_hom = 0;       // max |theta[X,Y] - [theta X, theta Y]| over basis pairs
  double theta_square = 0;    // |theta^2 - 1|
  double killing_k_max = 0;   // largest eigenvalue of B on k (should be < 0)
  double killing_p_min = 0;   // smallest eigenvalue of B on p (should be > 0)
  double a_commutator = 0;    // max |[H, H']|
  bool ok(double tol) const;
};

AlgebraChecks check_algebra(const MatrixAlgebra& alg);

struct RestrictedRootData {
  std::vector<std::vector<long>> values;  // alpha(H_k) per root
  std::vector<int> mult;
  std::vector<Eigen::MatrixXd> spaces;  // orthonormal columns spanning each root space
  Eigen::MatrixXd g0;
  int dim_g0 = 0, dim_k0 = 0, dim_a = 0;
  double max_spread = 0;  // widest eigenvalue cluster
  WeightedRootSystem system;
  std::vector<int> system_index;  // root i here is system.base root system_index[i]
  std::vector<Eigen::VectorXd> a_basis;
  RationalMatrix a_factor;
  Eigen::VectorXd generic;
  Vector regular;
};

// Joint eigenspaces of ad(a). ResolutionError when the clustering at
// cluster_tol is ambiguous.
RestrictedRootData restricted_roots(const MatrixAlgebra& alg, double cluster_tol = 1e-8);
RestrictedRootData restricted_roots(const MatrixAlgebra& alg, const std::vector<Eigen::VectorXd>& a_basis,
                                    const RationalMatrix& a_factor, const Eigen::VectorXd& generic,
                                    const Vector& regular, double cluster_tol = 1e-8);

// Simple system of the computed roots with the positivity of `regular`.
SimpleSystem computed_simple_system(const RestrictedRootData& data);
// Positions in data.values of the simple roots of ss.
std::vector<int> simple_positions(const RestrictedRootData& data, const SimpleSystem& ss);

struct LiftCertificate {
  std::string target;
  Eigen::MatrixXd automorphism;  // on g, in coordinates
  Eigen::MatrixXd induced;       // on a*, in value coordinates
  Eigen::MatrixXd expected;
  double residual = 0;   // max |induced - expected|
  double hom_error = 0;  // max |A[X,Y] - [AX,AY]| over basis pairs
  double a_error = 0;    // how far A moves a out of itself
  double n_error = 0;    // how far A moves n out of itself (diagram lifts)
  bool valid = false;
};

// exp(ad pi/2 (X + theta X)) with X in g_alpha, B_theta(X,X) = 2 scale^2/|alpha|^2.
LiftCertificate reflection_lift(const MatrixAlgebra& alg, const RestrictedRootData& data, int root,
                                double scale = 1.0, double tol = 1e-6);
// The identity map checked against s_alpha; never valid.
LiftCertificate identity_control(const MatrixAlgebra& alg, const RestrictedRootData& data, int root,
                                 double tol = 1e-6);
// Identity for trivial s; Ad(J) o theta with J a signed antidiagonal matrix
// for the flip of A_{n-1}. ConstructionError when no sign choice works.
LiftCertificate diagram_lift(const MatrixAlgebra& alg, const RestrictedRootData& data, const DiagramIsomorphism& s,
                              double tol = 1e-6);

// a*-map of an automorphism of g that normalises a, in value coordinates.
Eigen::MatrixXd induced_map(const MatrixAlgebra& alg, const RestrictedRootData& data, const Eigen::MatrixXd& a,
                            double* a_error = nullptr);
// The same for an element of Aut(Sigma) given as a root permutation.
Eigen::MatrixXd value_map(const RestrictedRootData& data, const Perm& root_map);

struct OmegaReport {
  std::size_t induced_order = 0, expected_order = 0;
  int missing = 0, extra = 0;
  double max_residual = 0;
  std::vector<LiftCertificate> generators;
  bool surjective = false;
};

OmegaReport omega_image_check(const MatrixAlgebra& alg, const RestrictedRootData& data, double tol = 1e-6);

struct ChoiceReport {
  bool isomorphic = false;
  bool identical = false;  // same values and multiplicities, root by root
  double rotation = 0;     // |Y| of the rotation exp(ad Y)
  RestrictedRootData rotated;
};

// Recomputes with a' = Ad(k) a for k = exp(Y), Y random in k, using a random
// unimodular change of the a basis. With identity set, nothing is rotated.
ChoiceReport choice_independence(const MatrixAlgebra& alg, const RestrictedRootData& data, std::uint64_t seed,
                                 bool identity = false, double cluster_tol = 1e-8);

struct CrossCheck {
  bool matches = false;
  std::vector<ComponentSignature> computed, catalogued;
  Catalogue upgraded;
};

// Compares with the catalogue entry of the algebra; on a match the returned
// catalogue carries the entry as machine-verified.
CrossCheck cross_check(const Catalogue& cat, const MatrixAlgebra& alg, const RestrictedRootData& data);

}  // namespace rootaut
