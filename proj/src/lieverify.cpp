#include "rootaut/lieverify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "rootaut/errors.hpp"

namespace rootaut {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cd = std::complex<double>;

namespace {

constexpr int kMaxDim = 128;

double inner(const MatrixXcd& x, const MatrixXcd& y) { return (x.array() * y.conjugate().array()).sum().real(); }

MatrixXcd theta_of(const MatrixXcd& x) { return -x.adjoint(); }

MatrixXcd unit(int n, int i, int j, cd v = 1.0) {
  MatrixXcd m = MatrixXcd::Zero(n, n);
  m(i, j) = v;
  return m;
}

// Gram-Schmidt, run twice, dropping vectors that fall into the span.
std::vector<MatrixXcd> orthonormalise(const std::vector<MatrixXcd>& in) {
  std::vector<MatrixXcd> out;
  for (const auto& x0 : in) {
    MatrixXcd x = x0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) x -= inner(x, b) * b;
    const double nrm = std::sqrt(inner(x, x));
    if (nrm > 1e-9) out.push_back(x / nrm);
  }
  return out;
}

struct Model {
  AlgebraId id;
  int n = 0;
  std::vector<MatrixXcd> spanning;
  std::vector<MatrixXcd> a;  // real diagonal, integer entries
  std::vector<Rational> generic_diag;
};

Rational pow4(int k) {
  mpz_class v = 1;
  for (int i = 0; i < k; ++i) v *= 4;
  return Rational(v);
}

// Decreasing generic diagonal, with differences of distinct pairs distinct.
std::vector<Rational> decreasing_traceless(int n, int block) {
  std::vector<Rational> d;
  Rational mean = 0;
  for (int i = 0; i < n; ++i) {
    d.push_back(pow4(n - 1 - i));
    mean += d.back();
  }
  mean /= n;
  std::vector<Rational> out;
  for (auto& x : d)
    for (int b = 0; b < block; ++b) out.push_back(x - mean);
  return out;
}

Model sl_model(const AlgebraId& id, int n, char field) {
  Model m;
  m.id = id;
  if (field == 'H') {
    // Quaternion q = z + w j as the block [[z, -conj w], [w, conj z]].
    const int N = 2 * n;
    m.n = N;
    const cd I(0, 1);
    std::vector<Eigen::Matrix2cd> units(4);
    units[0] << 1, 0, 0, 1;
    units[1] << I, 0, 0, -I;
    units[2] << 0, -1, 1, 0;
    units[3] << 0, -I, -I, 0;
    auto block = [&](int i, int j, const Eigen::Matrix2cd& u) {
      MatrixXcd x = MatrixXcd::Zero(N, N);
      x.block<2, 2>(2 * i, 2 * j) = u;
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int u = 0; u < 4; ++u) {
          if (i == j && u == 0) continue;
          m.spanning.push_back(block(i, j, units[u]));
        }
    for (int i = 0; i + 1 < n; ++i) {
      MatrixXcd h = block(i, i, units[0]) - block(i + 1, i + 1, units[0]);
      m.spanning.push_back(h);
      m.a.push_back(h);
    }
    m.generic_diag = decreasing_traceless(n, 2);
    return m;
  }
  m.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      m.spanning.push_back(unit(n, i, j));
      if (field == 'C') m.spanning.push_back(unit(n, i, j, cd(0, 1)));
    }
  for (int i = 0; i + 1 < n; ++i) {
    MatrixXcd h = unit(n, i, i) - unit(n, i + 1, i + 1);
    m.spanning.push_back(h);
    if (field == 'C') m.spanning.push_back(cd(0, 1) * h);
    m.a.push_back(h);
  }
  m.generic_diag = decreasing_traceless(n, 1);
  return m;
}

// su(p,q) as {X : X* J + J X = 0, tr X = 0} for the form J pairing e_i with
// e_{N+1-i} (i <= p) and equal to -1 on the middle q - p coordinates. The
// real diagonal diag(t_1..t_p, 0.., -t_p..-t_1) then lies in p.
Model su_model(const AlgebraId& id, int p, int q) {
  Model m;
  m.id = id;
  const int N = p + q;
  m.n = N;
  MatrixXcd J = MatrixXcd::Zero(N, N);
  for (int i = 0; i < p; ++i) J(i, N - 1 - i) = J(N - 1 - i, i) = 1.0;
  for (int i = p; i < q; ++i) J(i, i) = -1.0;
  const cd I(0, 1);
  std::vector<MatrixXcd> skew;  // anti-Hermitian basis
  for (int k = 0; k < N; ++k) skew.push_back(unit(N, k, k, I));
  for (int k = 0; k < N; ++k)
    for (int l = k + 1; l < N; ++l) {
      skew.push_back(unit(N, k, l) - unit(N, l, k));
      skew.push_back(unit(N, k, l, I) + unit(N, l, k, I));
    }
  for (const auto& s : skew) {
    MatrixXcd x = J * s;  // J^2 = 1, so J x is anti-Hermitian
    x -= (x.trace() / static_cast<double>(N)) * MatrixXcd::Identity(N, N);
    m.spanning.push_back(x);
  }
  for (int k = 0; k < p; ++k) m.a.push_back(unit(N, k, k) - unit(N, N - 1 - k, N - 1 - k));
  m.generic_diag.assign(N, Rational(0));
  for (int k = 0; k < p; ++k) {
    m.generic_diag[k] = pow4(p - 1 - k);
    m.generic_diag[N - 1 - k] = -pow4(p - 1 - k);
  }
  return m;
}

MatrixAlgebra build(Model m) {
  MatrixAlgebra alg;
  alg.id = m.id;
  alg.n = m.n;
  std::vector<MatrixXcd> kpart, ppart;
  for (const auto& x : m.spanning) {
    kpart.push_back((x + theta_of(x)) / 2.0);
    ppart.push_back((x - theta_of(x)) / 2.0);
  }
  auto kb = orthonormalise(kpart), pb = orthonormalise(ppart);
  alg.dim_k = static_cast<int>(kb.size());
  alg.dim_p = static_cast<int>(pb.size());
  alg.basis = kb;
  alg.basis.insert(alg.basis.end(), pb.begin(), pb.end());
  const int d = alg.dim();
  if (d > kMaxDim)
    throw ParameterError(m.id.str() + " has dimension " + std::to_string(d) + "; realizations are limited to " +
                         std::to_string(kMaxDim));

  alg.ad.assign(d, MatrixXd::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      MatrixXcd br = alg.basis[i] * alg.basis[j] - alg.basis[j] * alg.basis[i];
      VectorXd c = alg.coords(br);
      if ((alg.element(c) - br).cwiseAbs().maxCoeff() > 1e-9)
        throw InternalConsistencyError("realization of " + m.id.str() + " is not closed under brackets");
      alg.ad[i].col(j) = c;
    }
  alg.theta = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) alg.theta.col(i) = alg.coords(theta_of(alg.basis[i]));
  alg.killing = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      alg.killing(i, j) = alg.killing(j, i) = (alg.ad[i].array() * alg.ad[j].transpose().array()).sum();

  const int r = static_cast<int>(m.a.size());
  alg.a_factor = RationalMatrix(m.n, r);
  for (int k = 0; k < r; ++k) {
    VectorXd c = alg.coords(m.a[k]);
    if ((alg.element(c) - m.a[k]).cwiseAbs().maxCoeff() > 1e-9)
      throw InternalConsistencyError("a basis element outside " + m.id.str());
    alg.a_basis.push_back(c);
    for (int i = 0; i < m.n; ++i) alg.a_factor(i, k) = Rational(static_cast<long>(std::lround(m.a[k](i, i).real())));
  }
  MatrixXcd g = MatrixXcd::Zero(m.n, m.n);
  for (int i = 0; i < m.n; ++i) g(i, i) = m.generic_diag[i].get_d();
  alg.generic = alg.coords(g);
  alg.regular = m.generic_diag;
  return alg;
}

double hom_error(const MatrixAlgebra& alg, const MatrixXd& a) {
  double worst = 0;
  for (int i = 0; i < alg.dim(); ++i) {
    MatrixXd lhs = a * alg.ad[i];
    MatrixXd rhs = alg.ad_of(a.col(i)) * a;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

long round_checked(double x, const std::string& what) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-6)
    throw ResolutionError(what + " = " + std::to_string(x) + " is not an integer; the a basis or tolerance is off");
  return static_cast<long>(r);
}

int rank_of(const MatrixXd& m, double tol = 1e-6) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

MatrixXd a_matrix(const std::vector<VectorXd>& a_basis, int dim) {
  MatrixXd h(dim, static_cast<int>(a_basis.size()));
  for (std::size_t k = 0; k < a_basis.size(); ++k) h.col(static_cast<int>(k)) = a_basis[k];
  return h;
}


VectorXd value_vector(const RestrictedRootData& data, int i) {
  VectorXd v(static_cast<int>(data.values[i].size()));
  for (int k = 0; k < v.size(); ++k) v(k) = static_cast<double>(data.values[i][k]);
  return v;
}

double max_abs(const MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

VectorXd MatrixAlgebra::coords(const MatrixXcd& x) const {
  VectorXd c(dim());
  for (int i = 0; i < dim(); ++i) c(i) = inner(x, basis[i]);
  return c;
}

MatrixXcd MatrixAlgebra::element(const VectorXd& x) const {
  MatrixXcd m = MatrixXcd::Zero(n, n);
  for (int i = 0; i < dim(); ++i) m += x(i) * basis[i];
  return m;
}

MatrixXd MatrixAlgebra::ad_of(const VectorXd& x) const {
  MatrixXd m = MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0) m += x(i) * ad[i];
  return m;
}

VectorXd MatrixAlgebra::bracket(const VectorXd& x, const VectorXd& y) const { return ad_of(x) * y; }

MatrixAlgebra realize(const std::string& text) {
  AlgebraId id;
  try {
    id = parse_algebra_id(text);
  } catch (const CatalogueError& e) {
    throw ParameterError(e.what());
  }
  auto as_int = [&](const std::string& s) -> int {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw ParameterError("bad parameter in " + text);
    }
  };
  if (id.family == "sl" && id.params.size() == 2 &&
      (id.params[1] == "R" || id.params[1] == "C" || id.params[1] == "H")) {
    const int n = as_int(id.params[0]);
    if (n < 2) throw ParameterError(id.str() + ": n must be at least 2");
    if (n > 12) throw ParameterError(id.str() + " is too large to realize");
    return build(sl_model(id, n, id.params[1][0]));
  }
  if (id.family == "su" && id.params.size() == 2 && id.params[1] != "R" && id.params[1] != "C" &&
      id.params[1] != "H") {
    const int p = as_int(id.params[0]), q = as_int(id.params[1]);
    if (p < 1 || q < p) throw ParameterError(id.str() + ": need 1 <= p <= q");
    if (p + q > 12) throw ParameterError(id.str() + " is too large to realize");
    return build(su_model(id, p, q));
  }
  throw ParameterError("no matrix realization for '" + text + "' (supported: sl(n,R), sl(n,C), sl(n,H), su(p,q))");
}

MatrixXd expm(const MatrixXd& a) {
  constexpr int m = 6;
  const int n = static_cast<int>(a.rows());
  const double norm = n ? a.cwiseAbs().colwise().sum().maxCoeff() : 0.0;
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const MatrixXd x = a / std::ldexp(1.0, s);
  // c_k = (2m-k)! m! / ((2m)! k! (m-k)!)
  double c = 1.0;
  MatrixXd num = MatrixXd::Identity(n, n), den = MatrixXd::Identity(n, n), power = MatrixXd::Identity(n, n);
  for (int k = 1; k <= m; ++k) {
    c *= static_cast<double>(m - k + 1) / (k * (2 * m - k + 1));
    power = power * x;
    num += c * power;
    den += (k % 2 ? -c : c) * power;
  }
  MatrixXd r = den.partialPivLu().solve(num);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

bool AlgebraChecks::ok(double tol) const {
  return theta_hom <= tol && theta_square <= tol && killing_k_max < -tol && killing_p_min > tol &&
         a_commutator <= tol;
}

AlgebraChecks check_algebra(const MatrixAlgebra& alg) {
  AlgebraChecks c;
  const int d = alg.dim();
  c.theta_hom = hom_error(alg, alg.theta);
  c.theta_square = max_abs(alg.theta * alg.theta - MatrixXd::Identity(d, d));
  Eigen::SelfAdjointEigenSolver<MatrixXd> ek(alg.killing.topLeftCorner(alg.dim_k, alg.dim_k));
  Eigen::SelfAdjointEigenSolver<MatrixXd> ep(alg.killing.bottomRightCorner(alg.dim_p, alg.dim_p));
  c.killing_k_max = alg.dim_k ? ek.eigenvalues().maxCoeff() : -1.0;
  c.killing_p_min = alg.dim_p ? ep.eigenvalues().minCoeff() : 1.0;
  for (const auto& h : alg.a_basis)
    for (const auto& h2 : alg.a_basis) c.a_commutator = std::max(c.a_commutator, alg.bracket(h, h2).cwiseAbs().maxCoeff());
  return c;
}

RestrictedRootData restricted_roots(const MatrixAlgebra& alg, double cluster_tol) {
  return restricted_roots(alg, alg.a_basis, alg.a_factor, alg.generic, alg.regular, cluster_tol);
}

RestrictedRootData restricted_roots(const MatrixAlgebra& alg, const std::vector<VectorXd>& a_basis,
                                    const RationalMatrix& a_factor, const VectorXd& generic, const Vector& regular,
                                    double cluster_tol) {
  const int d = alg.dim();
  const int r = static_cast<int>(a_basis.size());
  RestrictedRootData out;
  out.a_basis = a_basis;
  out.a_factor = a_factor;
  out.generic = generic;
  out.regular = regular;
  out.dim_a = r;

  Eigen::SelfAdjointEigenSolver<MatrixXd> es(alg.ad_of(generic));
  const VectorXd& ev = es.eigenvalues();
  const MatrixXd& vecs = es.eigenvectors();
  std::vector<MatrixXd> ads;
  for (const auto& h : a_basis) ads.push_back(alg.ad_of(h));

  std::map<std::vector<long>, int> seen;
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && ev(end) - ev(end - 1) <= cluster_tol) ++end;
    const int m = end - start;
    out.max_spread = std::max(out.max_spread, ev(end - 1) - ev(start));
    MatrixXd v = vecs.middleCols(start, m);
    std::vector<long> values;
    for (int k = 0; k < r; ++k) {
      const double lam = (v.transpose() * ads[k] * v).trace() / m;
      if (max_abs(ads[k] * v - lam * v) > 1e-6)
        throw ResolutionError("eigenvalue cluster near " + std::to_string(ev(start)) +
                              " is not a joint eigenspace of ad(a); tighten the tolerance or use another regular element");
      values.push_back(round_checked(lam, "restricted root value"));
    }
    const bool zero = std::all_of(values.begin(), values.end(), [](long x) { return x == 0; });
    if (zero) {
      if (out.g0.size()) throw ResolutionError("zero eigenvalue split into several clusters");
      out.g0 = v;
      out.dim_g0 = m;
    } else {
      if (seen.count(values)) throw ResolutionError("one restricted root split into several clusters");
      seen[values] = static_cast<int>(out.values.size());
      out.values.push_back(values);
      out.mult.push_back(m);
      out.spaces.push_back(v);
    }
    start = end;
  }
  if (out.dim_g0 > 0) {
    const int gp = rank_of(out.g0.bottomRows(alg.dim_p));
    out.dim_k0 = rank_of(out.g0.topRows(alg.dim_k));
    if (gp != r) throw InternalConsistencyError("a is not maximal abelian in p (dim g_0 cap p = " +
                                                std::to_string(gp) + ")");
  }

  // Functionals in trace-form coordinates: h = D (D^T D)^-1 v.
  const RationalMatrix& D = a_factor;
  RationalMatrix ginv = (D.transpose() * D).inverse();
  std::vector<Vector> roots;
  for (const auto& vals : out.values) {
    Vector v;
    for (long x : vals) v.push_back(Rational(x));
    roots.push_back(D.apply(ginv.apply(v)));
  }
  RootSystem base(static_cast<int>(D.rows()), roots);
  std::vector<int> mult(base.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int idx = *base.find(roots[i]);
    out.system_index.push_back(idx);
    mult[idx] = out.mult[i];
  }
  out.system = make_weighted(base, std::move(mult));
  return out;
}

SimpleSystem computed_simple_system(const RestrictedRootData& data) {
  return simple_system(data.system.base, data.regular);
}

MatrixXd induced_map(const MatrixAlgebra& alg, const RestrictedRootData& data, const MatrixXd& a, double* a_error) {
  const int r = static_cast<int>(data.a_basis.size());
  MatrixXd h = a_matrix(data.a_basis, alg.dim());
  auto qr = h.colPivHouseholderQr();
  MatrixXd m(r, r);
  double err = 0;
  for (int k = 0; k < r; ++k) {
    VectorXd y = a * data.a_basis[k];
    VectorXd c = qr.solve(y);
    err = std::max(err, (h * c - y).cwiseAbs().maxCoeff());
    m.col(k) = c;
  }
  if (a_error) *a_error = err;
  // (lambda o A^-1)(H_k), as a map on value vectors.
  return m.inverse().transpose();
}

MatrixXd value_map(const RestrictedRootData& data, const Perm& root_map) {
  auto ss = computed_simple_system(data);
  auto pos = simple_positions(data, ss);
  std::vector<int> back(data.system.base.size(), -1);
  for (std::size_t i = 0; i < data.system_index.size(); ++i) back[data.system_index[i]] = static_cast<int>(i);
  const int r = static_cast<int>(pos.size());
  MatrixXd v(r, r), w(r, r);
  for (int i = 0; i < r; ++i) {
    v.col(i) = value_vector(data, pos[i]);
    w.col(i) = value_vector(data, back[root_map[data.system_index[pos[i]]]]);
  }
  return w * v.inverse();
}

LiftCertificate reflection_lift(const MatrixAlgebra& alg, const RestrictedRootData& data, int root, double scale,
                                double tol) {
  if (root < 0 || root >= static_cast<int>(data.values.size())) throw ParameterError("no such restricted root");
  LiftCertificate cert;
  cert.target = "s_alpha for alpha = root " + std::to_string(root);
  MatrixXd h = a_matrix(data.a_basis, alg.dim());
  MatrixXd gram = h.transpose() * alg.killing * h;
  VectorXd v = value_vector(data, root);
  const double alpha2 = v.dot(gram.ldlt().solve(v));  // |alpha|^2 for the Killing form

  VectorXd x = data.spaces[root].col(0);
  const double btheta = -x.dot(alg.killing * (alg.theta * x));
  if (!(btheta > 0)) throw InternalConsistencyError("B_theta is not positive on a root vector");
  x *= std::sqrt(2.0 * scale * scale / alpha2 / btheta);
  VectorXd z = (std::numbers::pi / 2) * (x + alg.theta * x);
  cert.automorphism = expm(alg.ad_of(z));
  cert.induced = induced_map(alg, data, cert.automorphism, &cert.a_error);
  cert.expected = value_map(data, reflection_perm(data.system.base, data.system_index[root]));
  cert.residual = max_abs(cert.induced - cert.expected);
  cert.hom_error = hom_error(alg, cert.automorphism);
  cert.valid = cert.residual <= tol && cert.hom_error <= tol && cert.a_error <= tol;
  return cert;
}

LiftCertificate identity_control(const MatrixAlgebra& alg, const RestrictedRootData& data, int root, double tol) {
  LiftCertificate cert;
  cert.target = "s_alpha against the identity map";
  cert.automorphism = MatrixXd::Identity(alg.dim(), alg.dim());
  cert.induced = induced_map(alg, data, cert.automorphism, &cert.a_error);
  cert.expected = value_map(data, reflection_perm(data.system.base, data.system_index.at(root)));
  cert.residual = max_abs(cert.induced - cert.expected);
  cert.hom_error = 0;
  cert.valid = cert.residual <= tol;
  return cert;
}

namespace {

double n_error(const MatrixAlgebra& alg, const RestrictedRootData& data, const MatrixXd& a) {
  std::vector<int> positive;
  for (std::size_t i = 0; i < data.values.size(); ++i) {
    // alpha(H_reg) > 0, read through the trace-form coordinates
    if (sgn(dot(data.system.base.root(data.system_index[i]), data.regular)) > 0) positive.push_back(static_cast<int>(i));
  }
  int cols = 0;
  for (int i : positive) cols += static_cast<int>(data.spaces[i].cols());
  MatrixXd basis(alg.dim(), cols);
  int c = 0;
  for (int i : positive) {
    basis.middleCols(c, data.spaces[i].cols()) = data.spaces[i];
    c += static_cast<int>(data.spaces[i].cols());
  }
  MatrixXd img = a * basis;
  return max_abs(img - basis * (basis.transpose() * img));
}

}  // namespace

LiftCertificate diagram_lift(const MatrixAlgebra& alg, const RestrictedRootData& data, const DiagramIsomorphism& s,
                              double tol) {
  auto ss = computed_simple_system(data);
  auto auts = weighted_diagram_automorphisms(weighted_diagram(data.system, ss));
  if (std::find(auts.begin(), auts.end(), s) == auts.end())
    throw ParameterError("not a weighted diagram automorphism of the restricted system");
  const MatrixXd expected = value_map(data, extend_to_linear(s, ss, ss).root_map);
  auto finish = [&](LiftCertificate cert) {
    cert.expected = expected;
    cert.induced = induced_map(alg, data, cert.automorphism, &cert.a_error);
    cert.residual = max_abs(cert.induced - cert.expected);
    cert.hom_error = hom_error(alg, cert.automorphism);
    cert.n_error = n_error(alg, data, cert.automorphism);
    cert.valid = cert.residual <= tol && cert.hom_error <= tol && cert.a_error <= tol && cert.n_error <= tol;
    return cert;
  };
  if (s.is_identity()) {
    LiftCertificate cert;
    cert.target = "identity";
    cert.automorphism = MatrixXd::Identity(alg.dim(), alg.dim());
    return finish(cert);
  }
  if (alg.id.family != "sl")
    throw ConstructionError("no lift recipe for a nontrivial diagram automorphism of " + alg.id.str());
  const int blocks = std::stoi(alg.id.params[0]);
  const int bs = alg.n / blocks;
  if (blocks > 16) throw ConstructionError("too many sign choices for " + alg.id.str());
  LiftCertificate best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << blocks); ++mask) {
    MatrixXcd j = MatrixXcd::Zero(alg.n, alg.n);
    for (int b = 0; b < blocks; ++b) {
      const double sign = (mask >> b) & 1u ? -1.0 : 1.0;
      j.block(b * bs, (blocks - 1 - b) * bs, bs, bs) = sign * MatrixXcd::Identity(bs, bs);
    }
    LiftCertificate cert;
    cert.target = "diagram automorphism via Ad(J) o theta";
    cert.automorphism = MatrixXd(alg.dim(), alg.dim());
    for (int i = 0; i < alg.dim(); ++i)
      cert.automorphism.col(i) = alg.coords(j * theta_of(alg.basis[i]) * j.adjoint());
    cert = finish(cert);
    if (cert.valid) return cert;
    if (cert.residual + cert.n_error < best.residual + best.n_error) best = cert;
  }
  throw ConstructionError("no sign choice of J gives a lift preserving n; best residual " +
                          std::to_string(best.residual) + ", n error " + std::to_string(best.n_error));
}

OmegaReport omega_image_check(const MatrixAlgebra& alg, const RestrictedRootData& data, double tol) {
  if (data.a_basis.size() > 2) throw ParameterError("the image check is limited to restricted rank <= 2");
  OmegaReport rep;
  auto ss = computed_simple_system(data);
  for (int p : simple_positions(data, ss)) rep.generators.push_back(reflection_lift(alg, data, p, 1.0, tol));
  for (const auto& s : weighted_diagram_automorphisms(weighted_diagram(data.system, ss)))
    if (!s.is_identity()) rep.generators.push_back(diagram_lift(alg, data, s, tol));

  std::vector<MatrixXd> expected;
  for (const auto& f : weighted_isomorphisms(data.system, data.system)) expected.push_back(value_map(data, f.root_map));
  rep.expected_order = expected.size();

  // Close the generated group, composing the automorphisms of g themselves.
  const int d = alg.dim();
  std::vector<MatrixXd> group = {MatrixXd::Identity(d, d)};
  std::vector<MatrixXd> induced = {induced_map(alg, data, group[0])};
  auto known = [&](const MatrixXd& m) {
    for (const auto& x : induced)
      if (max_abs(x - m) <= 1e-4) return true;
    return false;
  };
  for (std::size_t i = 0; i < group.size() && group.size() < 1000; ++i) {
    for (const auto& g : rep.generators) {
      MatrixXd next = g.automorphism * group[i];
      MatrixXd ind = induced_map(alg, data, next);
      if (known(ind)) continue;
      group.push_back(next);
      induced.push_back(ind);
    }
  }
  rep.induced_order = induced.size();
  for (const auto& e : expected) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& x : induced) best = std::min(best, max_abs(x - e));
    if (best > tol) ++rep.missing;
    else rep.max_residual = std::max(rep.max_residual, best);
  }
  for (const auto& x : induced) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : expected) best = std::min(best, max_abs(x - e));
    if (best > tol) ++rep.extra;
  }
  bool gens_ok = std::all_of(rep.generators.begin(), rep.generators.end(), [](const auto& c) { return c.valid; });
  rep.surjective = gens_ok && rep.missing == 0 && rep.extra == 0;
  return rep;
}

ChoiceReport choice_independence(const MatrixAlgebra& alg, const RestrictedRootData& data, std::uint64_t seed,
                                 bool identity, double cluster_tol) {
  ChoiceReport rep;
  const int r = static_cast<int>(data.a_basis.size());
  if (identity) {
    rep.rotated = restricted_roots(alg, data.a_basis, data.a_factor, data.generic, data.regular, cluster_tol);
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    VectorXd y = VectorXd::Zero(alg.dim());
    for (int i = 0; i < alg.dim_k; ++i) y(i) = normal(rng);
    rep.rotation = y.norm();
    MatrixXd k = expm(alg.ad_of(y));
    // Random unimodular change of basis of a.
    RationalMatrix p = RationalMatrix::identity(r);
    for (int step = 0; r > 1 && step < 2 * r; ++step) {
      const int i = static_cast<int>(rng() % r);
      int j = static_cast<int>(rng() % (r - 1));
      if (j >= i) ++j;
      const long c = rng() % 2 ? 1 : -1;
      for (int row = 0; row < r; ++row) p(row, i) += c * p(row, j);
    }
    if (rng() % 2)
      for (int row = 0; row < r; ++row) p(row, 0) = -p(row, 0);
    std::vector<VectorXd> a2;
    for (int col = 0; col < r; ++col) {
      VectorXd h = VectorXd::Zero(alg.dim());
      for (int j = 0; j < r; ++j) h += p(j, col).get_d() * data.a_basis[j];
      a2.push_back(k * h);
    }
    RationalMatrix factor = data.a_factor * p;
    Vector c;
    VectorXd generic = VectorXd::Zero(alg.dim());
    for (int col = 0; col < r; ++col) {
      c.push_back(make_rational(500 + static_cast<long>(rng() % 1001), 1000));
      generic += c.back().get_d() * a2[col];
    }
    Vector regular = factor.apply(c);
    rep.rotated = restricted_roots(alg, a2, factor, generic, regular, cluster_tol);
  }
  rep.isomorphic = find_weighted_isomorphism(rep.rotated.system, data.system).has_value();
  auto pairs = [](const RestrictedRootData& x) {
    std::set<std::pair<std::vector<long>, int>> s;
    for (std::size_t i = 0; i < x.values.size(); ++i) s.insert({x.values[i], x.mult[i]});
    return s;
  };
  rep.identical = pairs(rep.rotated) == pairs(data);
  return rep;
}

CrossCheck cross_check(const Catalogue& cat, const MatrixAlgebra& alg, const RestrictedRootData& data) {
  CrossCheck out;
  auto entry = cat.lookup(alg.id);
  out.catalogued = weighted_signature(entry_system(entry));
  out.computed = weighted_signature(data.system);
  out.matches = out.catalogued == out.computed;
  out.upgraded = out.matches ? cat.with_verified(alg.id) : cat;
  return out;
}

std::vector<int> simple_positions(const RestrictedRootData& data, const SimpleSystem& ss) {
  std::vector<int> back(data.system.base.size(), -1);
  for (std::size_t i = 0; i < data.system_index.size(); ++i) back[data.system_index[i]] = static_cast<int>(i);
  std::vector<int> out;
  for (int a : ss.simple) out.push_back(back[a]);
  return out;
}

}  // namespace rootaut
