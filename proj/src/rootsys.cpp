#include "rootaut/rootsys.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "rootaut/errors.hpp"

namespace rootaut {

namespace {
constexpr int kNotIntegral = INT_MIN;
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

std::string to_string(const TypeTag& t) { return to_string(t.type) + std::to_string(t.rank); }

RootType parse_root_type(const std::string& s) {
  static const std::map<std::string, RootType> names = {
      {"A", RootType::A}, {"B", RootType::B}, {"C", RootType::C}, {"D", RootType::D},
      {"E", RootType::E}, {"F", RootType::F}, {"G", RootType::G}, {"BC", RootType::BC}};
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto it = names.find(u);
  if (it == names.end()) throw ParameterError("unknown root system type '" + s + "'");
  return it->second;
}

bool valid_type(RootType t, int rank) {
  switch (t) {
    case RootType::A:
    case RootType::B:
    case RootType::C:
    case RootType::BC: return rank >= 1;
    case RootType::D: return rank >= 2;
    case RootType::E: return rank >= 6 && rank <= 8;
    case RootType::F: return rank == 4;
    case RootType::G: return rank == 2;
  }
  return false;
}

struct RootSystem::Data {
  int dim = 0;
  std::vector<Vector> roots;
  std::vector<Rational> norm2;
  // Gram entries are kept as integers over a common denominator D^2, where D
  // clears every coordinate denominator.
  std::vector<mpz_class> gram_num;
  mpz_class denom2 = 1;
  std::vector<int> cartan;
  std::vector<int> neg, dbl, half;
  std::vector<int> comp;
  int ncomp = 0;
  int rank = 0;
  bool reduced = true;
};

namespace {

int find_in(const std::vector<Vector>& sorted, const Vector& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v, lex_less);
  if (it != sorted.end() && *it == v) return static_cast<int>(it - sorted.begin());
  return -1;
}

}  // namespace

RootSystem::RootSystem() : RootSystem(0, {}) {}

RootSystem::RootSystem(int dim, std::vector<Vector> roots) {
  if (dim < 0) throw ParameterError("negative dimension");
  auto d = std::make_shared<Data>();
  d->dim = dim;
  for (const auto& r : roots) {
    if (static_cast<int>(r.size()) != dim)
      throw ParameterError("root " + to_string(r) + " has length " + std::to_string(r.size()) +
                           ", expected " + std::to_string(dim));
    if (is_zero(r)) throw ParameterError("zero vector is not a root");
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i] == roots[i - 1]) throw ParameterError("duplicate root " + to_string(roots[i]));
  d->roots = std::move(roots);
  const int n = static_cast<int>(d->roots.size());

  mpz_class den = 1;
  for (const auto& r : d->roots)
    for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(dim));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) ints[i][k] = d->roots[i][k].get_num() * (den / d->roots[i][k].get_den());
  d->denom2 = den * den;

  d->gram_num.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < dim; ++k)
        if (ints[i][k] != 0 && ints[j][k] != 0) s += ints[i][k] * ints[j][k];
      d->gram_num[i * n + j] = s;
      d->gram_num[j * n + i] = s;
    }
  d->norm2.resize(n);
  for (int i = 0; i < n; ++i) d->norm2[i] = make_rational(d->gram_num[i * n + i], d->denom2);

  d->cartan.assign(static_cast<std::size_t>(n) * n, kNotIntegral);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class num = 2 * d->gram_num[i * n + j];
      const mpz_class& den_j = d->gram_num[j * n + j];
      if (mpz_divisible_p(num.get_mpz_t(), den_j.get_mpz_t())) {
        mpz_class q = num / den_j;
        if (q.fits_sint_p()) d->cartan[i * n + j] = static_cast<int>(q.get_si());
      }
    }

  d->neg.assign(n, -1);
  d->dbl.assign(n, -1);
  d->half.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    d->neg[i] = find_in(d->roots, negated(d->roots[i]));
    d->dbl[i] = find_in(d->roots, scaled(d->roots[i], Rational(2)));
    if (d->dbl[i] >= 0) {
      d->half[d->dbl[i]] = i;
      d->reduced = false;
    }
  }

  // Union-find over the non-orthogonality graph; labels follow the first
  // root index of each component.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d->gram_num[i * n + j] != 0) {
        int a = root_of(i), b = root_of(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  d->comp.assign(n, -1);
  std::map<int, int> label;
  for (int i = 0; i < n; ++i) {
    int r = root_of(i);
    auto [it, fresh] = label.emplace(r, static_cast<int>(label.size()));
    d->comp[i] = it->second;
  }
  d->ncomp = static_cast<int>(label.size());
  d->rank = static_cast<int>(independent_subset(d->roots).size());
  d_ = std::move(d);
}

int RootSystem::dim() const { return d_->dim; }
int RootSystem::size() const { return static_cast<int>(d_->roots.size()); }
const Vector& RootSystem::root(int i) const { return d_->roots.at(i); }
const std::vector<Vector>& RootSystem::roots() const { return d_->roots; }

std::optional<int> RootSystem::find(const Vector& v) const {
  int i = find_in(d_->roots, v);
  if (i < 0) return std::nullopt;
  return i;
}

int RootSystem::negative(int i) const { return d_->neg.at(i); }
int RootSystem::double_of(int i) const { return d_->dbl.at(i); }
int RootSystem::half_of(int i) const { return d_->half.at(i); }
bool RootSystem::is_reduced() const { return d_->reduced; }
const Rational& RootSystem::norm2(int i) const { return d_->norm2.at(i); }

Rational RootSystem::gram(int i, int j) const {
  const int n = size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ParameterError("root index out of range");
  return make_rational(d_->gram_num[i * n + j], d_->denom2);
}

std::optional<int> RootSystem::cartan_integer(int i, int j) const {
  const int n = size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ParameterError("root index out of range");
  int c = d_->cartan[i * n + j];
  if (c == kNotIntegral) return std::nullopt;
  return c;
}

int RootSystem::rank() const { return d_->rank; }
int RootSystem::num_components() const { return d_->ncomp; }
int RootSystem::component_of(int i) const { return d_->comp.at(i); }

std::string to_string(Check c) {
  switch (c) {
    case Check::NegationClosure: return "negation-closure";
    case Check::ReflectionClosure: return "reflection-closure";
    case Check::Integrality: return "integrality";
    case Check::Proportionality: return "proportionality";
    case Check::Rank: return "rank";
  }
  return "?";
}

bool ValidationReport::failed(Check c) const {
  return std::any_of(failures.begin(), failures.end(), [c](const Failure& f) { return f.check == c; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << "; ";
    os << to_string(failures[i].check) << ": " << failures[i].detail;
  }
  return os.str();
}

RootSystem build_irreducible(RootType type, int rank) {
  if (!valid_type(type, rank))
    throw ParameterError("no irreducible root system of type " + to_string(type) + " and rank " +
                         std::to_string(rank));
  const int r = rank;
  std::vector<Vector> roots;
  auto e = [](int d, int i, long s = 1) { return unit_vector(d, i, s); };
  // +-e_i +- e_j for i < j in dimension d
  auto pm_pairs = [&](int d, int upto) {
    for (int i = 0; i < upto; ++i)
      for (int j = i + 1; j < upto; ++j)
        for (long si : {1L, -1L})
          for (long sj : {1L, -1L}) roots.push_back(add(e(d, i, si), e(d, j, sj)));
  };
  int dim = r;
  switch (type) {
    case RootType::A:
      dim = r + 1;
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
          if (i != j) roots.push_back(sub(e(dim, i), e(dim, j)));
      break;
    case RootType::B:
      pm_pairs(dim, r);
      for (int i = 0; i < r; ++i) roots.push_back(e(dim, i)), roots.push_back(e(dim, i, -1));
      break;
    case RootType::C:
      pm_pairs(dim, r);
      for (int i = 0; i < r; ++i) roots.push_back(e(dim, i, 2)), roots.push_back(e(dim, i, -2));
      break;
    case RootType::BC:
      pm_pairs(dim, r);
      for (int i = 0; i < r; ++i)
        for (long s : {1L, -1L, 2L, -2L}) roots.push_back(e(dim, i, s));
      break;
    case RootType::D:
      pm_pairs(dim, r);
      break;
    case RootType::G:
      dim = 3;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
          if (i != j) roots.push_back(sub(e(3, i), e(3, j)));
        Vector lng = sub(sub(e(3, i, 3), e(3, 0)), add(e(3, 1), e(3, 2)));  // 2e_i - e_j - e_k
        roots.push_back(lng);
        roots.push_back(negated(lng));
      }
      break;
    case RootType::F:
      pm_pairs(dim, 4);
      for (int i = 0; i < 4; ++i) roots.push_back(e(dim, i)), roots.push_back(e(dim, i, -1));
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(4);
        for (int k = 0; k < 4; ++k) v[k] = make_rational((mask >> k) & 1 ? -1 : 1, 2);
        roots.push_back(std::move(v));
      }
      break;
    case RootType::E: {
      // Everything lives inside the E_8 lattice model; E_7 and E_6 are the
      // roots orthogonal to (1,...,1) and additionally to e_7 + e_8.
      dim = 8;
      auto keep = [r](const Vector& v) {
        if (r <= 7) {
          Rational s = 0;
          for (const auto& x : v) s += x;
          if (s != 0) return false;
        }
        if (r == 6 && v[6] + v[7] != 0) return false;
        return true;
      };
      std::vector<Vector> all;
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          for (long si : {1L, -1L})
            for (long sj : {1L, -1L}) all.push_back(add(e(8, i, si), e(8, j, sj)));
      for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        Vector v(8);
        for (int k = 0; k < 8; ++k) v[k] = make_rational((mask >> k) & 1 ? -1 : 1, 2);
        all.push_back(std::move(v));
      }
      for (auto& v : all)
        if (keep(v)) roots.push_back(std::move(v));
      break;
    }
  }
  return RootSystem(dim, std::move(roots));
}

RootSystem direct_sum(const std::vector<RootSystem>& systems) {
  if (systems.empty()) throw ParameterError("direct_sum of an empty list");
  int total = 0;
  for (const auto& s : systems) total += s.dim();
  std::vector<Vector> roots;
  int offset = 0;
  for (const auto& s : systems) {
    for (const auto& r : s.roots()) {
      Vector v = zero_vector(total);
      std::copy(r.begin(), r.end(), v.begin() + offset);
      roots.push_back(std::move(v));
    }
    offset += s.dim();
  }
  return RootSystem(total, std::move(roots));
}

RootSystem scaled(const RootSystem& sys, const Rational& t) {
  if (sgn(t) == 0) throw ParameterError("scaling by zero");
  std::vector<Vector> roots;
  for (const auto& r : sys.roots()) roots.push_back(scaled(r, t));
  return RootSystem(sys.dim(), std::move(roots));
}

int root_integer(const RootSystem& sys, int alpha, int beta) {
  auto c = sys.cartan_integer(alpha, beta);
  if (!c)
    throw IntegrityError("root integer of " + to_string(sys.root(alpha)) + " against " +
                         to_string(sys.root(beta)) + " is not an integer");
  return *c;
}

ValidationReport validate(const RootSystem& sys) {
  ValidationReport rep;
  const int n = sys.size();
  auto fail = [&](Check c, int a, int b, std::string detail) {
    rep.failures.push_back({c, a, b, std::move(detail)});
  };
  for (int i = 0; i < n; ++i)
    if (sys.negative(i) < 0) {
      fail(Check::NegationClosure, i, i, "-" + to_string(sys.root(i)) + " is missing");
      break;
    }
  bool integral_reported = false, reflection_reported = false;
  for (int i = 0; i < n && !(integral_reported && reflection_reported); ++i)
    for (int j = 0; j < n; ++j) {
      auto c = sys.cartan_integer(i, j);
      if (!c && !integral_reported) {
        fail(Check::Integrality, i, j,
             "2<a,b>/|b|^2 = " + to_string(Rational(2 * sys.gram(i, j) / sys.norm2(j))) + " for a=" +
                 to_string(sys.root(i)) + ", b=" + to_string(sys.root(j)));
        integral_reported = true;
      }
      if (reflection_reported) continue;
      Rational k = c ? Rational(*c) : Rational(2 * sys.gram(i, j) / sys.norm2(j));
      if (sgn(k) == 0) continue;
      Vector img = sub(sys.root(i), scaled(sys.root(j), k));
      if (!sys.find(img)) {
        fail(Check::ReflectionClosure, i, j,
             "s_b(a) = " + to_string(img) + " is not a root for a=" + to_string(sys.root(i)) +
                 ", b=" + to_string(sys.root(j)));
        reflection_reported = true;
      }
    }
  for (int i = 0; i < n; ++i) {
    bool done = false;
    for (int j = i + 1; j < n && !done; ++j) {
      Rational g = sys.gram(i, j);
      if (g * g != sys.norm2(i) * sys.norm2(j)) continue;
      Rational ratio = g / sys.norm2(i);  // root(j) = ratio * root(i)
      const Rational a = abs(ratio);
      if (a != 1 && a != 2 && a != make_rational(1, 2)) {
        fail(Check::Proportionality, i, j,
             to_string(sys.root(j)) + " = " + to_string(ratio) + " * " + to_string(sys.root(i)));
        done = true;
      }
    }
    if (done) break;
  }
  if (sys.rank() > sys.dim()) fail(Check::Rank, -1, -1, "rank exceeds ambient dimension");
  return rep;
}

TypeTag classify_irreducible(const RootSystem& sys, const std::vector<int>& idx) {
  std::vector<Vector> vs;
  for (int i : idx) vs.push_back(sys.root(i));
  const int r = static_cast<int>(independent_subset(vs).size());
  const long n = static_cast<long>(idx.size());
  bool reduced = true;
  std::map<Rational, long> lengths;  // norm^2 of indivisible roots -> count
  for (int i : idx) {
    if (sys.is_divisible(i)) {
      reduced = false;
      continue;
    }
    lengths[sys.norm2(i)]++;
  }
  auto bad = [&](const std::string& why) {
    return IntegrityError("unrecognised irreducible component (rank " + std::to_string(r) + ", " +
                          std::to_string(n) + " roots): " + why);
  };
  if (!reduced) {
    if (n == 2L * r * (r + 1)) return {RootType::BC, r};
    throw bad("nonreduced but not of type BC");
  }
  if (lengths.size() == 1) {
    if (n == static_cast<long>(r) * (r + 1)) return {RootType::A, r};
    if (r >= 4 && n == 2L * r * (r - 1)) return {RootType::D, r};
    if (r == 6 && n == 72) return {RootType::E, 6};
    if (r == 7 && n == 126) return {RootType::E, 7};
    if (r == 8 && n == 240) return {RootType::E, 8};
    throw bad("simply laced with an unexpected root count");
  }
  if (lengths.size() == 2) {
    auto shorter = lengths.begin(), longer = std::next(lengths.begin());
    Rational ratio = longer->first / shorter->first;
    long s = shorter->second, l = longer->second;
    if (ratio == 2) {
      if (r == 4 && s == 24 && l == 24) return {RootType::F, 4};
      if (s == 2L * r && l == 2L * r * (r - 1)) return {RootType::B, r};
      if (l == 2L * r && s == 2L * r * (r - 1)) return {RootType::C, r};
    }
    if (ratio == 3 && r == 2 && s == 6 && l == 6) return {RootType::G, 2};
    throw bad("two root lengths with ratio " + to_string(ratio));
  }
  throw bad("more than two root lengths in a reduced system");
}

ComponentDecomposition decompose(const RootSystem& sys) {
  ComponentDecomposition out;
  out.components.resize(sys.num_components());
  for (int i = 0; i < sys.size(); ++i) out.components[sys.component_of(i)].roots.push_back(i);
  for (auto& c : out.components) {
    c.tag = classify_irreducible(sys, c.roots);
    std::vector<Vector> vs;
    for (int i : c.roots) vs.push_back(sys.root(i));
    for (auto k : independent_subset(vs)) c.basis.push_back(vs[k]);
  }
  return out;
}

Rational killing_scale(const RootSystem& sys, int component) {
  if (component < 0 || component >= sys.num_components())
    throw ParameterError("component index out of range");
  Rational total = 0;
  std::vector<Vector> vs;
  for (int i = 0; i < sys.size(); ++i)
    if (sys.component_of(i) == component) {
      total += sys.norm2(i);
      vs.push_back(sys.root(i));
    }
  return Rational(static_cast<long>(independent_subset(vs).size())) / total;
}

}  // namespace rootaut
