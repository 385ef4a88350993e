#include "rootaut/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rootaut/errors.hpp"

namespace rootaut {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int SimpleSystem::simple_position(int root) const {
  auto it = std::find(simple.begin(), simple.end(), root);
  return it == simple.end() ? -1 : static_cast<int>(it - simple.begin());
}

Perm reflection_perm(const RootSystem& sys, int alpha) {
  const int n = sys.size();
  Perm p(n);
  const Vector& a = sys.root(alpha);
  for (int i = 0; i < n; ++i) {
    const int c = root_integer(sys, i, alpha);
    if (c == 0) {
      p[i] = i;
      continue;
    }
    auto j = sys.find(sub(sys.root(i), scaled(a, Rational(c))));
    if (!j) throw IntegrityError("root set is not closed under the reflection in " + to_string(a));
    p[i] = *j;
  }
  return p;
}

Vector default_regular_vector(const RootSystem& sys) {
  const int d = sys.dim();
  for (int k = 1; k < 64; ++k) {
    Vector v(d);
    Rational t = make_rational(1, 1L << std::min(k, 30));
    if (k > 30) t /= Rational(mpz_class(1) << (k - 30));
    Rational tp = t;
    for (int i = 0; i < d; ++i) {
      v[i] = Rational(d - i) + tp;
      tp *= t;
    }
    bool regular = true;
    for (const auto& r : sys.roots())
      if (sgn(dot(v, r)) == 0) {
        regular = false;
        break;
      }
    if (regular) return v;
  }
  throw RegularityError("no regular vector found among the default perturbations");
}

SimpleSystem simple_system(const RootSystem& sys, const Vector& v) {
  if (static_cast<int>(v.size()) != sys.dim()) throw ParameterError("regular vector has wrong dimension");
  SimpleSystem ss;
  ss.sys = sys;
  ss.regular = v;
  const int n = sys.size();
  ss.is_positive.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int s = sgn(dot(v, sys.root(i)));
    if (s == 0) throw RegularityError("vector " + to_string(v) + " is orthogonal to root " + to_string(sys.root(i)));
    if (s > 0) {
      ss.is_positive[i] = 1;
      ss.positive.push_back(i);
    }
  }
  for (int a : ss.positive) {
    if (sys.is_divisible(a)) continue;
    bool decomposable = false;
    for (int b : ss.positive) {
      if (b == a) continue;
      auto c = sys.find(sub(sys.root(a), sys.root(b)));
      if (c && ss.is_positive[*c]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) ss.simple.push_back(a);
  }
  std::sort(ss.simple.begin(), ss.simple.end(),
            [&](int x, int y) { return lex_less(sys.root(y), sys.root(x)); });
  for (int a : ss.simple) ss.simple_perms.push_back(reflection_perm(sys, a));
  return ss;
}

SimpleSystem simple_system(const RootSystem& sys) { return simple_system(sys, default_regular_vector(sys)); }

Vector simple_coordinates(const SimpleSystem& ss, const Vector& v) {
  std::vector<Vector> basis;
  for (int a : ss.simple) basis.push_back(ss.sys.root(a));
  auto c = solve_in_span(basis, v);
  if (!c) throw ParameterError(to_string(v) + " is not in the span of the simple roots");
  return *c;
}

int inversion_count(const SimpleSystem& ss, const Perm& perm) {
  int k = 0;
  for (int a : ss.positive)
    if (!ss.sys.is_divisible(a) && !ss.is_positive[perm[a]]) ++k;
  return k;
}

std::optional<std::vector<int>> reduced_word(const SimpleSystem& ss, const Perm& perm) {
  Perm cur = perm;
  std::vector<int> rev;
  const int r = ss.rank();
  for (;;) {
    int descent = -1;
    for (int i = 0; i < r; ++i)
      if (!ss.is_positive[cur[ss.simple[i]]]) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    cur = compose(cur, ss.simple_perms[descent]);
    rev.push_back(descent);
  }
  if (cur != identity_perm(ss.sys.size())) return std::nullopt;
  std::reverse(rev.begin(), rev.end());
  return rev;
}

WeylElement weyl_element(const SimpleSystem& ss, const Perm& perm) {
  auto w = reduced_word(ss, perm);
  if (!w) throw InternalConsistencyError("root permutation is not induced by a Weyl group element");
  return {perm, std::move(*w)};
}

WeylElement identity_element(const SimpleSystem& ss) { return {identity_perm(ss.sys.size()), {}}; }

WeylElement reflection(const SimpleSystem& ss, int alpha) {
  return weyl_element(ss, reflection_perm(ss.sys, alpha));
}

WeylElement multiply(const SimpleSystem& ss, const WeylElement& a, const WeylElement& b) {
  return weyl_element(ss, compose(a.perm, b.perm));
}

WeylElement inverse(const SimpleSystem& ss, const WeylElement& w) {
  (void)ss;
  WeylElement r{inverse(w.perm), w.word};
  std::reverse(r.word.begin(), r.word.end());
  return r;
}

namespace {

Vector reflect(const SimpleSystem& ss, int i, const Vector& v) {
  const Vector& a = ss.sys.root(ss.simple[i]);
  const Rational c = 2 * dot(v, a) / ss.sys.norm2(ss.simple[i]);
  if (sgn(c) == 0) return v;
  return sub(v, scaled(a, c));
}

Perm perm_of_word(const SimpleSystem& ss, const std::vector<int>& word) {
  Perm p = identity_perm(ss.sys.size());
  for (int i : word) p = compose(p, ss.simple_perms[i]);
  return p;
}

// Walks up from `v` through simple reflections until it is dominant; returns
// the letters in the order they were applied.
std::vector<int> descend(const SimpleSystem& ss, Vector& v) {
  std::vector<int> applied;
  for (;;) {
    int step = -1;
    for (int i = 0; i < ss.rank(); ++i)
      if (sgn(dot(v, ss.sys.root(ss.simple[i]))) < 0) {
        step = i;
        break;
      }
    if (step < 0) return applied;
    v = reflect(ss, step, v);
    applied.push_back(step);
  }
}

}  // namespace

Vector apply(const SimpleSystem& ss, const std::vector<int>& word, const Vector& v) {
  Vector r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(ss, *it, r);
  return r;
}

RationalMatrix matrix(const SimpleSystem& ss, const WeylElement& w) {
  const int d = ss.sys.dim();
  RationalMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    Vector col = apply(ss, w, unit_vector(d, j));
    for (int i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

std::pair<Vector, WeylElement> to_dominant(const SimpleSystem& ss, const Vector& v) {
  Vector u = v;
  std::vector<int> word = descend(ss, u);
  std::reverse(word.begin(), word.end());
  WeylElement w{perm_of_word(ss, word), word};
  return {u, w};
}

WeylElement longest_element(const SimpleSystem& ss) {
  return to_dominant(ss, negated(ss.regular)).second;
}

namespace {

// Layered walk over the Cayley graph. w s_j is one step longer than w exactly
// when w(alpha_j) is positive, so each layer only needs deduplication
// against itself.
template <class Visit>
void walk_layers(const SimpleSystem& ss, std::uint64_t cap, Visit visit) {
  const int r = ss.rank();
  const int n = ss.sys.size();
  struct Node {
    Perm perm;
    std::vector<int> word;
  };
  auto key_of = [&](const Perm& p) {
    std::string k(static_cast<std::size_t>(r) * 2, '\0');
    for (int i = 0; i < r; ++i) {
      const int x = p[ss.simple[i]];
      k[2 * i] = static_cast<char>(x & 0xff);
      k[2 * i + 1] = static_cast<char>((x >> 8) & 0xff);
    }
    return k;
  };
  std::vector<Node> layer{{identity_perm(n), {}}};
  std::uint64_t count = 0;
  while (!layer.empty()) {
    count += layer.size();
    if (count > cap)
      throw SizeError("Weyl group has more than " + std::to_string(cap) + " elements (raise --cap)");
    std::vector<Node> next;
    std::unordered_set<std::string> seen;
    for (const Node& w : layer) {
      for (int j = 0; j < r; ++j) {
        if (!ss.is_positive[w.perm[ss.simple[j]]]) continue;
        Perm p = compose(w.perm, ss.simple_perms[j]);
        if (!seen.insert(key_of(p)).second) continue;
        std::vector<int> word = w.word;
        word.push_back(j);
        next.push_back({std::move(p), std::move(word)});
      }
    }
    for (Node& w : layer) visit(std::move(w.perm), std::move(w.word));
    layer = std::move(next);
  }
}

}  // namespace

std::vector<WeylElement> generate_weyl(const SimpleSystem& ss, std::size_t cap) {
  std::vector<WeylElement> out;
  walk_layers(ss, cap, [&](Perm&& p, std::vector<int>&& w) { out.push_back({std::move(p), std::move(w)}); });
  return out;
}

std::uint64_t weyl_group_order(const SimpleSystem& ss, std::uint64_t cap) {
  std::uint64_t n = 0;
  walk_layers(ss, cap, [&](Perm&&, std::vector<int>&&) { ++n; });
  return n;
}

}  // namespace rootaut
