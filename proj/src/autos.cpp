#include "rootaut/autos.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "rootaut/errors.hpp"

namespace rootaut {

int DynkinDiagram::degree(int i) const {
  int d = 0;
  for (int j = 0; j < size(); ++j)
    if (j != i && cartan[i][j] != 0) ++d;
  return d;
}

std::vector<DiagramEdge> DynkinDiagram::edges() const {
  std::vector<DiagramEdge> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      if (cartan[i][j] == 0) continue;
      DiagramEdge e{i, j, bonds(i, j), -1};
      // |n_ij| / |n_ji| = |a_i|^2 / |a_j|^2
      if (std::abs(cartan[i][j]) > std::abs(cartan[j][i])) e.shorter = j;
      if (std::abs(cartan[i][j]) < std::abs(cartan[j][i])) e.shorter = i;
      out.push_back(e);
    }
  return out;
}

std::vector<std::vector<int>> DynkinDiagram::components() const {
  std::vector<int> label(size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{s}, stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < size(); ++u)
        if (label[u] < 0 && cartan[v][u] != 0) {
          label[u] = label[s];
          comp.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

DynkinDiagram diagram(const SimpleSystem& ss) {
  DynkinDiagram dd;
  dd.vertices = ss.simple;
  const int r = ss.rank();
  dd.cartan.assign(r, std::vector<int>(r, 0));
  dd.doubled.assign(r, false);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) dd.cartan[i][j] = root_integer(ss.sys, ss.simple[i], ss.simple[j]);
    dd.doubled[i] = ss.sys.is_doubled(ss.simple[i]);
  }
  return dd;
}

DynkinDiagram diagram_from_cartan(std::vector<std::vector<int>> cartan, std::vector<bool> doubled) {
  if (doubled.size() != cartan.size()) throw ParameterError("doubled flags do not match the Cartan matrix");
  for (const auto& row : cartan)
    if (row.size() != cartan.size()) throw ParameterError("Cartan matrix is not square");
  DynkinDiagram dd;
  dd.cartan = std::move(cartan);
  dd.doubled = std::move(doubled);
  return dd;
}

bool DiagramIsomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramIsomorphism compose(const DiagramIsomorphism& outer, const DiagramIsomorphism& inner) {
  return {compose(outer.image, inner.image)};
}

DiagramIsomorphism inverse(const DiagramIsomorphism& s) { return {inverse(s.image)}; }

namespace {

using Invariant = std::tuple<int, std::vector<std::pair<int, int>>, bool, std::vector<int>>;

Invariant vertex_invariant(const DynkinDiagram& dd, int v, const std::vector<std::vector<int>>& labels) {
  std::vector<std::pair<int, int>> sig;
  for (int u = 0; u < dd.size(); ++u)
    if (u != v && dd.cartan[v][u] != 0) sig.emplace_back(dd.cartan[v][u], dd.cartan[u][v]);
  std::sort(sig.begin(), sig.end());
  return {dd.degree(v), std::move(sig), static_cast<bool>(dd.doubled[v]),
          labels.empty() ? std::vector<int>{} : labels[v]};
}

}  // namespace

std::vector<DiagramIsomorphism> diagram_isomorphisms(const DynkinDiagram& a, const DynkinDiagram& b,
                                                     const std::vector<std::vector<int>>& labels_a,
                                                     const std::vector<std::vector<int>>& labels_b) {
  std::vector<DiagramIsomorphism> out;
  const int n = a.size();
  if (b.size() != n) return out;
  if (labels_a.size() != labels_b.size() || (!labels_a.empty() && static_cast<int>(labels_a.size()) != n))
    throw ParameterError("vertex labels do not match the diagrams");

  std::vector<Invariant> inv_a(n), inv_b(n);
  for (int v = 0; v < n; ++v) {
    inv_a[v] = vertex_invariant(a, v, labels_a);
    inv_b[v] = vertex_invariant(b, v, labels_b);
  }
  // Most constrained vertices first, ties by index.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return inv_a[x] < inv_a[y]; });
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return out;
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](int depth, int v, int w) {
    if (inv_a[v] != inv_b[w]) return false;
    for (int k = 0; k < depth; ++k) {
      const int u = order[k];
      if (a.cartan[v][u] != b.cartan[w][image[u]] || a.cartan[u][v] != b.cartan[image[u]][w]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back({image});
      return;
    }
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || !consistent(depth, v, w)) continue;
      used[w] = 1;
      image[v] = w;
      self(self, depth + 1);
      used[w] = 0;
      image[v] = -1;
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.image < y.image; });
  return out;
}

std::vector<DiagramIsomorphism> diagram_automorphisms(const DynkinDiagram& dd,
                                                      const std::vector<std::vector<int>>& labels) {
  return diagram_isomorphisms(dd, dd, labels, labels);
}

IsomorphismCheck is_isomorphism(const RationalMatrix& f, const RootSystem& a, const RootSystem& b) {
  using R = IsomorphismRefusal::Reason;
  if (static_cast<int>(f.rows()) != b.dim() || static_cast<int>(f.cols()) != a.dim())
    return IsomorphismRefusal{R::Shape, -1, -1, "matrix shape does not match the two ambient dimensions"};
  if (a.rank() != b.rank()) return IsomorphismRefusal{R::RankMismatch, -1, -1, "ranks differ"};
  if (a.size() != b.size())
    return IsomorphismRefusal{R::NotBijective, -1, -1, "root sets have different sizes"};

  // Condition (ii) is checked first, on all pairs: the root integer
  // 2<f a, f b>/|f b|^2 makes sense even when f a is not a root, and a
  // mismatch there is the more informative witness.
  const int n = a.size();
  std::vector<Vector> img(n);
  std::vector<int> target(n, -1);
  for (int i = 0; i < n; ++i) {
    img[i] = f.apply(a.root(i));
    if (is_zero(img[i]))
      return IsomorphismRefusal{R::RootNotMapped, i, -1, "f kills the root " + to_string(a.root(i))};
    if (auto j = b.find(img[i])) target[i] = *j;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::optional<int> x = a.cartan_integer(i, j), y;
      if (target[i] >= 0 && target[j] >= 0) {
        y = b.cartan_integer(target[i], target[j]);
      } else {
        Rational q = 2 * dot(img[i], img[j]) / norm2(img[j]);
        if (is_integer(q)) y = static_cast<int>(q.get_num().get_si());
      }
      if (x != y)
        return IsomorphismRefusal{R::RootIntegerChanged, i, j,
                                  "root integer of " + to_string(a.root(i)) + " against " + to_string(a.root(j)) +
                                      " is not preserved (condition ii)"};
    }

  RootIsomorphism iso;
  iso.matrix = f;
  iso.root_map.assign(n, -1);
  std::vector<char> hit(b.size(), 0);
  for (int i = 0; i < n; ++i) {
    if (target[i] < 0)
      return IsomorphismRefusal{R::RootNotMapped, i, -1,
                                "f" + to_string(a.root(i)) + " is not a root of the target (condition i)"};
    if (hit[target[i]])
      return IsomorphismRefusal{R::NotBijective, i, -1, "two roots map to " + to_string(b.root(target[i]))};
    hit[target[i]] = 1;
    iso.root_map[i] = target[i];
  }

  const int nc = a.num_components();
  iso.component_map.assign(nc, -1);
  iso.conformal_sq.assign(nc, Rational(0));
  for (int i = 0; i < a.size(); ++i) {
    const int c = a.component_of(i);
    const int tc = b.component_of(iso.root_map[i]);
    const Rational ratio = b.norm2(iso.root_map[i]) / a.norm2(i);
    if (iso.component_map[c] < 0) {
      iso.component_map[c] = tc;
      iso.conformal_sq[c] = ratio;
    } else if (iso.component_map[c] != tc || iso.conformal_sq[c] != ratio) {
      throw InternalConsistencyError("isomorphism is not conformal on an irreducible component");
    }
  }
  return iso;
}

RationalMatrix linear_extension(const std::vector<Vector>& sources, const std::vector<Vector>& images,
                                int target_dim) {
  if (sources.size() != images.size()) throw ParameterError("source and image lists differ in length");
  const std::size_t r = sources.size();
  const int d = sources.empty() ? 0 : static_cast<int>(sources[0].size());
  if (r == 0) return RationalMatrix(target_dim, d);
  RationalMatrix s = RationalMatrix::from_columns(sources, d);
  RationalMatrix t = RationalMatrix::from_columns(images, target_dim);
  RationalMatrix g = s.transpose() * s;
  return t * g.inverse() * s.transpose();
}

RootIsomorphism extend_to_linear(const DiagramIsomorphism& s, const SimpleSystem& ss, const SimpleSystem& ss2) {
  if (static_cast<int>(s.image.size()) != ss.rank() || ss2.rank() != ss.rank())
    throw ParameterError("diagram isomorphism does not match the simple systems");
  std::vector<Vector> src, dst;
  for (int i = 0; i < ss.rank(); ++i) {
    src.push_back(ss.sys.root(ss.simple[i]));
    dst.push_back(ss2.sys.root(ss2.simple[s.image[i]]));
  }
  auto check = is_isomorphism(linear_extension(src, dst, ss2.sys.dim()), ss.sys, ss2.sys);
  if (auto* refusal = std::get_if<IsomorphismRefusal>(&check))
    throw InternalConsistencyError("linear extension of a diagram isomorphism is not a root isomorphism: " +
                                   refusal->message);
  return std::get<RootIsomorphism>(std::move(check));
}

SemidirectParts semidirect_decompose(const Perm& f, const SimpleSystem& ss) {
  const RootSystem& sys = ss.sys;
  if (static_cast<int>(f.size()) != sys.size()) throw ParameterError("permutation does not match the system");
  // Sum of the roots of f(positive system): a regular vector inside f(D).
  Vector rho = zero_vector(sys.dim());
  for (int p : ss.positive) rho = add(rho, sys.root(f[p]));
  auto [dom, w] = to_dominant(ss, rho);
  Perm s_perm = compose(w.perm, f);
  DiagramIsomorphism s;
  for (int a : ss.simple) {
    const int pos = ss.simple_position(s_perm[a]);
    if (pos < 0) throw InternalConsistencyError("residual of the Weyl part does not fix the chamber");
    s.image.push_back(pos);
  }
  if (compose(inverse(w.perm), s_perm) != f) throw InternalConsistencyError("semidirect recomposition failed");
  return {std::move(w), std::move(s), std::move(s_perm)};
}

SemidirectParts semidirect_decompose(const RootIsomorphism& f, const SimpleSystem& ss) {
  return semidirect_decompose(f.root_map, ss);
}

MinusIdParts minus_id_decomposition(const SimpleSystem& ss) {
  MinusIdParts out;
  out.w0 = longest_element(ss);
  const DynkinDiagram dd = diagram(ss);
  out.s.image.resize(ss.rank());
  for (int i = 0; i < ss.rank(); ++i) {
    const int img = ss.sys.negative(out.w0.perm[ss.simple[i]]);
    const int pos = ss.simple_position(img);
    if (pos < 0) throw InternalConsistencyError("-w0 does not permute the simple roots");
    out.s.image[i] = pos;
  }
  out.components = dd.components();
  for (const auto& comp : out.components) {
    bool moved = false;
    for (int v : comp) moved = moved || out.s.image[v] != v;
    out.nontrivial.push_back(moved);
  }
  return out;
}

std::uint64_t aut_order(const SimpleSystem& ss, std::uint64_t cap) {
  const std::uint64_t diag = diagram_automorphisms(diagram(ss)).size();
  return weyl_group_order(ss, cap) * diag;
}

}  // namespace rootaut
