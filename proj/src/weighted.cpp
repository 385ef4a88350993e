#include "rootaut/weighted.hpp"

#include <algorithm>
#include <deque>

#include "rootaut/errors.hpp"

namespace rootaut {

std::string to_string(const VertexWeight& w) {
  if (!w.doubled_mult) return std::to_string(w.mult);
  return "(" + std::to_string(w.mult) + "," + std::to_string(*w.doubled_mult) + ")";
}

std::string to_string(const std::vector<VertexWeight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ",";
    out += to_string(ws[i]);
  }
  return out;
}

namespace {

int parse_positive(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("bad weight '" + text + "' in '" + whole + "'");
  }
  if (used != text.size() || v <= 0) throw ParameterError("bad weight '" + text + "' in '" + whole + "'");
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<int>> labels_of(const WeightedDynkinDiagram& dd) {
  std::vector<std::vector<int>> out;
  for (const auto& w : dd.weights) out.push_back({w.mult, w.doubled_mult.value_or(0)});
  return out;
}

}  // namespace

std::vector<VertexWeight> parse_weights(const std::string& text) {
  std::vector<VertexWeight> out;
  std::size_t i = 0;
  const std::string s = trim(text);
  if (s.empty()) return out;
  while (i <= s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    VertexWeight w;
    if (i < s.size() && s[i] == '(') {
      auto close = s.find(')', i);
      if (close == std::string::npos) throw ParameterError("unclosed pair in '" + text + "'");
      auto inner = s.substr(i + 1, close - i - 1);
      auto comma = inner.find(',');
      if (comma == std::string::npos) throw ParameterError("pair needs two entries in '" + text + "'");
      w.mult = parse_positive(trim(inner.substr(0, comma)), text);
      w.doubled_mult = parse_positive(trim(inner.substr(comma + 1)), text);
      i = close + 1;
      while (i < s.size() && s[i] == ' ') ++i;
      if (i < s.size() && s[i] != ',') throw ParameterError("expected ',' after pair in '" + text + "'");
    } else {
      auto comma = s.find(',', i);
      auto token = s.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
      w.mult = parse_positive(trim(token), text);
      i = comma == std::string::npos ? s.size() : comma;
    }
    out.push_back(w);
    if (i >= s.size()) break;
    ++i;  // skip ','
    if (i >= s.size()) throw ParameterError("trailing ',' in '" + text + "'");
  }
  return out;
}

WeightedRootSystem make_weighted(RootSystem base, std::vector<int> mult) {
  if (static_cast<int>(mult.size()) != base.size())
    throw ParameterError("multiplicity list has " + std::to_string(mult.size()) + " entries for " +
                         std::to_string(base.size()) + " roots");
  for (int i = 0; i < base.size(); ++i) {
    if (mult[i] <= 0) throw IntegrityError("multiplicity of " + to_string(base.root(i)) + " is not positive");
    const int n = base.negative(i);
    if (n < 0 || mult[n] != mult[i])
      throw IntegrityError("mult(a) != mult(-a) at " + to_string(base.root(i)));
  }
  if (!base.empty()) {
    // Simple reflections generate W, so invariance under them is enough.
    auto ss = simple_system(base);
    for (const auto& p : ss.simple_perms)
      for (int i = 0; i < base.size(); ++i)
        if (mult[p[i]] != mult[i])
          throw IntegrityError("multiplicity not constant on the W-orbit of " + to_string(base.root(i)));
  }
  return {std::move(base), std::move(mult)};
}

WeightedRootSystem expand_weights(const SimpleSystem& ss, const std::vector<VertexWeight>& weights) {
  const RootSystem& sys = ss.sys;
  if (static_cast<int>(weights.size()) != ss.rank())
    throw ParameterError("weight vector has length " + std::to_string(weights.size()) + ", rank is " +
                         std::to_string(ss.rank()));
  std::vector<int> mult(sys.size(), 0);
  std::deque<int> queue;
  auto assign = [&](int root, int m) {
    if (mult[root] == 0) {
      mult[root] = m;
      queue.push_back(root);
    } else if (mult[root] != m) {
      throw IntegrityError("weights are not W-invariant: " + to_string(sys.root(root)) + " receives " +
                           std::to_string(mult[root]) + " and " + std::to_string(m));
    }
  };
  for (int i = 0; i < ss.rank(); ++i) {
    const auto& w = weights[i];
    const int a = ss.simple[i];
    const int d = sys.double_of(a);
    if (w.mult <= 0 || (w.doubled_mult && *w.doubled_mult <= 0))
      throw ParameterError("weights must be positive");
    if ((d >= 0) != w.doubled_mult.has_value())
      throw IntegrityError(d >= 0 ? "doubled vertex " + std::to_string(i) + " needs a pair (m1,m2)"
                                  : "vertex " + std::to_string(i) + " is not doubled but carries a pair");
    assign(a, w.mult);
    if (d >= 0) assign(d, *w.doubled_mult);
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& p : ss.simple_perms) assign(p[x], mult[x]);
  }
  for (int i = 0; i < sys.size(); ++i)
    if (mult[i] == 0) throw IntegrityError("root " + to_string(sys.root(i)) + " not reached from the simple roots");
  return {sys, std::move(mult)};
}

WeightedRootSystem weighted_direct_sum(const std::vector<WeightedRootSystem>& parts) {
  std::vector<RootSystem> bases;
  for (const auto& p : parts) bases.push_back(p.base);
  RootSystem sum = direct_sum(bases);
  std::vector<int> mult(sum.size(), 0);
  int offset = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.base.size(); ++i) {
      Vector v = zero_vector(sum.dim());
      std::copy(p.base.root(i).begin(), p.base.root(i).end(), v.begin() + offset);
      mult[*sum.find(v)] = p.mult[i];
    }
    offset += p.base.dim();
  }
  return {std::move(sum), std::move(mult)};
}

WeightedDynkinDiagram weighted_diagram(const WeightedRootSystem& ws, const SimpleSystem& ss) {
  WeightedDynkinDiagram out{diagram(ss), {}};
  for (int a : ss.simple) {
    VertexWeight w{ws.mult[a], std::nullopt};
    const int d = ws.base.double_of(a);
    if (d >= 0) w.doubled_mult = ws.mult[d];
    out.weights.push_back(w);
  }
  return out;
}

std::vector<DiagramIsomorphism> weighted_diagram_isomorphisms(const WeightedDynkinDiagram& a,
                                                              const WeightedDynkinDiagram& b) {
  if (a.base.size() != b.base.size()) return {};
  return diagram_isomorphisms(a.base, b.base, labels_of(a), labels_of(b));
}

std::vector<DiagramIsomorphism> weighted_diagram_automorphisms(const WeightedDynkinDiagram& dd) {
  return weighted_diagram_isomorphisms(dd, dd);
}

namespace {

bool same_shape(const WeightedRootSystem& a, const WeightedRootSystem& b) {
  if (a.base.size() != b.base.size() || a.base.rank() != b.base.rank()) return false;
  auto ma = a.mult, mb = b.mult;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  return ma == mb;
}

}  // namespace

std::vector<RootIsomorphism> weighted_isomorphisms(const WeightedRootSystem& a, const WeightedRootSystem& b,
                                                   std::uint64_t cap) {
  std::vector<RootIsomorphism> out;
  if (!same_shape(a, b)) return out;
  auto ssa = simple_system(a.base);
  auto ssb = simple_system(b.base);
  auto diagram_isos = weighted_diagram_isomorphisms(weighted_diagram(a, ssa), weighted_diagram(b, ssb));
  if (diagram_isos.empty()) return out;
  auto weyl = generate_weyl(ssb, cap);
  std::vector<RationalMatrix> weyl_matrices;
  for (const auto& w : weyl) weyl_matrices.push_back(matrix(ssb, w));
  for (const auto& s : diagram_isos) {
    RootIsomorphism f = extend_to_linear(s, ssa, ssb);
    for (std::size_t k = 0; k < weyl.size(); ++k) {
      // W preserves every component and every norm, so the component map
      // and conformal factors carry over from f.
      out.push_back({weyl_matrices[k] * f.matrix, compose(weyl[k].perm, f.root_map), f.component_map,
                     f.conformal_sq});
    }
  }
  return out;
}

std::optional<RootIsomorphism> find_weighted_isomorphism(const WeightedRootSystem& a, const WeightedRootSystem& b) {
  if (!same_shape(a, b)) return std::nullopt;
  auto ssa = simple_system(a.base);
  auto ssb = simple_system(b.base);
  auto isos = weighted_diagram_isomorphisms(weighted_diagram(a, ssa), weighted_diagram(b, ssb));
  if (isos.empty()) return std::nullopt;
  return extend_to_linear(isos.front(), ssa, ssb);
}

std::uint64_t autw_order(const WeightedRootSystem& ws, const SimpleSystem& ss, std::uint64_t cap) {
  const std::uint64_t diag = weighted_diagram_automorphisms(weighted_diagram(ws, ss)).size();
  return weyl_group_order(ss, cap) * diag;
}

TypeTag canonical_tag(TypeTag t) {
  if ((t.type == RootType::B || t.type == RootType::C) && t.rank == 1) return {RootType::A, 1};
  if (t.type == RootType::C && t.rank == 2) return {RootType::B, 2};
  if (t.type == RootType::D && t.rank == 3) return {RootType::A, 3};
  return t;
}

std::string to_string(const ComponentSignature& s) { return to_string(s.type) + "[" + to_string(s.weights) + "]"; }

std::vector<ComponentSignature> weighted_signature(const WeightedRootSystem& ws) {
  std::vector<ComponentSignature> out;
  auto dec = decompose(ws.base);
  for (const auto& comp : dec.components) {
    std::vector<Vector> roots;
    for (int i : comp.roots) roots.push_back(ws.base.root(i));
    RootSystem sub(ws.base.dim(), roots);
    std::vector<int> mult(sub.size());
    for (int i : comp.roots) mult[*sub.find(ws.base.root(i))] = ws.mult[i];
    WeightedRootSystem part{sub, std::move(mult)};
    auto ss = simple_system(sub);
    auto wd = weighted_diagram(part, ss);

    const TypeTag tag = canonical_tag(comp.tag);
    auto model = simple_system(build_irreducible(tag));
    auto isos = diagram_isomorphisms(wd.base, diagram(model));
    if (isos.empty()) throw InternalConsistencyError("component does not match the model of " + to_string(tag));
    std::vector<VertexWeight> best;
    for (const auto& s : isos) {
      std::vector<VertexWeight> moved(wd.weights.size());
      for (std::size_t i = 0; i < wd.weights.size(); ++i) moved[s.image[i]] = wd.weights[i];
      if (best.empty() || moved < best) best = std::move(moved);
    }
    out.push_back({tag, std::move(best)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rootaut
