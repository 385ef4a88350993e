#include "rootaut/serialize.hpp"

#include <algorithm>

#include "rootaut/errors.hpp"

namespace rootaut {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParameterError("bad integer " + j.dump());
    return z;
  }
  throw ParameterError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParameterError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParameterError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParameterError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParameterError("a coordinate is [num, den], got " + j.dump());
  const mpz_class num = integer_from_json(j[0]), den = integer_from_json(j[1]);
  if (den == 0) throw ParameterError("zero denominator in " + j.dump());
  return make_rational(num, den);
}

Json to_json(const RootSystem& sys) {
  Json roots = Json::array();
  for (const auto& r : sys.roots()) {
    Json coords = Json::array();
    for (const auto& x : r) coords.push_back(to_json(x));
    roots.push_back(std::move(coords));
  }
  return {{"dim", sys.dim()}, {"roots", std::move(roots)}};
}

RootSystem root_system_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  const Json& roots = field(j, "roots");
  if (!roots.is_array()) throw ParameterError("'roots' must be an array");
  std::vector<Vector> vs;
  for (const auto& r : roots) {
    if (!r.is_array()) throw ParameterError("a root must be an array of coordinates");
    Vector v;
    for (const auto& x : r) v.push_back(rational_from_json(x));
    vs.push_back(std::move(v));
  }
  RootSystem sys(dim, std::move(vs));
  auto report = validate(sys);
  if (!report.ok()) throw IntegrityError("not a root system: " + report.summary());
  return sys;
}

Json to_json(const WeylElement& w) { return {{"word", w.word}, {"perm", w.perm}}; }

WeylElement weyl_element_from_json(const SimpleSystem& ss, const Json& j) {
  WeylElement w;
  w.word = int_list(field(j, "word"), "word");
  w.perm = int_list(field(j, "perm"), "perm");
  Perm p = identity_perm(ss.sys.size());
  for (int letter : w.word) {
    if (letter < 0 || letter >= ss.rank()) throw ParameterError("word letter " + std::to_string(letter) + " out of range");
    p = compose(p, ss.simple_perms[letter]);
  }
  if (p != w.perm) throw ParameterError("perm does not match the word");
  return w;
}

Json to_json(const DynkinDiagram& dd) {
  Json vertices = Json::array();
  for (int i = 0; i < dd.size(); ++i) {
    Json v = {{"doubled", static_cast<bool>(dd.doubled[i])}};
    v["root"] = i < static_cast<int>(dd.vertices.size()) ? dd.vertices[i] : -1;
    vertices.push_back(std::move(v));
  }
  Json edges = Json::array();
  for (const auto& e : dd.edges())
    edges.push_back({{"a", e.a}, {"b", e.b}, {"bonds", e.bonds}, {"shorter", e.shorter}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

DynkinDiagram diagram_from_json(const Json& j) {
  const Json& vertices = field(j, "vertices");
  const Json& edges = field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw ParameterError("'vertices' and 'edges' must be arrays");
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
  std::vector<bool> doubled(n, false);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    cartan[i][i] = 2;
    const Json& d = field(vertices[i], "doubled");
    if (!d.is_boolean()) throw ParameterError("'doubled' must be a boolean");
    doubled[i] = d.get<bool>();
    if (vertices[i].contains("root")) roots.push_back(int_field(vertices[i], "root"));
  }
  for (const auto& e : edges) {
    const int a = int_field(e, "a"), b = int_field(e, "b"), bonds = int_field(e, "bonds"),
              shorter = int_field(e, "shorter");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw ParameterError("edge endpoint out of range");
    if (cartan[a][b] != 0) throw ParameterError("repeated edge");
    if (bonds < 1 || bonds > 3) throw ParameterError("bond count must be 1, 2 or 3");
    if (shorter == -1) {
      if (bonds != 1) throw ParameterError("a multiple bond needs a direction");
      cartan[a][b] = cartan[b][a] = -1;
    } else if (shorter == a || shorter == b) {
      const int lng = shorter == a ? b : a;
      cartan[lng][shorter] = -bonds;
      cartan[shorter][lng] = -1;
    } else {
      throw ParameterError("'shorter' must be an endpoint or -1");
    }
  }
  auto dd = diagram_from_cartan(std::move(cartan), std::move(doubled));
  if (static_cast<int>(roots.size()) == n && std::none_of(roots.begin(), roots.end(), [](int r) { return r < 0; }))
    dd.vertices = std::move(roots);
  return dd;
}

Json to_json(const WeightedDynkinDiagram& wd) {
  Json j = to_json(wd.base);
  for (std::size_t i = 0; i < wd.weights.size(); ++i) {
    const auto& w = wd.weights[i];
    j["vertices"][i]["weight"] = w.doubled_mult ? Json::array({w.mult, *w.doubled_mult}) : Json(w.mult);
  }
  return j;
}

WeightedDynkinDiagram weighted_diagram_from_json(const Json& j) {
  WeightedDynkinDiagram wd{diagram_from_json(j), {}};
  for (int i = 0; i < wd.base.size(); ++i) {
    const Json& w = field(j["vertices"][i], "weight");
    VertexWeight vw;
    if (w.is_number_integer()) {
      vw.mult = w.get<int>();
    } else if (w.is_array() && w.size() == 2 && w[0].is_number_integer() && w[1].is_number_integer()) {
      vw.mult = w[0].get<int>();
      vw.doubled_mult = w[1].get<int>();
    } else {
      throw ParameterError("bad weight " + w.dump());
    }
    if (vw.mult <= 0 || vw.doubled_mult.value_or(1) <= 0) throw ParameterError("weights must be positive");
    if (vw.doubled_mult.has_value() != static_cast<bool>(wd.base.doubled[i]))
      throw ParameterError("vertex " + std::to_string(i) + ": a pair of weights goes with a doubled vertex");
    wd.weights.push_back(vw);
  }
  return wd;
}

Json to_json(const DiagramIsomorphism& s) { return s.image; }

DiagramIsomorphism diagram_isomorphism_from_json(const Json& j) {
  DiagramIsomorphism s{int_list(j, "isomorphism")};
  std::vector<bool> hit(s.image.size(), false);
  for (int x : s.image) {
    if (x < 0 || x >= static_cast<int>(s.image.size()) || hit[x]) throw ParameterError("not a bijection");
    hit[x] = true;
  }
  return s;
}

}  // namespace rootaut
