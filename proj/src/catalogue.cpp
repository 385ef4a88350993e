#include "rootaut/catalogue.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "rootaut/errors.hpp"

namespace rootaut {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperStated: return "paper-stated";
    case Provenance::ExternalReference: return "external-reference";
    case Provenance::MachineVerified: return "machine-verified";
  }
  return "?";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "paper-stated") return Provenance::PaperStated;
  if (s == "external-reference") return Provenance::ExternalReference;
  if (s == "machine-verified") return Provenance::MachineVerified;
  throw CatalogueError("unknown provenance '" + s + "'");
}

std::string AlgebraId::str() const {
  std::string out = family;
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + params[i];
  return out + ")";
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::optional<int> as_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

bool is_field(const std::string& s) { return s == "R" || s == "C" || s == "H"; }

bool is_exceptional(const std::string& f) {
  return f == "e6" || f == "e7" || f == "e8" || f == "f4" || f == "g2";
}

std::vector<VertexWeight> uniform(int rank, int m) { return std::vector<VertexWeight>(rank, VertexWeight{m, {}}); }

CatalogueEntry make(const AlgebraId& id, RootType t, int rank, std::vector<VertexWeight> w, Provenance p) {
  return {id, {t, rank}, std::move(w), p};
}

}  // namespace

AlgebraId parse_algebra_id(const std::string& text) {
  std::string s = trim(text);
  // Accept the blackboard-bold field letters as well.
  for (auto [from, to] : {std::pair<std::string, std::string>{"ℝ", "R"}, {"ℂ", "C"}, {"ℍ", "H"}}) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), to);
  }
  AlgebraId id;
  auto open = s.find('(');
  if (open == std::string::npos) {
    id.family = s;
  } else {
    if (s.back() != ')') throw CatalogueError("malformed algebra id '" + text + "'");
    id.family = trim(s.substr(0, open));
    for (auto& p : split(s.substr(open + 1, s.size() - open - 2), ',')) {
      if (p.empty()) throw CatalogueError("empty parameter in '" + text + "'");
      if (!as_int(p) && !is_field(p)) throw CatalogueError("bad parameter '" + p + "' in '" + text + "'");
      auto n = as_int(p);
      id.params.push_back(n ? std::to_string(*n) : p);
    }
  }
  if (id.family.empty() ||
      !std::all_of(id.family.begin(), id.family.end(), [](char c) { return std::islower(c) || std::isdigit(c) || c == '*'; }))
    throw CatalogueError("malformed algebra id '" + text + "'");
  // su(p,q) = su(q,p) and likewise for so and sp.
  if ((id.family == "su" || id.family == "so" || id.family == "sp") && id.params.size() == 2 &&
      as_int(id.params[0]) && as_int(id.params[1]) && *as_int(id.params[0]) > *as_int(id.params[1]))
    std::swap(id.params[0], id.params[1]);
  return id;
}

bool is_compact(const AlgebraId& id) {
  const auto& f = id.family;
  if (f == "su" || f == "so" || f == "sp") {
    if (id.params.size() == 1 && as_int(id.params[0])) return true;
    if (id.params.size() == 2 && as_int(id.params[0]) && *as_int(id.params[0]) == 0) return true;
  }
  if (is_exceptional(f)) {
    if (id.params.empty()) return true;
    static const std::map<std::string, int> compact_index = {
        {"e6", -78}, {"e7", -133}, {"e8", -248}, {"f4", -52}, {"g2", -14}};
    if (id.params.size() == 1 && as_int(id.params[0]) == compact_index.at(f)) return true;
  }
  return false;
}

std::optional<CatalogueEntry> seed_entry(const AlgebraId& id) {
  const auto& f = id.family;
  const auto& p = id.params;
  const auto P = Provenance::PaperStated;
  const auto X = Provenance::ExternalReference;
  if (p.size() == 2 && as_int(p[0]) && as_int(p[1])) {
    const int a = *as_int(p[0]), b = *as_int(p[1]);
    if (a >= 1 && b > a) {
      const int n = b - a;
      if (f == "su") {
        auto w = uniform(a, 2);
        w.back() = {2 * n, 1};
        return make(id, RootType::BC, a, std::move(w), P);
      }
      if (f == "sp") {
        auto w = uniform(a, 4);
        w.back() = {4 * n, 3};
        return make(id, RootType::BC, a, std::move(w), X);
      }
      if (f == "so" && n == 1 && a >= 2) return make(id, RootType::B, a, uniform(a, 1), P);
    }
    if (f == "so" && a == b && a >= 4) return make(id, RootType::D, a, uniform(a, 1), P);
    return std::nullopt;
  }
  if (p.size() == 2 && as_int(p[0]) && is_field(p[1])) {
    const int n = *as_int(p[0]);
    const char k = p[1][0];
    const int m = k == 'R' ? 1 : k == 'C' ? 2 : 4;
    if (f == "sl" && n >= 2) return make(id, RootType::A, n - 1, uniform(n - 1, m), k == 'H' ? X : P);
    if (f == "sp" && n >= 2 && k != 'H') return make(id, RootType::C, n, uniform(n, m), P);
    if (f == "so" && k == 'C') {
      if (n >= 5 && n % 2 == 1) return make(id, RootType::B, n / 2, uniform(n / 2, 2), P);
      if (n >= 8 && n % 2 == 0) return make(id, RootType::D, n / 2, uniform(n / 2, 2), P);
    }
    return std::nullopt;
  }
  if (p.size() == 1 && is_exceptional(f)) {
    static const std::map<std::string, std::pair<RootType, int>> types = {{"e6", {RootType::E, 6}},
                                                                          {"e7", {RootType::E, 7}},
                                                                          {"e8", {RootType::E, 8}},
                                                                          {"f4", {RootType::F, 4}},
                                                                          {"g2", {RootType::G, 2}}};
    auto [t, r] = types.at(f);
    if (p[0] == "C") return make(id, t, r, uniform(r, 2), P);
    if (as_int(p[0]) == r) return make(id, t, r, uniform(r, 1), P);  // split form, index = rank
    if (f == "e6" && p[0] == "-26") return make(id, RootType::A, 2, uniform(2, 8), X);
  }
  return std::nullopt;
}

std::vector<CatalogueEntry> seed_samples() {
  std::vector<std::string> ids = {"su(1,2)", "su(1,3)", "su(2,3)", "su(2,4)", "su(3,4)", "su(3,5)", "sp(1,2)",
                                  "sp(2,3)", "sp(2,4)", "sl(2,R)", "sl(3,R)", "sl(4,R)", "sl(2,C)", "sl(3,C)",
                                  "sl(4,C)", "sl(2,H)", "sl(3,H)", "so(2,3)", "so(3,4)", "so(4,4)", "sp(2,R)",
                                  "sp(3,R)", "sp(2,C)", "so(5,C)", "so(8,C)", "e6(6)", "e7(7)", "e8(8)",
                                  "f4(4)", "g2(2)", "e6(C)", "f4(C)", "g2(C)", "e6(-26)"};
  std::vector<CatalogueEntry> out;
  for (const auto& s : ids) out.push_back(*seed_entry(parse_algebra_id(s)));
  return out;
}

WeightedRootSystem entry_system(const CatalogueEntry& e) {
  return expand_weights(simple_system(build_irreducible(e.type)), e.weights);
}

namespace {

bool same_data(const CatalogueEntry& x, const CatalogueEntry& y) {
  if (canonical_tag(x.type) != canonical_tag(y.type)) return false;
  return weighted_signature(entry_system(x)) == weighted_signature(entry_system(y));
}

}  // namespace

Catalogue Catalogue::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogueError("cannot open catalogue file '" + path + "'");
  return parse(in, path);
}

Catalogue Catalogue::parse(std::istream& in, const std::string& origin) {
  Catalogue cat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fields = split(line, ';');
    if (fields.size() != 6) throw CatalogueError(where + "expected 6 ';'-separated fields");
    CatalogueEntry e;
    try {
      e.id = parse_algebra_id(fields[0] + (fields[1].empty() ? "" : "(" + fields[1] + ")"));
      auto rank = as_int(fields[3]);
      if (!rank) throw CatalogueError("bad rank '" + fields[3] + "'");
      e.type = {parse_root_type(fields[2]), *rank};
      if (!valid_type(e.type.type, e.type.rank)) throw CatalogueError("invalid type " + to_string(e.type));
      e.weights = parse_weights(fields[4]);
      e.provenance = parse_provenance(fields[5]);
    } catch (const CatalogueError& err) {
      throw CatalogueError(where + err.what());
    } catch (const Error& err) {
      throw CatalogueError(where + err.what());
    }
    const std::string name = e.id.str();
    if (is_compact(e.id)) throw CatalogueError(where + name + " is compact");
    if (static_cast<int>(e.weights.size()) != e.type.rank)
      throw CatalogueError(where + name + ": weight vector length differs from the rank");
    if (e.provenance == Provenance::MachineVerified)
      throw CatalogueError(where + name + ": machine-verified is set only by the numerical cross-check");
    if (cat.rows_.count(e.id)) throw CatalogueError(where + "duplicate id " + name);
    try {
      (void)entry_system(e);
    } catch (const Error& err) {
      throw CatalogueError(where + name + ": " + err.what());
    }
    auto seed = seed_entry(e.id);
    if (e.provenance == Provenance::PaperStated && !(seed && seed->provenance == Provenance::PaperStated))
      throw CatalogueError(where + name + " is marked paper-stated but is not a built-in row");
    if (seed) {
      if (!same_data(*seed, e))
        throw CatalogueError(where + name + " conflicts with the built-in row " + to_string(seed->type) + " [" +
                             to_string(seed->weights) + "]");
      e.provenance = seed->provenance;
    }
    cat.rows_[e.id] = std::move(e);
  }
  return cat;
}

CatalogueEntry Catalogue::lookup(const AlgebraId& id) const {
  if (is_compact(id))
    throw CatalogueError(id.str() + " is compact; descriptors cover algebras without compact ideals only");
  CatalogueEntry out;
  if (auto it = rows_.find(id); it != rows_.end()) {
    out = it->second;
  } else if (auto seed = seed_entry(id)) {
    out = *seed;
  } else {
    throw CatalogueError("unknown algebra id " + id.str());
  }
  if (auto it = upgrades_.find(id); it != upgrades_.end()) out.provenance = it->second;
  return out;
}

CatalogueEntry Catalogue::lookup(const std::string& id) const { return lookup(parse_algebra_id(id)); }

bool Catalogue::contains(const std::string& id) const {
  try {
    (void)lookup(id);
    return true;
  } catch (const CatalogueError&) {
    return false;
  }
}

std::vector<CatalogueEntry> Catalogue::entries() const {
  std::map<AlgebraId, CatalogueEntry> all;
  for (auto& e : seed_samples()) all[e.id] = e;
  for (auto& [id, e] : rows_) all[id] = e;
  std::vector<CatalogueEntry> out;
  for (auto& [id, e] : all) out.push_back(lookup(id));
  return out;
}

std::size_t Catalogue::families() const {
  std::set<std::string> f;
  for (const auto& e : entries()) {
    std::string key = e.id.family;
    if (e.id.params.size() == 2 && is_field(e.id.params[1])) key += "," + e.id.params[1];
    if (e.id.params.size() == 1) key += "," + e.id.params[0];
    f.insert(key);
  }
  return f.size();
}

Catalogue Catalogue::with_verified(const AlgebraId& id) const {
  (void)lookup(id);
  Catalogue out = *this;
  out.upgrades_[id] = Provenance::MachineVerified;
  return out;
}

std::string default_catalogue_path() { return std::string(ROOTAUT_DATA_DIR) + "/catalogue.txt"; }

WeightedRootSystem restricted_system(const std::vector<std::string>& descriptor, const Catalogue& cat) {
  if (descriptor.empty()) throw ParameterError("an algebra descriptor needs at least one simple factor");
  std::vector<WeightedRootSystem> parts;
  for (const auto& id : descriptor) parts.push_back(entry_system(cat.lookup(id)));
  return weighted_direct_sum(parts);
}

IsoVerdict algebras_isomorphic(const std::vector<std::string>& a, const std::vector<std::string>& b,
                               const Catalogue& cat) {
  IsoVerdict v;
  auto sa = restricted_system(a, cat);
  auto sb = restricted_system(b, cat);
  v.signature_a = weighted_signature(sa);
  v.signature_b = weighted_signature(sb);
  v.witness = find_weighted_isomorphism(sa, sb);
  v.isomorphic = v.witness.has_value();
  if (v.isomorphic != (v.signature_a == v.signature_b))
    throw InternalConsistencyError("weighted isomorphism search and component signatures disagree");
  if (v.isomorphic) {
    v.explanation = "weighted isomorphism found";
  } else {
    std::vector<ComponentSignature> only_a, only_b;
    std::set_difference(v.signature_a.begin(), v.signature_a.end(), v.signature_b.begin(), v.signature_b.end(),
                        std::back_inserter(only_a));
    std::set_difference(v.signature_b.begin(), v.signature_b.end(), v.signature_a.begin(), v.signature_a.end(),
                        std::back_inserter(only_b));
    auto list = [](const std::vector<ComponentSignature>& s) {
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + to_string(s[i]);
      return out.empty() ? std::string("-") : out;
    };
    v.explanation = "component multisets differ: left only " + list(only_a) + "; right only " + list(only_b);
  }
  return v;
}

}  // namespace rootaut
