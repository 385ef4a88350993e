#include "rootaut/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rootaut/catalogue.hpp"
#include "rootaut/errors.hpp"
#include "rootaut/lieverify.hpp"
#include "rootaut/serialize.hpp"
#include "rootaut/symspace.hpp"

namespace rootaut {

namespace {

// Bad arguments that CLI11 cannot see (type names, masks, specs).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::string fixed(double x, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*e", digits, x);
  return buf;
}

TypeTag parse_tag(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0 || i == text.size()) throw UsageError("expected a type like A2 or BC3, got '" + text + "'");
  TypeTag t;
  t.type = as_usage([&] { return parse_root_type(text.substr(0, i)); });
  try {
    std::size_t used = 0;
    t.rank = std::stoi(text.substr(i), &used);
    if (used != text.size() - i) throw std::invalid_argument("rank");
  } catch (const std::exception&) {
    throw UsageError("bad rank in '" + text + "'");
  }
  if (!valid_type(t.type, t.rank)) throw UsageError("no irreducible root system " + text);
  return t;
}

std::string label_of(const RootSystem& sys) {
  if (sys.empty()) return "empty";
  std::string out;
  for (const auto& c : decompose(sys).components) out += (out.empty() ? "" : "+") + to_string(c.tag);
  return out;
}

class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os, const std::string& indent = "") const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Longest simple path in a component, by exhaustive search (components are
// small trees).
std::vector<int> longest_path(const DynkinDiagram& dd, const std::vector<int>& comp) {
  std::vector<int> best, cur;
  std::vector<bool> used(dd.size(), false);
  std::function<void(int)> dfs = [&](int v) {
    cur.push_back(v);
    used[v] = true;
    if (cur.size() > best.size()) best = cur;
    for (int w : comp)
      if (!used[w] && dd.cartan[v][w] != 0) dfs(w);
    used[v] = false;
    cur.pop_back();
  };
  for (int v : comp) dfs(v);
  return best;
}

std::string connector(const DynkinDiagram& dd, int a, int b) {
  if (dd.cartan[a][b] == 0) return "   ";
  const int bonds = dd.bonds(a, b);
  if (bonds == 1) return "---";
  const std::string n = std::to_string(bonds);
  // The arrow points at the shorter root.
  return std::abs(dd.cartan[a][b]) > std::abs(dd.cartan[b][a]) ? "=" + n + ">" : "<" + n + "=";
}

// ASCII chains, one block per component: glyphs (O marks a doubled vertex),
// vertex numbers, then labels. Vertices off the longest chain are listed as
// branches.
void render_diagram(std::ostream& os, const DynkinDiagram& dd, const std::vector<std::string>& labels,
                    const std::string& indent = "  ") {
  if (dd.size() == 0) {
    os << indent << "(empty diagram)\n";
    return;
  }
  for (const auto& comp : dd.components()) {
    auto path = longest_path(dd, comp);
    std::string glyphs = indent, numbers = indent, marks = indent;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const int v = path[k];
      const std::string num = std::to_string(v);
      const std::string lab = labels.empty() ? "" : labels[v];
      const std::size_t w = std::max({std::size_t{1}, num.size(), lab.size()});
      glyphs += (dd.doubled[v] ? "O" : "o") + std::string(w - 1, ' ');
      numbers += num + std::string(w - num.size(), ' ');
      marks += lab + std::string(w - lab.size(), ' ');
      if (k + 1 < path.size()) {
        glyphs += connector(dd, v, path[k + 1]);
        numbers += "   ";
        marks += "   ";
      }
    }
    auto rstrip = [](std::string s) { return s.erase(s.find_last_not_of(' ') + 1); };
    os << rstrip(glyphs) << "\n" << rstrip(numbers) << "\n";
    if (!labels.empty()) os << rstrip(marks) << "\n";
    for (int v : comp) {
      if (std::find(path.begin(), path.end(), v) != path.end()) continue;
      for (int u : comp)
        if (u != v && dd.cartan[u][v] != 0 && (std::find(path.begin(), path.end(), u) != path.end() || u < v)) {
          os << indent << "branch " << u << connector(dd, u, v) << v;
          if (!labels.empty()) os << "  weight " << labels[v];
          os << "\n";
          break;
        }
    }
  }
}

std::vector<std::string> weight_labels(const WeightedDynkinDiagram& wd) {
  std::vector<std::string> out;
  for (const auto& w : wd.weights) out.push_back(to_string(w));
  return out;
}

std::string join(const std::vector<int>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string map_text(const std::vector<int>& image) {
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) out += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(image[i]);
  return out.empty() ? "(none)" : out;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Globals {
  bool json = false;
  std::uint64_t cap = 3000000;
  std::string catalogue;
  bool seed = false;
};

struct SystemArgs {
  std::string type;
  int rank = 0;
  std::string sum;
  std::string file;
};

void add_system_options(CLI::App* sub, SystemArgs& a) {
  auto* t = sub->add_option("--type", a.type, "Irreducible type: A..G or BC, or a tag such as D4");
  sub->add_option("--rank", a.rank, "Rank for --type")->needs(t);
  auto* s = sub->add_option("--sum", a.sum, "Direct sum of tags, e.g. A2+B3");
  auto* f = sub->add_option("--file", a.file, "Root system JSON document");
  t->excludes(s)->excludes(f);
  s->excludes(f);
}

RootSystem system_from(const SystemArgs& a) {
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw UsageError("cannot open '" + a.file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("'" + a.file + "' is not JSON: " + e.what());
    }
    return root_system_from_json(j);
  }
  if (!a.sum.empty()) {
    std::vector<RootSystem> parts;
    std::string text = a.sum;
    std::replace(text.begin(), text.end(), ',', '+');
    for (const auto& tag : split(text, '+')) parts.push_back(build_irreducible(parse_tag(tag)));
    return direct_sum(parts);
  }
  if (a.type.empty()) throw UsageError("give --type/--rank, --sum or --file");
  if (a.rank > 0) return build_irreducible(as_usage([&] {
    TypeTag t{parse_root_type(a.type), a.rank};
    if (!valid_type(t.type, t.rank)) throw ParameterError("no irreducible root system " + a.type + std::to_string(a.rank));
    return t;
  }));
  return build_irreducible(parse_tag(a.type));
}

Catalogue load_catalogue(const Globals& g, std::string& source) {
  if (g.seed) {
    source = "built-in seed";
    return Catalogue();
  }
  source = g.catalogue.empty() ? default_catalogue_path() : g.catalogue;
  return Catalogue::load(source);
}

// ---- subcommands ---------------------------------------------------------

void cmd_construct(const Globals& g, const SystemArgs& a, const std::string& scale, std::ostream& out) {
  RootSystem sys = system_from(a);
  if (!scale.empty()) {
    Rational t = as_usage([&] { return parse_rational(scale); });
    if (t == 0) throw UsageError("--scale must be nonzero");
    sys = scaled(sys, t);
  }
  auto report = validate(sys);
  if (g.json) {
    out << Json{{"type", label_of(sys)},     {"size", sys.size()},       {"rank", sys.rank()},
                {"reduced", sys.is_reduced()}, {"validation", report.summary()}, {"system", to_json(sys)}}
               .dump(2)
        << "\n";
    return;
  }
  Table t;
  t.add({"system", label_of(sys)});
  t.add({"dim", std::to_string(sys.dim())});
  t.add({"roots", std::to_string(sys.size())});
  t.add({"rank", std::to_string(sys.rank())});
  t.add({"reduced", sys.is_reduced() ? "yes" : "no"});
  t.add({"validate", report.summary()});
  t.print(out);
  out << "\n";
  Table r;
  r.add({"index", "root", "norm^2"});
  for (int i = 0; i < sys.size(); ++i) r.add({std::to_string(i), to_string(sys.root(i)), to_string(sys.norm2(i))});
  r.print(out);
}

void cmd_decompose(const Globals& g, const SystemArgs& a, std::ostream& out) {
  RootSystem sys = system_from(a);
  auto dec = decompose(sys);
  if (g.json) {
    Json comps = Json::array();
    for (std::size_t c = 0; c < dec.components.size(); ++c)
      comps.push_back({{"type", to_string(dec.components[c].tag)},
                       {"roots", dec.components[c].roots},
                       {"killing_scale", to_string(killing_scale(sys, static_cast<int>(c)))}});
    out << Json{{"system", to_json(sys)}, {"components", comps}}.dump(2) << "\n";
    return;
  }
  out << "system  " << label_of(sys) << "  (" << dec.components.size() << " components)\n\n";
  Table t;
  t.add({"component", "type", "roots", "killing scale", "members"});
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    t.add({std::to_string(c), to_string(comp.tag), std::to_string(comp.roots.size()),
           to_string(killing_scale(sys, static_cast<int>(c))), join(comp.roots)});
  }
  t.print(out);
}

void cmd_weyl(const Globals& g, const SystemArgs& a, bool elements, std::ostream& out) {
  RootSystem sys = system_from(a);
  auto ss = simple_system(sys);
  const std::uint64_t order = weyl_group_order(ss, g.cap);
  auto w0 = longest_element(ss);
  std::vector<WeylElement> all;
  if (elements) all = generate_weyl(ss, g.cap);
  if (g.json) {
    Json j{{"system", to_json(sys)}, {"type", label_of(sys)}, {"order", order},
           {"simple_roots", ss.simple}, {"longest", to_json(w0)}};
    if (elements) {
      Json els = Json::array();
      for (const auto& w : all) els.push_back(to_json(w));
      j["elements"] = std::move(els);
    }
    out << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.add({"system", label_of(sys)});
  t.add({"|W|", std::to_string(order)});
  t.add({"simple roots", join(ss.simple)});
  t.add({"positive roots", std::to_string(ss.positive.size())});
  t.add({"longest length", std::to_string(w0.length())});
  t.add({"longest word", w0.word.empty() ? "(identity)" : join(w0.word)});
  t.print(out);
  if (elements) {
    out << "\n";
    Table e;
    e.add({"element", "length", "word"});
    for (std::size_t i = 0; i < all.size(); ++i)
      e.add({std::to_string(i), std::to_string(all[i].length()), all[i].word.empty() ? "e" : join(all[i].word)});
    e.print(out);
  }
}

void cmd_aut(const Globals& g, const SystemArgs& a, std::ostream& out) {
  RootSystem sys = system_from(a);
  auto ss = simple_system(sys);
  auto dd = diagram(ss);
  auto autos = diagram_automorphisms(dd);
  const std::uint64_t w = weyl_group_order(ss, g.cap);
  const std::uint64_t total = aut_order(ss, g.cap);
  if (g.json) {
    Json list = Json::array();
    for (const auto& s : autos) list.push_back(to_json(s));
    out << Json{{"system", to_json(sys)},
                {"type", label_of(sys)},
                {"weyl_order", w},
                {"diagram", to_json(dd)},
                {"diagram_automorphisms", list},
                {"diagram_order", autos.size()},
                {"aut_order", total}}
               .dump(2)
        << "\n";
    return;
  }
  Table t;
  t.add({"system", label_of(sys)});
  t.add({"|W|", std::to_string(w)});
  t.add({"|Aut(DD)|", std::to_string(autos.size())});
  t.add({"|Aut|", std::to_string(total) + " = |W| x |Aut(DD)|"});
  t.print(out);
  out << "\ndiagram\n";
  render_diagram(out, dd, {});
  out << "\ndiagram automorphisms\n";
  for (const auto& s : autos) out << "  " << map_text(s.image) << (s.is_identity() ? "  (identity)" : "") << "\n";
}

void cmd_minusid(const Globals& g, const SystemArgs& a, std::ostream& out) {
  RootSystem sys = system_from(a);
  auto ss = simple_system(sys);
  auto parts = minus_id_decomposition(ss);
  const bool nontrivial = std::any_of(parts.nontrivial.begin(), parts.nontrivial.end(), [](bool b) { return b; });
  if (g.json) {
    Json comps = Json::array();
    for (std::size_t c = 0; c < parts.components.size(); ++c)
      comps.push_back({{"vertices", parts.components[c]}, {"nontrivial", static_cast<bool>(parts.nontrivial[c])}});
    out << Json{{"system", to_json(sys)},
                {"type", label_of(sys)},
                {"longest", to_json(parts.w0)},
                {"involution", to_json(parts.s)},
                {"components", comps},
                {"nontrivial", nontrivial}}
               .dump(2)
        << "\n";
    return;
  }
  Table t;
  t.add({"system", label_of(sys)});
  t.add({"-Id", "w0 s"});
  t.add({"w0 word", parts.w0.word.empty() ? "(identity)" : join(parts.w0.word)});
  t.add({"s = -w0", map_text(parts.s.image)});
  t.print(out);
  out << "\n";
  Table c;
  c.add({"component", "vertices", "opposition"});
  for (std::size_t k = 0; k < parts.components.size(); ++k)
    c.add({std::to_string(k), join(parts.components[k], ","), parts.nontrivial[k] ? "nontrivial" : "trivial"});
  c.print(out);
  out << "\n"
      << (nontrivial ? "opposition involution nontrivial" : "opposition involution trivial (-Id lies in W)") << "\n";
}

std::vector<std::string> descriptor(const std::string& text) {
  auto ids = split(text, '+');
  for (const auto& id : ids)
    if (id.empty()) throw UsageError("empty factor in descriptor '" + text + "'");
  return ids;
}

Json side_json(const std::vector<std::string>& ids, const WeightedRootSystem& ws,
               const std::vector<ComponentSignature>& sig) {
  std::vector<std::string> sigs;
  for (const auto& s : sig) sigs.push_back(to_string(s));
  auto ss = simple_system(ws.base);
  return {{"descriptor", ids},
          {"system", to_json(ws.base)},
          {"multiplicities", ws.mult},
          {"signature", sigs},
          {"diagram", to_json(weighted_diagram(ws, ss))}};
}

std::string signature_text(const std::vector<ComponentSignature>& sig) {
  std::string out;
  for (const auto& s : sig) out += (out.empty() ? "" : " + ") + to_string(s);
  return out.empty() ? "(empty)" : out;
}

void cmd_isocheck(const Globals& g, const std::string& left, const std::string& right, std::ostream& out) {
  std::string source;
  auto cat = load_catalogue(g, source);
  auto a = descriptor(left), b = descriptor(right);
  auto verdict = algebras_isomorphic(a, b, cat);
  auto wa = restricted_system(a, cat), wb = restricted_system(b, cat);
  auto ssa = simple_system(wa.base), ssb = simple_system(wb.base);
  std::vector<int> simple_image;
  if (verdict.witness)
    for (int r : ssa.simple) simple_image.push_back(ssb.simple_position(verdict.witness->root_map[r]));
  if (g.json) {
    Json j{{"catalogue", source},
           {"left", side_json(a, wa, verdict.signature_a)},
           {"right", side_json(b, wb, verdict.signature_b)},
           {"isomorphic", verdict.isomorphic},
           {"explanation", verdict.explanation}};
    if (verdict.witness)
      j["witness"] = {{"root_map", verdict.witness->root_map},
                      {"simple_map", simple_image},
                      {"matrix", matrix_json(verdict.witness->matrix)}};
    else
      j["witness"] = nullptr;
    out << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.add({"left", left, signature_text(verdict.signature_a)});
  t.add({"right", right, signature_text(verdict.signature_b)});
  t.print(out);
  out << "\nleft weighted diagram\n";
  render_diagram(out, diagram(ssa), weight_labels(weighted_diagram(wa, ssa)));
  out << "right weighted diagram\n";
  render_diagram(out, diagram(ssb), weight_labels(weighted_diagram(wb, ssb)));
  out << "\nverdict  " << (verdict.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
  if (verdict.isomorphic)
    out << "witness  simple roots " << map_text(simple_image) << "\n";
  else
    out << "witness  " << verdict.explanation << "\n";
}

void cmd_catalogue(const Globals& g, const std::vector<std::string>& ids, std::ostream& out) {
  std::string source;
  auto cat = load_catalogue(g, source);
  std::vector<CatalogueEntry> entries;
  if (ids.empty()) entries = cat.entries();
  for (const auto& id : ids) entries.push_back(cat.lookup(id));
  if (g.json) {
    Json list = Json::array();
    for (const auto& e : entries) {
      auto ws = entry_system(e);
      list.push_back({{"id", e.id.str()},
                      {"type", to_string(e.type)},
                      {"weights", to_string(e.weights)},
                      {"provenance", to_string(e.provenance)},
                      {"diagram", to_json(weighted_diagram(ws, simple_system(ws.base)))}});
    }
    out << Json{{"catalogue", source}, {"families", cat.families()}, {"entries", list}}.dump(2) << "\n";
    return;
  }
  out << "catalogue  " << source << "  (" << cat.families() << " families, " << cat.file_rows() << " file rows)\n\n";
  Table t;
  t.add({"algebra", "type", "weights", "provenance"});
  for (const auto& e : entries) t.add({e.id.str(), to_string(e.type), to_string(e.weights), to_string(e.provenance)});
  t.print(out);
  if (!ids.empty())
    for (const auto& e : entries) {
      auto ws = entry_system(e);
      auto ss = simple_system(ws.base);
      out << "\n" << e.id.str() << "\n";
      render_diagram(out, diagram(ss), weight_labels(weighted_diagram(ws, ss)));
    }
}

void cmd_verify_lift(const Globals& g, const std::string& id, double tol, double cluster_tol, std::ostream& out) {
  std::string source;
  auto cat = load_catalogue(g, source);
  auto alg = realize(id);
  auto data = restricted_roots(alg, cluster_tol);
  auto sig = weighted_signature(data.system);
  auto cc = cross_check(cat, alg, data);
  std::optional<OmegaReport> omega;
  std::vector<LiftCertificate> gens;
  if (alg.rank() <= 2) {
    omega = omega_image_check(alg, data, tol);
    gens = omega->generators;
  } else {
    auto ss = computed_simple_system(data);
    for (int p : simple_positions(data, ss)) gens.push_back(reflection_lift(alg, data, p, 1.0, tol));
  }
  const bool gens_ok = std::all_of(gens.begin(), gens.end(), [](const auto& c) { return c.valid; });
  const bool pass = gens_ok && cc.matches && (!omega || omega->surjective);
  std::string type = sig.empty() ? "empty" : to_string(sig.front().type);
  std::string weights = sig.empty() ? "" : to_string(sig.front().weights);

  if (g.json) {
    Json list = Json::array();
    for (const auto& c : gens)
      list.push_back({{"target", c.target},
                      {"residual", c.residual},
                      {"hom_error", c.hom_error},
                      {"a_error", c.a_error},
                      {"n_error", c.n_error},
                      {"valid", c.valid}});
    Json j{{"algebra", alg.id.str()},
           {"dim", alg.dim()},
           {"rank", alg.rank()},
           {"type", type},
           {"weights", weights},
           {"multiplicities", data.system.mult},
           {"system", to_json(data.system.base)},
           {"catalogue", source},
           {"catalogue_match", cc.matches},
           {"generators", list},
           {"tol", tol},
           {"cluster_tol", cluster_tol},
           {"max_cluster_spread", data.max_spread},
           {"verdict", pass ? "pass" : "fail"}};
    if (omega)
      j["omega"] = {{"induced_order", omega->induced_order},
                    {"expected_order", omega->expected_order},
                    {"missing", omega->missing},
                    {"extra", omega->extra},
                    {"max_residual", omega->max_residual},
                    {"surjective", omega->surjective}};
    else
      j["omega"] = nullptr;
    out << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.add({"algebra", alg.id.str() + "  (dim " + std::to_string(alg.dim()) + ", k " + std::to_string(alg.dim_k) +
                        ", p " + std::to_string(alg.dim_p) + ")"});
  t.add({"restricted type", type});
  t.add({"multiplicities", weights});
  t.add({"catalogue", std::string(cc.matches ? "matches" : "MISMATCH") + " (" + source + ")"});
  t.add({"cluster spread", fixed(data.max_spread) + " at tol " + fixed(cluster_tol, 0)});
  t.print(out);
  out << "\n";
  Table l;
  l.add({"generator", "residual", "hom error", "a error", "valid"});
  for (const auto& c : gens)
    l.add({c.target, fixed(c.residual), fixed(c.hom_error), fixed(c.a_error), c.valid ? "yes" : "no"});
  l.print(out);
  out << "\n";
  if (omega)
    out << "omega image  " << omega->induced_order << " of " << omega->expected_order << " (missing "
        << omega->missing << ", extra " << omega->extra << ", max residual " << fixed(omega->max_residual) << ")\n";
  else
    out << "omega image  not enumerated for restricted rank > 2; simple reflections lifted\n";
  out << "verdict      " << (pass ? "PASS" : "FAIL") << "\n";
}

void cmd_symspace(const Globals& g, const std::string& text, const std::vector<std::string>& boundary,
                  std::ostream& out) {
  std::string source;
  auto cat = load_catalogue(g, source);
  auto spec = as_usage([&] { return parse_space_spec(text); });
  auto m = assemble(spec, cat);
  audit_classes(m);
  auto groups = perm_groups(m);
  auto killing = almost_killing(m);
  auto orders = autw_M_orders(m, g.cap);
  std::optional<BoundaryVerdict> bv;
  std::vector<int> phi1, phi2;
  if (!boundary.empty()) {
    phi1 = as_usage([&] { return parse_subset(boundary[0], m.rank()); });
    phi2 = as_usage([&] { return parse_subset(boundary[1], m.rank()); });
    bv = boundary_congruent(m, phi1, phi2);
  }
  auto blocks = [](const PermGroup& pg) {
    Json b = Json::array();
    for (const auto& x : pg.blocks) b.push_back(x);
    return b;
  };
  if (g.json) {
    Json factors = Json::array();
    for (const auto& f : m.factors)
      factors.push_back({{"id", f.entry.id.str()},
                         {"lambda", to_string(f.lambda)},
                         {"type", to_string(f.entry.type)},
                         {"weights", to_string(f.entry.weights)},
                         {"offset", f.offset},
                         {"diagram", to_json(f.diagram)}});
    Json j{{"spec", to_string(spec)},
           {"catalogue", source},
           {"factors", factors},
           {"rank", m.rank()},
           {"S_iso", {{"blocks", blocks(groups.iso)}, {"order", groups.iso.order()}}},
           {"S_hom", {{"blocks", blocks(groups.hom)}, {"order", groups.hom.order()}}},
           {"almost_killing", killing.almost_killing},
           {"killing", killing.killing},
           {"autw_sigma_order", orders.sigma},
           {"autw_diagram_order", orders.diagram}};
    if (bv)
      j["boundary"] = {{"phi1", phi1},
                       {"phi2", phi2},
                       {"congruent", bv->congruent},
                       {"verdict", bv->explanation},
                       {"factor_map", bv->factor_map},
                       {"vertex_map", bv->vertex_map}};
    out << j.dump(2) << "\n";
    return;
  }
  Table t;
  t.add({"factor", "algebra", "lambda", "type", "weights", "simple roots"});
  for (int i = 0; i < m.size(); ++i) {
    const auto& f = m.factors[i];
    t.add({std::to_string(i), f.entry.id.str(), to_string(f.lambda), to_string(f.entry.type), to_string(f.entry.weights),
           std::to_string(f.offset) + ".." + std::to_string(f.offset + f.simple.rank() - 1)});
  }
  t.print(out);
  out << "\n";
  Table s;
  s.add({"S_iso", to_string(groups.iso), "order " + std::to_string(groups.iso.order())});
  s.add({"S_hom", to_string(groups.hom), "order " + std::to_string(groups.hom.order())});
  s.add({"almost Killing", killing.almost_killing ? "yes" : "no"});
  s.add({"Killing", killing.killing ? "yes" : "no"});
  s.add({"|Aut^w(Sigma)_M|", std::to_string(orders.sigma)});
  s.add({"|Aut^w(DD)_M|", std::to_string(orders.diagram)});
  s.print(out);
  if (bv) {
    out << "\nboundary  {" << join(phi1, ",") << "} -> {" << join(phi2, ",") << "}\n";
    out << "verdict   " << bv->explanation << "\n";
    if (bv->congruent) out << "witness   factors " << map_text(bv->factor_map) << "; simple roots "
                           << map_text(bv->vertex_map) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, Weyl groups, weighted Dynkin diagrams and restricted roots."};
  app.name("rootaut");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--cap", g.cap, "Weyl group enumeration cap")->capture_default_str();
  auto* cat_opt = app.add_option("--catalogue", g.catalogue, "Catalogue file (default: shipped data/catalogue.txt)");
  app.add_flag("--seed-catalogue", g.seed, "Use only the built-in catalogue rows")->excludes(cat_opt);

  SystemArgs sys_args;
  std::string scale;
  auto* construct = app.add_subcommand("construct", "Build a root system and validate it");
  add_system_options(construct, sys_args);
  construct->add_option("--scale", scale, "Multiply every root by this rational");
  auto* decompose_cmd = app.add_subcommand("decompose", "Split into irreducible components");
  add_system_options(decompose_cmd, sys_args);
  bool elements = false;
  auto* weyl = app.add_subcommand("weyl", "Weyl group order and longest element");
  add_system_options(weyl, sys_args);
  weyl->add_flag("--elements", elements, "List every element (bounded by --cap)");
  auto* aut = app.add_subcommand("aut", "Aut(DD) and |Aut| = |W| |Aut(DD)|");
  add_system_options(aut, sys_args);
  auto* minusid = app.add_subcommand("minusid", "Decompose -Id as w0 s");
  add_system_options(minusid, sys_args);

  std::string left, right;
  auto* isocheck = app.add_subcommand("isocheck", "Weighted isomorphism of two algebras' restricted roots");
  isocheck->add_option("left", left, "Algebra ids joined by '+', e.g. su(2,3)+sl(3,R)")->required();
  isocheck->add_option("right", right, "Second descriptor")->required();

  std::vector<std::string> ids;
  auto* catalogue = app.add_subcommand("catalogue", "List catalogue entries or look some up");
  catalogue->add_option("ids", ids, "Algebra ids");

  std::string lift_id;
  double tol = 1e-6, cluster_tol = 1e-8;
  auto* lift = app.add_subcommand("verify-lift", "Realize an algebra and certify lifts of Aut^w(Sigma)");
  lift->add_option("algebra", lift_id, "sl(n,R), sl(n,C), sl(n,H) or su(p,q)")->required();
  lift->add_option("--tol", tol, "Certificate tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  lift->add_option("--cluster-tol", cluster_tol, "Eigenvalue clustering tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string spec_text;
  std::vector<std::string> boundary;
  auto* symspace = app.add_subcommand("symspace", "Factor permutation groups and Aut^w(Sigma)_M");
  symspace->add_option("spec", spec_text, "Factors as id:lambda, comma separated")->required();
  symspace->add_option("--boundary", boundary, "Two subsets of global simple roots: masks such as 010 or {1}")
      ->expected(2);

  std::vector<std::string> argv_store = {"rootaut"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n\n";
    const CLI::App* shown = &app;
    for (const auto* sub : app.get_subcommands()) shown = sub;
    err << shown->help();
    return 2;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const CLI::App* shown = &app;
      for (const auto* sub : app.get_subcommands()) shown = sub;
      out << shown->help();
      return 0;
    }
    return usage(e.what());
  }

  try {
    if (construct->parsed()) cmd_construct(g, sys_args, scale, out);
    else if (decompose_cmd->parsed()) cmd_decompose(g, sys_args, out);
    else if (weyl->parsed()) cmd_weyl(g, sys_args, elements, out);
    else if (aut->parsed()) cmd_aut(g, sys_args, out);
    else if (minusid->parsed()) cmd_minusid(g, sys_args, out);
    else if (isocheck->parsed()) cmd_isocheck(g, left, right, out);
    else if (catalogue->parsed()) cmd_catalogue(g, ids, out);
    else if (lift->parsed()) cmd_verify_lift(g, lift_id, tol, cluster_tol, out);
    else if (symspace->parsed()) cmd_symspace(g, spec_text, boundary, out);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    if (g.json)
      out << Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      err << "refused (" << e.kind() << "): " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rootaut
