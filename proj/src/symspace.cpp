#include "rootaut/symspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rootaut/errors.hpp"

namespace rootaut {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw SizeError("order overflows 64 bits");
  return a * b;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

// Blocks from a class key per factor; equal keys share a block.
template <class Key>
PermGroup group_from_keys(const std::vector<Key>& keys) {
  PermGroup g;
  g.degree = static_cast<int>(keys.size());
  std::vector<bool> done(keys.size(), false);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> block;
    for (std::size_t j = i; j < keys.size(); ++j)
      if (!done[j] && keys[j] == keys[i]) {
        block.push_back(static_cast<int>(j));
        done[j] = true;
      }
    g.blocks.push_back(std::move(block));
  }
  return g;
}

}  // namespace

SpaceSpec parse_space_spec(const std::string& text) {
  SpaceSpec spec;
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParameterError("unbalanced ')' in '" + text + "'");
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParameterError("unbalanced '(' in '" + text + "'");
  items.push_back(cur);
  for (const auto& raw : items) {
    const std::string item = trim(raw);
    if (item.empty()) throw ParameterError("empty factor in '" + text + "'");
    FactorSpec f;
    const auto colon = item.rfind(':');
    if (colon != std::string::npos && colon > item.rfind(')')) {
      f.id = trim(item.substr(0, colon));
      const std::string lam = trim(item.substr(colon + 1));
      try {
        f.lambda = parse_rational(lam);
      } catch (const std::exception&) {
        throw ParameterError("bad lambda '" + lam + "' for " + f.id);
      }
    } else {
      f.id = item;
    }
    if (f.id.empty()) throw ParameterError("factor without an algebra id in '" + text + "'");
    if (f.lambda <= 0) throw ParameterError("lambda must be positive for " + f.id);
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

std::string to_string(const SpaceSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out += ",";
    out += spec.factors[i].id + ":" + to_string(spec.factors[i].lambda);
  }
  return out;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& b : blocks) n = checked_mul(n, factorial(b.size()));
  return n;
}

bool PermGroup::contains(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != degree) return false;
  std::vector<int> block_of(degree, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i : blocks[b]) block_of[i] = static_cast<int>(b);
  std::vector<bool> hit(degree, false);
  for (int i = 0; i < degree; ++i) {
    const int j = sigma[i];
    if (j < 0 || j >= degree || hit[j] || block_of[j] != block_of[i]) return false;
    hit[j] = true;
  }
  return true;
}

std::vector<std::vector<int>> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw SizeError("group of order " + std::to_string(order()) + " exceeds cap");
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> images = blocks;
  for (auto& b : images) std::sort(b.begin(), b.end());
  // Odometer over the permutations of each block.
  while (true) {
    std::vector<int> sigma(degree);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < blocks[b].size(); ++i) sigma[blocks[b][i]] = images[b][i];
    out.push_back(std::move(sigma));
    std::size_t b = 0;
    while (b < images.size() && !std::next_permutation(images[b].begin(), images[b].end())) ++b;
    if (b == images.size()) break;
  }
  return out;
}

std::string to_string(const PermGroup& g) {
  std::string out;
  for (const auto& b : g.blocks) {
    if (b.size() < 2) continue;
    if (!out.empty()) out += " x ";
    out += "S" + std::to_string(b.size());
  }
  return out.empty() ? "1" : out;
}

int SymmetricSpace::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.simple.rank();
  return r;
}

std::pair<int, int> SymmetricSpace::locate(int g) const {
  for (int i = 0; i < size(); ++i) {
    const int r = factors[i].simple.rank();
    if (g >= factors[i].offset && g < factors[i].offset + r) return {i, g - factors[i].offset};
  }
  throw ParameterError("simple root index " + std::to_string(g) + " outside 0.." + std::to_string(rank() - 1));
}

SymmetricSpace assemble(const SpaceSpec& spec, const Catalogue& cat) {
  if (spec.factors.empty()) throw ParameterError("a symmetric space needs at least one factor");
  SymmetricSpace m;
  int offset = 0;
  for (const auto& fs : spec.factors) {
    if (fs.lambda <= 0) throw ParameterError("lambda must be positive for " + fs.id);
    Factor f{cat.lookup(fs.id), fs.lambda, {}, {}, {}, {}, offset};
    f.system = entry_system(f.entry);
    f.simple = simple_system(f.system.base);
    f.diagram = weighted_diagram(f.system, f.simple);
    f.signature = weighted_signature(f.system);
    if (f.signature.size() != 1) throw CatalogueError(fs.id + " is not simple");
    offset += f.simple.rank();
    m.factors.push_back(std::move(f));
  }
  return m;
}

PermGroups perm_groups(const SymmetricSpace& m) {
  std::vector<std::vector<ComponentSignature>> hom;
  std::vector<std::pair<std::vector<ComponentSignature>, Rational>> iso;
  for (const auto& f : m.factors) {
    hom.push_back(f.signature);
    iso.push_back({f.signature, f.lambda});
  }
  return {group_from_keys(iso), group_from_keys(hom)};
}

int audit_classes(const SymmetricSpace& m, int max_rank) {
  int checked = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      const auto& a = m.factors[i];
      const auto& b = m.factors[j];
      if (a.simple.rank() > max_rank || b.simple.rank() > max_rank) continue;
      const bool by_search = find_weighted_isomorphism(a.system, b.system).has_value();
      const bool by_key = a.signature == b.signature;
      if (by_search != by_key)
        throw InternalConsistencyError("homothety class of " + a.entry.id.str() + " and " + b.entry.id.str() +
                                       ": search says " + (by_search ? "yes" : "no") + ", signature says " +
                                       (by_key ? "yes" : "no"));
      ++checked;
    }
  return checked;
}

KillingVerdict almost_killing(const SymmetricSpace& m) {
  const auto g = perm_groups(m);
  KillingVerdict v;
  v.almost_killing = g.iso == g.hom;
  v.killing = std::all_of(m.factors.begin(), m.factors.end(), [](const Factor& f) { return f.lambda == 1; });
  return v;
}

AutwOrders autw_M_orders(const SymmetricSpace& m, std::uint64_t cap) {
  AutwOrders out{1, 1, 1};
  for (const auto& f : m.factors) {
    out.weyl = checked_mul(out.weyl, weyl_group_order(f.simple, cap));
    out.diagram = checked_mul(out.diagram, weighted_diagram_automorphisms(f.diagram).size());
  }
  out.diagram = checked_mul(out.diagram, perm_groups(m).iso.order());
  out.sigma = checked_mul(out.weyl, out.diagram);
  return out;
}

namespace {

// Bipartite matching of factors inside each block of S_iso, where i may go to
// j when some weighted diagram isomorphism DD_i -> DD_j carries the part of
// phi1 in factor i onto the part of phi2 in factor j.
struct Matcher {
  const std::vector<std::vector<int>>& allowed;
  std::vector<int> match_of_target;
  std::vector<bool> seen;

  bool augment(int i) {
    for (int j : allowed[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (match_of_target[j] < 0 || augment(match_of_target[j])) {
        match_of_target[j] = i;
        return true;
      }
    }
    return false;
  }
};

std::vector<bool> mask_of(const SymmetricSpace& m, const std::vector<int>& phi, const char* name) {
  std::vector<bool> mask(m.rank(), false);
  for (int g : phi) {
    if (g < 0 || g >= m.rank())
      throw ParameterError(std::string(name) + " contains " + std::to_string(g) + ", rank is " +
                           std::to_string(m.rank()));
    mask[g] = true;
  }
  return mask;
}

}  // namespace

BoundaryVerdict boundary_congruent(const SymmetricSpace& m, const std::vector<int>& phi1,
                                   const std::vector<int>& phi2) {
  const auto mask1 = mask_of(m, phi1, "phi1");
  const auto mask2 = mask_of(m, phi2, "phi2");
  BoundaryVerdict v;
  const int k = m.size();
  const auto iso = perm_groups(m).iso;

  // witness[i][j]: a vertex map DD_i -> DD_j that works, if any.
  std::vector<std::vector<std::vector<int>>> witness(k, std::vector<std::vector<int>>(k));
  std::vector<std::vector<int>> allowed(k);
  for (const auto& block : iso.blocks)
    for (int i : block)
      for (int j : block) {
        const auto& a = m.factors[i];
        const auto& b = m.factors[j];
        for (const auto& s : weighted_diagram_isomorphisms(a.diagram, b.diagram)) {
          bool ok = true;
          for (int x = 0; x < a.simple.rank() && ok; ++x)
            ok = mask1[a.offset + x] == mask2[b.offset + s.image[x]];
          if (ok) {
            witness[i][j] = s.image;
            allowed[i].push_back(j);
            break;
          }
        }
      }

  Matcher mt{allowed, std::vector<int>(k, -1), {}};
  for (int i = 0; i < k; ++i) {
    mt.seen.assign(k, false);
    if (!mt.augment(i)) {
      const auto& f = m.factors[i];
      v.explanation = "no witness under Aut^w(DD)_M: factor " + std::to_string(i) + " (" + f.entry.id.str() +
                      ") cannot be matched with any factor of its isometry class carrying phi1 onto phi2";
      return v;
    }
  }
  v.congruent = true;
  v.factor_map.assign(k, -1);
  for (int j = 0; j < k; ++j) v.factor_map[mt.match_of_target[j]] = j;
  v.vertex_map.assign(m.rank(), -1);
  for (int i = 0; i < k; ++i) {
    const int j = v.factor_map[i];
    const auto& img = witness[i][j];
    for (std::size_t x = 0; x < img.size(); ++x)
      v.vertex_map[m.factors[i].offset + x] = m.factors[j].offset + img[x];
  }
  v.explanation = "congruent";
  return v;
}

std::vector<int> parse_subset(const std::string& raw, int rank) {
  const std::string text = trim(raw);
  std::vector<int> out;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParameterError("unclosed subset '" + raw + "'");
    const std::string inner = trim(text.substr(1, text.size() - 2));
    if (inner.empty()) return out;
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      const std::string tok = trim(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      std::size_t used = 0;
      int g = -1;
      try {
        g = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParameterError("bad index '" + tok + "' in '" + raw + "'");
      }
      if (used != tok.size()) throw ParameterError("bad index '" + tok + "' in '" + raw + "'");
      if (g < 0 || g >= rank)
        throw ParameterError("index " + std::to_string(g) + " outside 0.." + std::to_string(rank - 1));
      out.push_back(g);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (static_cast<int>(text.size()) != rank)
    throw ParameterError("mask '" + raw + "' has length " + std::to_string(text.size()) + ", rank is " +
                         std::to_string(rank));
  for (int g = 0; g < rank; ++g) {
    if (text[g] == '1') out.push_back(g);
    else if (text[g] != '0') throw ParameterError("mask '" + raw + "' must consist of 0 and 1");
  }
  return out;
}

}  // namespace rootaut
