#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootaut/weighted.hpp"

namespace rootaut {

enum class Provenance { PaperStated, ExternalReference, MachineVerified };

std::string to_string(Provenance p);  // "paper-stated", ...
Provenance parse_provenance(const std::string& s);

// Algebra ids look like "su(2,3)", "sl(3,R)", "sl(3,C)", "sl(3,H)",
// "so(2,5)", "sp(2,R)", "e6(-26)", "e6(6)", "g2(C)". Parameters are integers
// or one of R, C, H.
struct AlgebraId {
  std::string family;
  std::vector<std::string> params;
  std::string str() const;
  auto operator<=>(const AlgebraId&) const = default;
};

// Normalises the parameter order (so su(3,2) becomes su(2,3)).
AlgebraId parse_algebra_id(const std::string& text);
bool is_compact(const AlgebraId& id);

struct CatalogueEntry {
  AlgebraId id;
  TypeTag type;
  std::vector<VertexWeight> weights;  // simple-root order of build_irreducible(type)
  Provenance provenance = Provenance::ExternalReference;
};

// Built-in rows. Families with a formula are resolved for any parameters.
std::optional<CatalogueEntry> seed_entry(const AlgebraId& id);
// A few instances of every seed family, for listings and tests.
std::vector<CatalogueEntry> seed_samples();

class Catalogue {
 public:
  Catalogue() = default;  // seed only

  // Seed plus the file rows; CatalogueError on malformed lines, duplicates,
  // conflicts with the seed, unsupported "paper-stated" claims, or a file
  // claiming "machine-verified".
  static Catalogue load(const std::string& path);
  static Catalogue parse(std::istream& in, const std::string& origin);

  // CatalogueError for compact or unknown ids.
  CatalogueEntry lookup(const std::string& id) const;
  CatalogueEntry lookup(const AlgebraId& id) const;
  bool contains(const std::string& id) const;

  // File rows plus seed samples not overridden by them, ordered by id.
  std::vector<CatalogueEntry> entries() const;
  std::size_t file_rows() const { return rows_.size(); }
  std::size_t families() const;

  // Returns a copy with the entry flagged machine-verified; only lieverify
  // calls this, after its own cross-check.
  Catalogue with_verified(const AlgebraId& id) const;

 private:
  std::map<AlgebraId, CatalogueEntry> rows_;
  std::map<AlgebraId, Provenance> upgrades_;
};

// Default catalogue file shipped in data/.
std::string default_catalogue_path();

WeightedRootSystem entry_system(const CatalogueEntry& e);
WeightedRootSystem restricted_system(const std::vector<std::string>& descriptor, const Catalogue& cat);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<RootIsomorphism> witness;
  std::vector<ComponentSignature> signature_a, signature_b;
  std::string explanation;
};

IsoVerdict algebras_isomorphic(const std::vector<std::string>& a, const std::vector<std::string>& b,
                               const Catalogue& cat);

}  // namespace rootaut
