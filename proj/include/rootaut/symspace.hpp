#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootaut/catalogue.hpp"

namespace rootaut {

// One de Rham factor: a simple noncompact algebra from the catalogue and the
// constant lambda relating the metric to the Killing form.
struct FactorSpec {
  std::string id;
  Rational lambda{1};
};

struct SpaceSpec {
  std::vector<FactorSpec> factors;
};

// "sl(3,R):1,su(1,2):3/2". A missing ":lambda" means 1. Commas inside
// parentheses belong to the id. ParameterError on malformed text.
SpaceSpec parse_space_spec(const std::string& text);
std::string to_string(const SpaceSpec& spec);

// The subgroup of S_k that permutes factors inside each block. Blocks
// partition 0..k-1 and are ordered by smallest member.
struct PermGroup {
  int degree = 0;
  std::vector<std::vector<int>> blocks;

  std::uint64_t order() const;
  bool contains(const std::vector<int>& sigma) const;
  bool trivial() const { return order() == 1; }
  // SizeError past cap.
  std::vector<std::vector<int>> elements(std::uint64_t cap = 100000) const;
  bool operator==(const PermGroup&) const = default;
};

// "1" for the trivial group, otherwise e.g. "S2 x S3" on the nontrivial blocks.
std::string to_string(const PermGroup& g);

struct Factor {
  CatalogueEntry entry;
  Rational lambda;
  WeightedRootSystem system;
  SimpleSystem simple;  // simple-root order of the model of entry.type
  WeightedDynkinDiagram diagram;
  std::vector<ComponentSignature> signature;
  int offset = 0;  // first global simple-root index
};

// Factors resolved against a catalogue. ParameterError for an empty spec or
// lambda <= 0; CatalogueError for unknown or compact ids.
struct SymmetricSpace {
  std::vector<Factor> factors;
  int rank() const;
  int size() const { return static_cast<int>(factors.size()); }
  // Global simple root g as (factor, local index).
  std::pair<int, int> locate(int g) const;
};

SymmetricSpace assemble(const SpaceSpec& spec, const Catalogue& cat);

struct PermGroups {
  PermGroup iso;  // weighted-isomorphic restricted systems and equal lambda
  PermGroup hom;  // weighted-isomorphic restricted systems
};

// Homothety classes are keyed by the weighted signature of each factor.
PermGroups perm_groups(const SymmetricSpace& m);

// Re-derives the homothety classes by explicit weighted-isomorphism search
// for factors of rank <= max_rank and compares with the signature keys.
// Returns the number of pairs checked; InternalConsistencyError on mismatch.
int audit_classes(const SymmetricSpace& m, int max_rank = 3);

struct KillingVerdict {
  bool almost_killing = false;
  bool killing = false;  // all lambda equal to 1
};

KillingVerdict almost_killing(const SymmetricSpace& m);

struct AutwOrders {
  std::uint64_t sigma = 0;    // |Aut^w(Sigma)_M|
  std::uint64_t diagram = 0;  // |Aut^w(DD)_M|
  std::uint64_t weyl = 0;     // |W(Sigma)|
};

// SizeError when a factor's Weyl group passes cap or a product overflows.
AutwOrders autw_M_orders(const SymmetricSpace& m, std::uint64_t cap = 3000000);

struct BoundaryVerdict {
  bool congruent = false;
  std::vector<int> factor_map;  // factor i -> factor_map[i]
  std::vector<int> vertex_map;  // global simple root g -> vertex_map[g]
  std::string explanation;
};

// Looks for s in Aut^w(DD)_M with s(phi1) = phi2. A negative answer only
// says that this criterion produces no witness. ParameterError for indices
// outside 0..rank-1.
BoundaryVerdict boundary_congruent(const SymmetricSpace& m, const std::vector<int>& phi1,
                                   const std::vector<int>& phi2);

// "0110": character g selects global simple root g; the length must equal
// the rank. Also accepts "{}" or a brace list "{0,2}".
std::vector<int> parse_subset(const std::string& text, int rank);

}  // namespace rootaut
