#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootaut/autos.hpp"

namespace rootaut {

// Weight of one diagram vertex; doubled vertices carry (mult a, mult 2a).
struct VertexWeight {
  int mult = 1;
  std::optional<int> doubled_mult;
  auto operator<=>(const VertexWeight&) const = default;
};

std::string to_string(const VertexWeight& w);            // "2" or "(2,1)"
std::string to_string(const std::vector<VertexWeight>& ws);  // "2,(2,1)"
std::vector<VertexWeight> parse_weights(const std::string& text);

struct WeightedRootSystem {
  RootSystem base;
  std::vector<int> mult;  // per root, positive
};

// Checks positivity, mult(a) = mult(-a) and constancy on W-orbits;
// IntegrityError otherwise.
WeightedRootSystem make_weighted(RootSystem base, std::vector<int> mult);
// Spreads simple-root weights over W-orbits. A conflict means the weights
// are not W-invariant (IntegrityError).
WeightedRootSystem expand_weights(const SimpleSystem& ss, const std::vector<VertexWeight>& weights);
WeightedRootSystem weighted_direct_sum(const std::vector<WeightedRootSystem>& parts);

struct WeightedDynkinDiagram {
  DynkinDiagram base;
  std::vector<VertexWeight> weights;
};

WeightedDynkinDiagram weighted_diagram(const WeightedRootSystem& ws, const SimpleSystem& ss);
std::vector<DiagramIsomorphism> weighted_diagram_isomorphisms(const WeightedDynkinDiagram& a,
                                                              const WeightedDynkinDiagram& b);
std::vector<DiagramIsomorphism> weighted_diagram_automorphisms(const WeightedDynkinDiagram& dd);

// Every weighted isomorphism A -> B, as w o ext(s) for s a weighted diagram
// isomorphism and w in W(B). SizeError when |W(B)| exceeds cap.
std::vector<RootIsomorphism> weighted_isomorphisms(const WeightedRootSystem& a, const WeightedRootSystem& b,
                                                   std::uint64_t cap = 100000);
// One witness, without enumerating W.
std::optional<RootIsomorphism> find_weighted_isomorphism(const WeightedRootSystem& a, const WeightedRootSystem& b);

std::uint64_t autw_order(const WeightedRootSystem& ws, const SimpleSystem& ss, std::uint64_t cap);

// Isomorphism-invariant description of one irreducible weighted component:
// its canonical type and its weights read in the simple-root order of the
// standard model, minimised over diagram automorphisms.
struct ComponentSignature {
  TypeTag type;
  std::vector<VertexWeight> weights;
  auto operator<=>(const ComponentSignature&) const = default;
};

std::string to_string(const ComponentSignature& s);  // "BC2[2,(2,1)]"
std::vector<ComponentSignature> weighted_signature(const WeightedRootSystem& ws);  // sorted
TypeTag canonical_tag(TypeTag t);

}  // namespace rootaut
