#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rootaut/weyl.hpp"

namespace rootaut {

struct DiagramEdge {
  int a = 0, b = 0;   // a < b
  int bonds = 1;      // 1..3
  int shorter = -1;   // endpoint the arrow points to, -1 when undirected
};

// Built from the Cartan matrix of a simple system; keeps the simple-root
// indices when it came from one.
struct DynkinDiagram {
  std::vector<int> vertices;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = n(alpha_i, alpha_j)
  std::vector<bool> doubled;

  int size() const { return static_cast<int>(cartan.size()); }
  int bonds(int i, int j) const { return cartan[i][j] * cartan[j][i]; }
  int degree(int i) const;
  std::vector<DiagramEdge> edges() const;
  std::vector<std::vector<int>> components() const;  // ordered by smallest vertex
};

DynkinDiagram diagram(const SimpleSystem& ss);
DynkinDiagram diagram_from_cartan(std::vector<std::vector<int>> cartan, std::vector<bool> doubled);

struct DiagramIsomorphism {
  std::vector<int> image;  // vertex i -> image[i]
  bool operator==(const DiagramIsomorphism&) const = default;
  bool is_identity() const;
};

DiagramIsomorphism compose(const DiagramIsomorphism& outer, const DiagramIsomorphism& inner);
DiagramIsomorphism inverse(const DiagramIsomorphism& s);

// All bijections preserving Cartan entries (bonds and arrows) and doubled
// flags. Optional per-vertex labels must match as well; the weighted module
// passes multiplicities here.
std::vector<DiagramIsomorphism> diagram_isomorphisms(const DynkinDiagram& a, const DynkinDiagram& b,
                                                     const std::vector<std::vector<int>>& labels_a = {},
                                                     const std::vector<std::vector<int>>& labels_b = {});
std::vector<DiagramIsomorphism> diagram_automorphisms(const DynkinDiagram& dd,
                                                      const std::vector<std::vector<int>>& labels = {});

struct RootIsomorphism {
  RationalMatrix matrix;  // target.dim x source.dim, zero on the complement of the source span
  Perm root_map;          // source root index -> target root index
  std::vector<int> component_map;      // per source component
  std::vector<Rational> conformal_sq;  // per source component
};

struct IsomorphismRefusal {
  enum class Reason { Shape, RankMismatch, RootNotMapped, NotBijective, RootIntegerChanged };
  Reason reason;
  int alpha = -1, beta = -1;
  std::string message;
};

using IsomorphismCheck = std::variant<RootIsomorphism, IsomorphismRefusal>;

IsomorphismCheck is_isomorphism(const RationalMatrix& f, const RootSystem& a, const RootSystem& b);

// The linear map sending each source vector to its image, defined on their
// span and zero on the orthogonal complement.
RationalMatrix linear_extension(const std::vector<Vector>& sources, const std::vector<Vector>& images,
                                int target_dim);

RootIsomorphism extend_to_linear(const DiagramIsomorphism& s, const SimpleSystem& ss, const SimpleSystem& ss2);

struct SemidirectParts {
  WeylElement w;         // w(f(D)) = D
  DiagramIsomorphism s;  // stabilises D; f = w^-1 o s
  Perm s_perm;
};

SemidirectParts semidirect_decompose(const RootIsomorphism& f, const SimpleSystem& ss);
SemidirectParts semidirect_decompose(const Perm& f, const SimpleSystem& ss);

struct MinusIdParts {
  WeylElement w0;
  DiagramIsomorphism s;  // -Id = w0 s, so s = -w0 on the simple roots
  std::vector<std::vector<int>> components;
  std::vector<bool> nontrivial;  // per diagram component
};

MinusIdParts minus_id_decomposition(const SimpleSystem& ss);

// |W| * |Aut(DD)|; SizeError when |W| exceeds cap.
std::uint64_t aut_order(const SimpleSystem& ss, std::uint64_t cap);

}  // namespace rootaut
