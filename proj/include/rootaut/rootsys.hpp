#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootaut/exact.hpp"

namespace rootaut {

enum class RootType { A, B, C, D, E, F, G, BC };

struct TypeTag {
  RootType type = RootType::A;
  int rank = 1;
  auto operator<=>(const TypeTag&) const = default;
};

std::string to_string(RootType t);
std::string to_string(const TypeTag& t);  // "A2", "BC3"
RootType parse_root_type(const std::string& s);
bool valid_type(RootType t, int rank);

// Immutable; copies share the cached data. Roots are stored sorted
// lexicographically, so index i is reproducible for a given root set.
class RootSystem {
 public:
  RootSystem();  // empty system in dimension 0
  // Rejects zero vectors, duplicates and dimension mismatches with
  // ParameterError. Does not check the root-system axioms; see validate().
  RootSystem(int dim, std::vector<Vector> roots);

  int dim() const;
  int size() const;
  bool empty() const { return size() == 0; }
  const Vector& root(int i) const;
  const std::vector<Vector>& roots() const;

  std::optional<int> find(const Vector& v) const;
  int negative(int i) const;   // index of -root(i), or -1
  int double_of(int i) const;  // index of 2 root(i), or -1
  int half_of(int i) const;    // index of root(i)/2, or -1
  bool is_doubled(int i) const { return double_of(i) >= 0; }
  bool is_divisible(int i) const { return half_of(i) >= 0; }
  bool is_reduced() const;

  const Rational& norm2(int i) const;
  Rational gram(int i, int j) const;
  // 2<a,b>/|b|^2 when it is an integer; nullopt otherwise.
  std::optional<int> cartan_integer(int i, int j) const;

  int rank() const;
  int num_components() const;
  int component_of(int i) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct Component {
  TypeTag tag;
  std::vector<int> roots;     // indices into the parent system
  std::vector<Vector> basis;  // basis of the component's span (roots of it)
};

struct ComponentDecomposition {
  std::vector<Component> components;
};

enum class Check { NegationClosure, ReflectionClosure, Integrality, Proportionality, Rank };
std::string to_string(Check c);

struct ValidationReport {
  struct Failure {
    Check check;
    int alpha = -1, beta = -1;  // witness roots
    std::string detail;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
  bool failed(Check c) const;
  std::string summary() const;
};

RootSystem build_irreducible(RootType type, int rank);
inline RootSystem build_irreducible(const TypeTag& t) { return build_irreducible(t.type, t.rank); }
RootSystem direct_sum(const std::vector<RootSystem>& systems);
RootSystem scaled(const RootSystem& sys, const Rational& t);

// Throws IntegrityError when root(alpha), root(beta) have a non-integral
// root integer (which cannot happen for a validated system).
int root_integer(const RootSystem& sys, int alpha, int beta);

ValidationReport validate(const RootSystem& sys);
ComponentDecomposition decompose(const RootSystem& sys);
// Identifies an irreducible root system by its numerical signature.
TypeTag classify_irreducible(const RootSystem& sys, const std::vector<int>& roots);

Rational killing_scale(const RootSystem& sys, int component);

}  // namespace rootaut
