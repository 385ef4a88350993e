#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rootaut/rootsys.hpp"

namespace rootaut {

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& outer, const Perm& inner);  // (outer o inner)[i] = outer[inner[i]]
Perm inverse(const Perm& p);

struct SimpleSystem {
  RootSystem sys;
  Vector regular;
  std::vector<int> positive;    // increasing root indices
  std::vector<char> is_positive;  // per root
  // Simple roots, ordered by decreasing lexicographic order of the root
  // vectors. In the standard models this is the usual chain order with the
  // doubled vertex of BC last.
  std::vector<int> simple;
  std::vector<Perm> simple_perms;  // s_i as root permutations, same order

  int rank() const { return static_cast<int>(simple.size()); }
  // Position of a root in `simple`, or -1.
  int simple_position(int root) const;
};

SimpleSystem simple_system(const RootSystem& sys, const Vector& v);
SimpleSystem simple_system(const RootSystem& sys);  // default regular vector
Vector default_regular_vector(const RootSystem& sys);

// Coordinates of a root in the simple-root basis (exact; integers for roots).
Vector simple_coordinates(const SimpleSystem& ss, const Vector& v);

struct WeylElement {
  Perm perm;
  std::vector<int> word;  // positions in ss.simple; leftmost letter acts last
  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

Perm reflection_perm(const RootSystem& sys, int alpha);
WeylElement reflection(const SimpleSystem& ss, int alpha);
WeylElement identity_element(const SimpleSystem& ss);

// Number of indivisible positive roots sent to negative roots.
int inversion_count(const SimpleSystem& ss, const Perm& perm);

// Peels right descents off `perm`. Returns the reduced word when perm lies in
// W and nullopt when a descent-free non-identity remainder is reached.
std::optional<std::vector<int>> reduced_word(const SimpleSystem& ss, const Perm& perm);
WeylElement weyl_element(const SimpleSystem& ss, const Perm& perm);  // throws if not in W
WeylElement multiply(const SimpleSystem& ss, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const SimpleSystem& ss, const WeylElement& w);

Vector apply(const SimpleSystem& ss, const std::vector<int>& word, const Vector& v);
inline Vector apply(const SimpleSystem& ss, const WeylElement& w, const Vector& v) {
  return apply(ss, w.word, v);
}
RationalMatrix matrix(const SimpleSystem& ss, const WeylElement& w);

// Full enumeration with reduced words; SizeError once more than `cap`
// elements have been produced.
std::vector<WeylElement> generate_weyl(const SimpleSystem& ss, std::size_t cap);
// Same walk, keeping only two length layers in memory. Used where only |W|
// is needed (E_7 fits under the default cap this way, a full list would not).
std::uint64_t weyl_group_order(const SimpleSystem& ss, std::uint64_t cap);
WeylElement longest_element(const SimpleSystem& ss);
std::pair<Vector, WeylElement> to_dominant(const SimpleSystem& ss, const Vector& v);

}  // namespace rootaut
