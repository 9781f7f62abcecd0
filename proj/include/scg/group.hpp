#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "scg/perm.hpp"

namespace scg {

inline constexpr std::uint64_t kDefaultIntersectCap = 20'000'000;

// Permutation group given by generators, with a stabilizer chain for order,
// membership and element enumeration. The chain uses the deterministic base
// 0,1,2,... (points skipped while fixed by all remaining strong generators),
// so orders, transversals and enumeration order are reproducible.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(int degree) : degree_(degree) {}  // trivial group
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree) { return PermGroup(degree); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& p) const;

  // Orbit partition of the natural action: orbits sorted by least point,
  // points sorted inside each orbit.
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int x) const;
  bool is_transitive() const;

  struct BlockSystem {
    std::vector<std::vector<int>> blocks;  // sorted blocks of equal size
    int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  };
  // Requires a transitive group (throws Error otherwise). When imprimitive,
  // *system (if non-null) receives a minimal nontrivial block system found by
  // orbital closure over the pairs {0, x}.
  bool is_primitive(BlockSystem* system = nullptr) const;

  // Calls fn for every group element exactly once, in the fixed transversal
  // product order. fn returning false stops the walk early.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;
  // All elements in enumeration order; throws BudgetExceeded if order() > cap.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultIntersectCap) const;

 private:
  struct Level {
    int base = 0;
    std::vector<int> orbit;                // BFS order, orbit[0] == base
    std::vector<int> slot;                 // point -> 1+index into orbit, 0 if outside
    std::vector<Permutation> transversal;  // base^transversal[i] == orbit[i]
    std::vector<Permutation> inverse;      // cached inverses of the transversal
  };

  void build();
  void rebuild_level_orbit(size_t level, const std::vector<Permutation>& gens);
  std::vector<Permutation> level_generators(size_t level) const;
  // Sift through levels [from, end); returns residue and the level it stopped at.
  std::pair<Permutation, size_t> sift(Permutation g, size_t from) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<std::vector<Permutation>> strong_;  // strong generators per level
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

// Group restricted to one of its orbits, acting on 0..orbit.size()-1 (points
// renumbered in increasing orbit order).
PermGroup restrict_to_orbit(const PermGroup& g, const std::vector<int>& orbit);
Permutation restrict_to_orbit(const Permutation& p, const std::vector<int>& orbit);

// {g in the smaller group : g in the other}, by streaming the smaller group
// through its transversal product and collecting generators incrementally.
// Throws BudgetExceeded when min(|G|,|H|) > cap.
PermGroup intersect(const PermGroup& g, const PermGroup& h,
                    std::uint64_t cap = kDefaultIntersectCap);

// True iff t1[i] -> t2[i] extends to an isomorphism <t1> -> <t2>, decided by
// the order of the diagonal group acting on the disjoint union of the two
// point sets. Tuples must have equal length.
bool diagonal_isomorphic(const std::vector<Permutation>& t1, const std::vector<Permutation>& t2);

// Closure of the generators in breadth-first (word length, generator order)
// order. Throws BudgetExceeded when the closure outgrows cap.
std::vector<Permutation> bfs_closure(int degree, const std::vector<Permutation>& gens,
                                     std::uint64_t cap);

}  // namespace scg
