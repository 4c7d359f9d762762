#pragma once

/* Subsets of the positive roots and the two closure properties this library
 * revolves around.
 *
 * A subset A is triangular when for all a, b in A whose supports form one
 * interval: join(a,b) is in A, and meet(a,b) is in A whenever it exists.
 * A is rectangular when it is triangular and conversely membership of both
 * join(a,b) and meet(a,b) (the latter existing) forces a and b into A.
 * Irreducible means the highest root belongs to A; a general rectangular set
 * splits into irreducible rectangular pieces over the connected components
 * of its support.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlift/roots.hpp"

namespace rectlift {

class RootSubset {
 public:
  explicit RootSubset(int rank);
  RootSubset(int rank, std::vector<PosRoot> members);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(const PosRoot& a) const;
  void insert(const PosRoot& a);

  /* members sorted by (i, j) */
  const std::vector<PosRoot>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const RootSubset&, const RootSubset&) = default;

 private:
  int rank_;
  std::vector<PosRoot> members_;
};

std::string to_string(const RootSubset& a);

/* outcome of a closure test; on failure, the lexicographically least
 * violating pair and which axiom it breaks ("R1" or "R2") */
struct ClosureCheck {
  bool ok = true;
  std::optional<std::pair<PosRoot, PosRoot>> witness;
  std::string axiom;
};

ClosureCheck check_triangular_subset(const RootSubset& a);
ClosureCheck check_rectangular_subset(const RootSubset& a);
bool is_triangular_subset(const RootSubset& a);
bool is_rectangular_subset(const RootSubset& a);

/* highest root membership; requires a rectangular input */
bool is_irreducible(const RootSubset& a);

/* splitting of a rectangular set along the connected components of the
 * union of supports; components keep the ambient rank */
struct Decomposition {
  std::vector<std::pair<int, int>> intervals;  // [first, last], ascending
  std::vector<RootSubset> components;
};

Decomposition decompose(const RootSubset& a);

/* left boundary: members a[1,j]; right boundary: members a[i,n].
 * For an irreducible rectangular set these two slices reconstruct all of A
 * as the pairwise meets; that identity is checked and enforced here. */
struct BoundarySets {
  RootSubset lower;  // the a[1,j] members
  RootSubset upper;  // the a[i,n] members
};

BoundarySets boundary_sets(const RootSubset& a);

}  // namespace rectlift
