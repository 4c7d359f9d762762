#pragma once

/* Lifting rectangular elements and dominant weights from rank n to rank
 * 2n-1.  For an irreducible rectangular inversion set N the boundary slices
 * give two index sequences, n = j_1 > j_2 > ... and 1 = i_1 < i_2 < ...,
 * with N = { a[i_h, j_k] : i_h <= j_k }; the map sending a[i_h, j_k] to the
 * nabla cell (k, h) is a bijection onto a nabla-ideal A.  The lifted
 * element is tau_A, the lifted weight replaces each fundamental index r by
 * n - v(r) + u(r) (v counts boundary j's >= r, u counts boundary i's <= r),
 * and mu = tau_tilde . lambda_tilde.  Reducible rectangular elements lift
 * component by component over their support intervals.
 */

#include <utility>
#include <vector>

#include "rectlift/nabla.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/rectsets.hpp"
#include "rectlift/roots.hpp"
#include "rectlift/weight.hpp"

namespace rectlift {

class DMap {
 public:
  /* requires an irreducible rectangular subset of rank >= 1 */
  explicit DMap(RootSubset inversions);
  static DMap of(const Permutation& tau);

  int source_rank() const { return source_.rank(); }
  const RootSubset& source() const { return source_; }
  const NablaIdeal& image() const { return image_; }

  /* boundary index sequences: descending right endpoints of the a[1,j]
   * members, ascending left endpoints of the a[i,n] members */
  const std::vector<int>& ends_j() const { return js_; }
  const std::vector<int>& starts_i() const { return is_; }

  PosRoot map(const PosRoot& a) const;
  PosRoot unmap(const PosRoot& cell) const;

 private:
  RootSubset source_;
  std::vector<int> js_, is_;
  std::vector<std::pair<PosRoot, PosRoot>> fwd_;  // sorted by source root
  NablaIdeal image_;
};

struct LiftResult {
  Permutation tau;
  Weight lambda;
  DMap dmap;
  Permutation tau_tilde;   // tau_A of the ideal, degree 2n
  Weight lambda_tilde;     // dominant, rank 2n-1
  Weight mu;               // tau_tilde . lambda_tilde
};

/* requires tau irreducible rectangular and lambda dominant of rank
 * degree(tau) - 1 */
LiftResult lift(const Permutation& tau, const Weight& lambda);

struct ComponentLift {
  std::pair<int, int> interval;  // support interval inside the ambient rank
  LiftResult result;             // over the re-indexed standalone interval
};

/* rectangular tau of any shape; one entry per support component, in
 * interval order (the identity has none) */
std::vector<ComponentLift> lift_general(const Permutation& tau, const Weight& lambda);

}  // namespace rectlift
