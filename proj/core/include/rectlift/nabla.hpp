#pragma once

/* The staircase region nabla_n inside the rank 2n-1 positive roots:
 * at[i,j] with 1 <= i <= n <= j <= 2n-1 and j-i <= n-1.  Writing
 * k = n-i+1 (row) and h = j-n+1 (column) turns nabla_n into the cells
 * k,h >= 1, k+h <= n+1, so |nabla_n| = n(n+1)/2.
 *
 * A nabla-ideal is a downward closed subset.  Each ideal A yields a
 * permutation tau_A (the product of the reflections of its members, taken
 * in any height-decreasing order), whose inverse acts on nabla_n by an
 * explicit closed form, and a bijection i_A(a) = -tau_A^{-1}(a) from A onto
 * the inversion set of tau_A that reverses order and exchanges join with
 * meet.  weight_mu solves the interpolation problem: given prescribed
 * pairings f on A it produces mu with <mu, a> = f(a) on A and <mu, b> >= 0
 * on the rest of the positive roots, with tau_A^{-1} mu dominant.
 */

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rectlift/perm.hpp"
#include "rectlift/rectsets.hpp"
#include "rectlift/roots.hpp"
#include "rectlift/weight.hpp"

namespace rectlift {

/* the full region, as a subset of the rank 2n-1 system */
RootSubset nabla(int n);

/* row/column coordinates of a member of nabla_n */
std::pair<int, int> nabla_coords(int n, const PosRoot& a);
PosRoot nabla_cell(int n, int k, int h);

bool is_nabla_ideal(int n, const RootSubset& a);

class NablaIdeal {
 public:
  /* validates containment in nabla_n and downward closure */
  NablaIdeal(int n, RootSubset members);
  static NablaIdeal full(int n);

  int n() const { return n_; }
  int size() const { return members_.size(); }
  const RootSubset& members() const { return members_; }
  bool contains(const PosRoot& a) const { return members_.contains(a); }

  /* col_stats()[k-1] is the largest h with cell (k,h) in the ideal (0 if
   * the row is empty); row_stats() is the transpose.  The two sequences
   * are weakly decreasing and mutually conjugate partitions. */
  const std::vector<int>& col_stats() const { return col_; }
  const std::vector<int>& row_stats() const { return row_; }

 private:
  int n_;
  RootSubset members_;
  std::vector<int> col_, row_;
};

/* product of root reflections s_{b_1} ... s_{b_k}, rightmost acting first */
Permutation reflection_product(int degree, std::span<const PosRoot> betas);

/* tau_A: reflections of the members in decreasing height (ties broken by
 * (i,j), though any height-decreasing order gives the same element) */
Permutation tau_A(const NablaIdeal& a);

/* closed form for tau_A^{-1} applied to a member of nabla_n.  The empty
 * optional is the degenerate "zero" outcome of the formula (its interval
 * collapses); it cannot arise for a valid ideal, but is kept explicit
 * rather than folded into a root. */
std::optional<SignedRoot> tau_inv_on_nabla(const NablaIdeal& a, const PosRoot& x);

/* i_A(x) = -tau_A^{-1}(x) for x in the ideal */
PosRoot i_map(const NablaIdeal& a, const PosRoot& x);

/* the interpolation weight; f must be defined exactly on the members and
 * satisfy (i) f <= 0, (ii) monotone, (iii) modular on joins inside the
 * ideal, (iv) negative modular defect forces the join into the ideal */
Weight weight_mu(const NablaIdeal& a, const std::map<PosRoot, long long>& f);

}  // namespace rectlift
