#pragma once

/* Lattice points of marked-chain faces.  Coordinates live on a triangular
 * subset S of the positive roots; every staircase path p from a[i,i] to
 * a[j,j] (steps extend the support right or shrink it from the left, i.e.
 * (p,q) -> (p,q+1) or (p+1,q)) imposes
 *
 *     sum of x_b over b in (p intersect S)  <=  c_i + ... + c_j
 *
 * with all coordinates nonnegative and coordinates off S fixed to zero.
 * For a triangular permutation with S = N(tau) the count equals
 * dim V_tau(lambda); that equality is what the dimension checks exercise.
 */

#include <vector>

#include "rectlift/rectsets.hpp"
#include "rectlift/roots.hpp"
#include "rectlift/weight.hpp"

namespace rectlift {

/* all staircase paths between diagonal cells, each path a list of roots */
std::vector<std::vector<PosRoot>> dyck_paths(int rank);

/* number of integer points; requires a triangular support and dominant
 * marking of the same rank */
long long polytope_count(const RootSubset& support, const Weight& marking);

/* the points themselves, coordinates listed in the sorted member order of
 * the support; the count is points().size() */
std::vector<std::vector<long long>> polytope_points(const RootSubset& support,
                                                    const Weight& marking);

}  // namespace rectlift
