#pragma once

/* End-to-end verification of the lift: every structural statement the
 * construction promises, evaluated from scratch on a concrete (tau, lambda)
 * pair.  Reducible elements are verified per component; the dimension
 * comparison then pits the global Demazure and polytope counts against the
 * product of the lifted ones.
 */

#include <vector>

#include "rectlift/lift.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/weight.hpp"

namespace rectlift {

struct VerificationReport {
  bool ideal = true;        // (a) the mapped inversion set is a nabla-ideal
  bool inversion = true;    // (b) inversions of tau_tilde^{-1} equal the ideal
  bool order_iso = true;    // (c) i_A after the cell map: order iso, keeps join/meet
  bool commutative = true;  // (d) no two inversions of tau_tilde sum to a root
  bool pairing = true;      // (e) <mu,.> is -<lambda,.> on N(tau), >= 0 off the ideal
  bool dimension = true;    // (f) both oracles agree on both sides
  bool weight = true;       //     mu is recovered from the ideal and pairings alone

  long long dim_demazure = 1;       // dim V_tau(lambda)
  long long dim_polytope = 1;       // same, by lattice-point count
  long long dim_lift_demazure = 1;  // product over components of dim V_{tau~}(lambda~)
  long long dim_lift_polytope = 1;

  bool pass() const {
    return ideal && inversion && order_iso && commutative && pairing && dimension && weight;
  }
};

/* requires tau rectangular and lambda dominant of matching rank */
VerificationReport verify_lift(const Permutation& tau, const Weight& lambda);

struct DimReport {
  long long demazure = 1;
  long long polytope = 1;
  long long lifted = 1;  // meaningful when lifted_known
  bool lifted_known = false;
  bool equal = false;
};

/* Demazure vs polytope dimension for triangular tau; when tau is also
 * rectangular the lifted dimension joins the comparison */
DimReport dims_agree(const Permutation& tau, const Weight& lambda);

}  // namespace rectlift
