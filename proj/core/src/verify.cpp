#include "rectlift/verify.hpp"

#include <map>
#include <stdexcept>

#include "rectlift/dimension.hpp"
#include "rectlift/nabla.hpp"
#include "rectlift/polytope.hpp"
#include "rectlift/rectsets.hpp"

namespace rectlift {

namespace {

/* the post-lift inversion roots never sum to a root: their supports are
 * never adjacent intervals */
bool pairwise_noncommuting_free(const RootSubset& s) {
  for (const PosRoot& g : s)
    for (const PosRoot& d : s)
      if (g.j + 1 == d.i) return false;
  return true;
}

bool order_iso_check(const LiftResult& lr) {
  const RootSubset& src = lr.dmap.source();
  const NablaIdeal& ideal = lr.dmap.image();
  RootSubset target = inversion_set(lr.tau_tilde);

  std::map<PosRoot, PosRoot> m;
  RootSubset image_set(target.rank());
  for (const PosRoot& a : src) {
    PosRoot y = i_map(ideal, lr.dmap.map(a));
    m.emplace(a, y);
    image_set.insert(y);
  }
  if (!(image_set == target)) return false;  // bijectivity onto the inversions

  const auto& mem = src.members();
  for (size_t s = 0; s < mem.size(); ++s) {
    for (size_t t = s; t < mem.size(); ++t) {
      const PosRoot &a = mem[s], &b = mem[t];
      const PosRoot &fa = m.at(a), &fb = m.at(b);
      if (leq(a, b) != leq(fa, fb) || leq(b, a) != leq(fb, fa)) return false;
      if (!(m.at(join(a, b)) == join(fa, fb))) return false;
      auto w = meet(a, b), fw = meet(fa, fb);
      if (w.has_value() != fw.has_value()) return false;
      if (w && !(m.at(*w) == *fw)) return false;
    }
  }
  return true;
}

bool pairing_check(const LiftResult& lr) {
  int n2 = 2 * lr.dmap.source_rank() - 1;
  for (const PosRoot& a : lr.dmap.source())
    if (lr.mu.pairing(lr.dmap.map(a)) != -lr.lambda.pairing(a)) return false;
  for (const PosRoot& b : positive_roots(n2))
    if (!lr.dmap.image().contains(b) && lr.mu.pairing(b) < 0) return false;
  return true;
}

bool weight_check(const LiftResult& lr) {
  std::map<PosRoot, long long> f;
  for (const PosRoot& a : lr.dmap.source())
    f.emplace(lr.dmap.map(a), -lr.lambda.pairing(a));
  try {
    Weight mu = weight_mu(lr.dmap.image(), f);
    if (!(mu == lr.mu)) return false;
    Weight back = mu.acted_by(lr.tau_tilde.inverse());
    return back == lr.lambda_tilde && back.is_dominant();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

VerificationReport verify_lift(const Permutation& tau, const Weight& lambda) {
  std::vector<ComponentLift> parts = lift_general(tau, lambda);  // validates the input
  VerificationReport rep;

  for (const ComponentLift& part : parts) {
    const LiftResult& lr = part.result;
    int n = lr.dmap.source_rank();

    rep.ideal &= is_nabla_ideal(n, lr.dmap.image().members());
    rep.inversion &= inversion_set(lr.tau_tilde.inverse()) == lr.dmap.image().members();
    rep.order_iso &= order_iso_check(lr);
    rep.commutative &= pairwise_noncommuting_free(inversion_set(lr.tau_tilde));
    rep.pairing &= pairing_check(lr);
    rep.weight &= weight_check(lr);

    rep.dim_lift_demazure *= demazure_dim(lr.tau_tilde, lr.lambda_tilde);
    rep.dim_lift_polytope *= polytope_count(inversion_set(lr.tau_tilde), lr.lambda_tilde);
  }

  rep.dim_demazure = demazure_dim(tau, lambda);
  rep.dim_polytope = polytope_count(inversion_set(tau), lambda);
  rep.dimension = rep.dim_demazure == rep.dim_polytope &&
                  rep.dim_demazure == rep.dim_lift_demazure &&
                  rep.dim_demazure == rep.dim_lift_polytope;
  return rep;
}

DimReport dims_agree(const Permutation& tau, const Weight& lambda) {
  if (!is_triangular(tau))
    throw std::invalid_argument("dims_agree needs a triangular permutation, got " +
                                to_string(tau));
  DimReport rep;
  rep.demazure = demazure_dim(tau, lambda);
  rep.polytope = polytope_count(inversion_set(tau), lambda);
  rep.equal = rep.demazure == rep.polytope;
  if (is_rectangular(tau)) {
    rep.lifted_known = true;
    rep.lifted = 1;
    for (const ComponentLift& part : lift_general(tau, lambda))
      rep.lifted *= demazure_dim(part.result.tau_tilde, part.result.lambda_tilde);
    rep.equal = rep.equal && rep.lifted == rep.demazure;
  }
  return rep;
}

}  // namespace rectlift
