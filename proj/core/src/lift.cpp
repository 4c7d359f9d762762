#include "rectlift/lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectlift {

namespace {

RootSubset checked_irreducible(RootSubset n_set) {
  if (n_set.rank() < 1) throw std::invalid_argument("lift needs rank >= 1");
  ClosureCheck c = check_rectangular_subset(n_set);
  if (!c.ok)
    throw std::invalid_argument("not rectangular: axiom " + c.axiom + " fails at (" +
                                to_string(c.witness->first) + ", " + to_string(c.witness->second) +
                                ")");
  if (!n_set.contains(highest_root(n_set.rank())))
    throw std::invalid_argument(
        "not irreducible (highest root missing); use lift_general for the component-wise lift");
  return n_set;
}

NablaIdeal build_image(const RootSubset& src, std::vector<int>& js, std::vector<int>& is,
                       std::vector<std::pair<PosRoot, PosRoot>>& fwd) {
  BoundarySets b = boundary_sets(src);
  for (const PosRoot& x : b.lower) js.push_back(x.j);
  for (const PosRoot& x : b.upper) is.push_back(x.i);
  std::sort(js.rbegin(), js.rend());
  std::sort(is.begin(), is.end());

  int n = src.rank();
  RootSubset cells(2 * n - 1);
  for (size_t k = 0; k < js.size(); ++k) {
    for (size_t h = 0; h < is.size(); ++h) {
      if (is[h] > js[k]) continue;
      PosRoot from(is[h], js[k], n);
      PosRoot to = nabla_cell(n, static_cast<int>(k) + 1, static_cast<int>(h) + 1);
      if (!src.contains(from))
        throw std::logic_error("boundary grid exceeds the inversion set at " + to_string(from));
      fwd.emplace_back(from, to);
      cells.insert(to);
    }
  }
  if (static_cast<int>(fwd.size()) != src.size())
    throw std::logic_error("boundary grid does not exhaust the inversion set");
  std::sort(fwd.begin(), fwd.end());
  try {
    return NablaIdeal(n, cells);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("image of the inversion set is not an ideal: ") + e.what());
  }
}

}  // namespace

DMap::DMap(RootSubset inversions)
    : source_(checked_irreducible(std::move(inversions))),
      image_(build_image(source_, js_, is_, fwd_)) {}

DMap DMap::of(const Permutation& tau) { return DMap(inversion_set(tau)); }

PosRoot DMap::map(const PosRoot& a) const {
  auto it = std::lower_bound(fwd_.begin(), fwd_.end(), a,
                             [](const auto& pr, const PosRoot& key) { return pr.first < key; });
  if (it == fwd_.end() || it->first != a)
    throw std::invalid_argument(to_string(a) + " is not in the mapped inversion set");
  return it->second;
}

PosRoot DMap::unmap(const PosRoot& cell) const {
  for (const auto& [from, to] : fwd_)
    if (to == cell) return from;
  throw std::invalid_argument(to_string(cell) + " is not in the image ideal");
}

LiftResult lift(const Permutation& tau, const Weight& lambda) {
  int n = tau.degree() - 1;
  if (lambda.rank() != n)
    throw std::invalid_argument("weight rank " + std::to_string(lambda.rank()) +
                                " does not match degree " + std::to_string(tau.degree()));
  if (!lambda.is_dominant())
    throw std::invalid_argument("lift needs a dominant weight, got " + to_string(lambda));

  DMap dm = DMap::of(tau);
  Permutation tt = tau_A(dm.image());

  std::vector<long long> c(static_cast<size_t>(2 * n - 1), 0);
  for (int r = 1; r <= n; ++r) {
    long long ar = lambda.coeff(r);
    if (ar == 0) continue;
    auto v = std::count_if(dm.ends_j().begin(), dm.ends_j().end(), [&](int j) { return j >= r; });
    auto u = std::count_if(dm.starts_i().begin(), dm.starts_i().end(), [&](int i) { return i <= r; });
    int rp = n - static_cast<int>(v) + static_cast<int>(u);
    if (rp < 1 || rp > 2 * n - 1)
      throw std::logic_error("lifted fundamental index " + std::to_string(rp) + " out of range");
    c[static_cast<size_t>(rp - 1)] += ar;
  }
  Weight lt{std::move(c)};
  if (!lt.is_dominant()) throw std::logic_error("lifted weight is not dominant");

  Weight mu = lt.acted_by(tt);

  /* the pairing laws the construction guarantees */
  for (const PosRoot& a : dm.source())
    if (mu.pairing(dm.map(a)) != -lambda.pairing(a))
      throw std::logic_error("lift: <mu, mapped " + to_string(a) + "> != -<lambda, " +
                             to_string(a) + ">");
  for (const PosRoot& b : positive_roots(2 * n - 1))
    if (!dm.image().contains(b) && mu.pairing(b) < 0)
      throw std::logic_error("lift: <mu, " + to_string(b) + "> < 0 off the ideal");

  return LiftResult{tau, lambda, std::move(dm), std::move(tt), std::move(lt), std::move(mu)};
}

std::vector<ComponentLift> lift_general(const Permutation& tau, const Weight& lambda) {
  int n = tau.degree() - 1;
  if (n < 1) return {};
  if (lambda.rank() != n)
    throw std::invalid_argument("weight rank " + std::to_string(lambda.rank()) +
                                " does not match degree " + std::to_string(tau.degree()));
  if (!lambda.is_dominant())
    throw std::invalid_argument("lift needs a dominant weight, got " + to_string(lambda));

  Decomposition dec = decompose(inversion_set(tau));  // also enforces rectangularity
  std::vector<ComponentLift> out;
  out.reserve(dec.intervals.size());
  for (size_t t = 0; t < dec.intervals.size(); ++t) {
    auto [lo, hi] = dec.intervals[t];
    /* tau maps the letters lo..hi+1 among themselves; re-index to 1.. */
    std::vector<int> oneline;
    oneline.reserve(static_cast<size_t>(hi - lo + 2));
    for (int x = lo; x <= hi + 1; ++x) oneline.push_back(tau(x) - (lo - 1));
    std::vector<long long> coeffs;
    coeffs.reserve(static_cast<size_t>(hi - lo + 1));
    for (int r = lo; r <= hi; ++r) coeffs.push_back(lambda.coeff(r));
    out.push_back(
        ComponentLift{{lo, hi}, lift(Permutation(std::move(oneline)), Weight(std::move(coeffs)))});
  }
  return out;
}

}  // namespace rectlift
