#include "rectlift/rectsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectlift {

RootSubset::RootSubset(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

RootSubset::RootSubset(int rank, std::vector<PosRoot> members) : rank_(rank), members_(std::move(members)) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  for (const PosRoot& a : members_)
    if (a.rank != rank_)
      throw std::invalid_argument("member " + to_string(a) + " has rank " + std::to_string(a.rank) +
                                  ", subset has rank " + std::to_string(rank_));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool RootSubset::contains(const PosRoot& a) const {
  if (a.rank != rank_) return false;
  return std::binary_search(members_.begin(), members_.end(), a);
}

void RootSubset::insert(const PosRoot& a) {
  if (a.rank != rank_)
    throw std::invalid_argument("cannot insert " + to_string(a) + " into a rank-" +
                                std::to_string(rank_) + " subset");
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it == members_.end() || *it != a) members_.insert(it, a);
}

std::string to_string(const RootSubset& a) {
  std::string out = "{";
  bool first = true;
  for (const PosRoot& x : a) {
    if (!first) out += ", ";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

ClosureCheck check_triangular_subset(const RootSubset& a) {
  const auto& m = a.members();
  for (size_t p = 0; p < m.size(); ++p) {
    for (size_t q = p; q < m.size(); ++q) {
      if (!supports_connected(m[p], m[q])) continue;
      if (!a.contains(join(m[p], m[q]))) return {false, {{m[p], m[q]}}, "R1"};
      if (auto w = meet(m[p], m[q]); w && !a.contains(*w)) return {false, {{m[p], m[q]}}, "R1"};
    }
  }
  return {};
}

ClosureCheck check_rectangular_subset(const RootSubset& a) {
  if (ClosureCheck r1 = check_triangular_subset(a); !r1.ok) return r1;
  const std::vector<PosRoot> all = positive_roots(a.rank());
  for (size_t p = 0; p < all.size(); ++p) {
    for (size_t q = p; q < all.size(); ++q) {
      auto w = meet(all[p], all[q]);
      if (!w) continue;
      if (a.contains(join(all[p], all[q])) && a.contains(*w) &&
          !(a.contains(all[p]) && a.contains(all[q])))
        return {false, {{all[p], all[q]}}, "R2"};
    }
  }
  return {};
}

bool is_triangular_subset(const RootSubset& a) { return check_triangular_subset(a).ok; }

bool is_rectangular_subset(const RootSubset& a) { return check_rectangular_subset(a).ok; }

namespace {

void require_rectangular(const RootSubset& a, const char* who) {
  ClosureCheck c = check_rectangular_subset(a);
  if (!c.ok)
    throw std::invalid_argument(std::string(who) + " requires a rectangular subset; axiom " +
                                c.axiom + " fails at (" + to_string(c.witness->first) + ", " +
                                to_string(c.witness->second) + ")");
}

}  // namespace

bool is_irreducible(const RootSubset& a) {
  require_rectangular(a, "is_irreducible");
  if (a.rank() < 1) return false;
  return a.contains(highest_root(a.rank()));
}

Decomposition decompose(const RootSubset& a) {
  require_rectangular(a, "decompose");
  std::vector<char> covered(static_cast<size_t>(a.rank()) + 1, 0);
  for (const PosRoot& x : a)
    for (int t = x.i; t <= x.j; ++t) covered[static_cast<size_t>(t)] = 1;

  Decomposition out;
  int t = 1;
  while (t <= a.rank()) {
    if (!covered[static_cast<size_t>(t)]) {
      ++t;
      continue;
    }
    int lo = t;
    while (t <= a.rank() && covered[static_cast<size_t>(t)]) ++t;
    int hi = t - 1;
    out.intervals.emplace_back(lo, hi);
    std::vector<PosRoot> piece;
    for (const PosRoot& x : a)
      if (lo <= x.i && x.j <= hi) piece.push_back(x);
    out.components.emplace_back(a.rank(), std::move(piece));
  }

  /* components of a rectangular set are irreducible rectangular over their
   * intervals; the split is only valid if that holds */
  int total = 0;
  for (size_t c = 0; c < out.components.size(); ++c) {
    total += out.components[c].size();
    auto [lo, hi] = out.intervals[c];
    if (!out.components[c].contains(PosRoot(lo, hi, a.rank())))
      throw std::logic_error("decompose: component misses its top root a[" + std::to_string(lo) +
                             "," + std::to_string(hi) + "]");
    if (!is_rectangular_subset(out.components[c]))
      throw std::logic_error("decompose: component over [" + std::to_string(lo) + "," +
                             std::to_string(hi) + "] is not rectangular");
  }
  if (total != a.size()) throw std::logic_error("decompose: components do not partition the set");
  return out;
}

BoundarySets boundary_sets(const RootSubset& a) {
  BoundarySets out{RootSubset(a.rank()), RootSubset(a.rank())};
  for (const PosRoot& x : a) {
    if (x.i == 1) out.lower.insert(x);
    if (x.j == a.rank()) out.upper.insert(x);
  }

  /* for irreducible rectangular input the boundary slices determine the set:
   * A = { meet(b, c) : b in lower, c in upper, meet defined } */
  if (a.rank() >= 1 && a.contains(highest_root(a.rank())) && is_rectangular_subset(a)) {
    RootSubset rebuilt(a.rank());
    for (const PosRoot& b : out.lower)
      for (const PosRoot& c : out.upper)
        if (auto w = meet(b, c)) rebuilt.insert(*w);
    if (!(rebuilt == a))
      throw std::logic_error("boundary_sets: meet reconstruction disagrees with the input set");
  }
  return out;
}

}  // namespace rectlift
