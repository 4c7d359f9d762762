#include "rectlift/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rectlift {

std::vector<std::vector<PosRoot>> dyck_paths(int rank) {
  std::vector<std::vector<PosRoot>> out;
  std::vector<PosRoot> path;
  auto walk = [&](auto&& self, int p, int q, int j) -> void {
    path.emplace_back(p, q, rank);
    if (p == j && q == j) {
      out.push_back(path);
    } else {
      if (q + 1 <= j) self(self, p, q + 1, j);
      if (p + 1 <= q) self(self, p + 1, q, j);
    }
    path.pop_back();
  };
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) walk(walk, i, i, j);
  return out;
}

namespace {

struct Constraint {
  std::vector<int> coords;  // indices into the support member order
  long long bound;
};

std::vector<Constraint> face_constraints(const RootSubset& support, const Weight& marking) {
  if (support.rank() != marking.rank())
    throw std::invalid_argument("support rank " + std::to_string(support.rank()) +
                                " and marking rank " + std::to_string(marking.rank()) +
                                " differ");
  if (!marking.is_dominant())
    throw std::invalid_argument("marking must be dominant, got " + to_string(marking));
  if (ClosureCheck c = check_triangular_subset(support); !c.ok)
    throw std::invalid_argument("support is not triangular: axiom " + c.axiom + " fails at (" +
                                to_string(c.witness->first) + ", " + to_string(c.witness->second) +
                                ")");

  const auto& members = support.members();
  auto index_of = [&](const PosRoot& a) {
    auto it = std::lower_bound(members.begin(), members.end(), a);
    return it != members.end() && *it == a ? static_cast<int>(it - members.begin()) : -1;
  };

  /* paths with the same support cells keep only the tightest bound */
  std::map<std::vector<int>, long long> tight;
  for (const auto& path : dyck_paths(support.rank())) {
    std::vector<int> coords;
    for (const PosRoot& cell : path)
      if (int t = index_of(cell); t >= 0) coords.push_back(t);
    if (coords.empty()) continue;
    long long bound = marking.pairing(PosRoot(path.front().i, path.back().j, support.rank()));
    auto [it, fresh] = tight.emplace(std::move(coords), bound);
    if (!fresh) it->second = std::min(it->second, bound);
  }

  std::vector<Constraint> out;
  out.reserve(tight.size());
  for (auto& [coords, bound] : tight) out.push_back({coords, bound});
  return out;
}

long long walk_points(const RootSubset& support, const Weight& marking,
                      std::vector<std::vector<long long>>* collect) {
  std::vector<Constraint> cons = face_constraints(support, marking);
  int d = support.size();

  /* constraints touching each coordinate */
  std::vector<std::vector<int>> touching(static_cast<size_t>(d));
  for (size_t c = 0; c < cons.size(); ++c)
    for (int t : cons[c].coords) touching[static_cast<size_t>(t)].push_back(static_cast<int>(c));

  std::vector<long long> remaining(cons.size());
  for (size_t c = 0; c < cons.size(); ++c) remaining[c] = cons[c].bound;

  std::vector<long long> point(static_cast<size_t>(d), 0);
  long long count = 0;
  auto rec = [&](auto&& self, int t) -> void {
    if (t == d) {
      ++count;
      if (collect) collect->push_back(point);
      return;
    }
    long long cap = -1;
    for (int c : touching[static_cast<size_t>(t)])
      cap = cap < 0 ? remaining[static_cast<size_t>(c)] : std::min(cap, remaining[static_cast<size_t>(c)]);
    /* every support cell lies on its own one-cell path, so cap >= 0 here */
    for (long long v = 0; v <= cap; ++v) {
      point[static_cast<size_t>(t)] = v;
      for (int c : touching[static_cast<size_t>(t)]) remaining[static_cast<size_t>(c)] -= v;
      self(self, t + 1);
      for (int c : touching[static_cast<size_t>(t)]) remaining[static_cast<size_t>(c)] += v;
    }
    point[static_cast<size_t>(t)] = 0;
  };
  rec(rec, 0);
  return count;
}

}  // namespace

long long polytope_count(const RootSubset& support, const Weight& marking) {
  return walk_points(support, marking, nullptr);
}

std::vector<std::vector<long long>> polytope_points(const RootSubset& support,
                                                    const Weight& marking) {
  std::vector<std::vector<long long>> pts;
  walk_points(support, marking, &pts);
  return pts;
}

}  // namespace rectlift
