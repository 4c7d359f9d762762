#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rectlift/nabla.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/rectsets.hpp"
#include "rectlift/roots.hpp"

namespace testutil {

inline rectlift::RootSubset subset(int rank,
                                   std::initializer_list<std::pair<int, int>> pairs) {
  rectlift::RootSubset s(rank);
  for (auto [i, j] : pairs) s.insert(rectlift::PosRoot(i, j, rank));
  return s;
}

/* Ideals of the staircase region are exactly the weakly decreasing column
 * fillings c_1 >= c_2 >= ... with c_k <= n + 1 - k, so sampling those
 * uniformly-ish gives a uniform-enough spread of shapes. */
inline rectlift::NablaIdeal random_ideal(int n, std::mt19937& rng) {
  std::vector<int> c(static_cast<size_t>(n));
  int prev = n;
  for (int k = 1; k <= n; ++k) {
    int hi = std::min(prev, n + 1 - k);
    std::uniform_int_distribution<int> pick(0, hi);
    c[static_cast<size_t>(k - 1)] = pick(rng);
    prev = c[static_cast<size_t>(k - 1)];
  }
  rectlift::RootSubset members(2 * n - 1);
  for (int k = 1; k <= n; ++k)
    for (int h = 1; h <= c[static_cast<size_t>(k - 1)]; ++h)
      members.insert(rectlift::nabla_cell(n, k, h));
  return rectlift::NablaIdeal(n, std::move(members));
}

/* A reduced word chosen by resolving a random descent at every step, for
 * word-independence tests. Built right-to-left the same way reduced_word
 * is, then reversed so from_word reproduces p. */
inline std::vector<int> random_reduced_word(const rectlift::Permutation& p,
                                            std::mt19937& rng) {
  std::vector<int> word;
  std::vector<int> line = p.oneline();
  int deg = static_cast<int>(line.size());
  while (true) {
    std::vector<int> descents;
    for (int i = 1; i < deg; ++i)
      if (line[static_cast<size_t>(i - 1)] > line[static_cast<size_t>(i)])
        descents.push_back(i);
    if (descents.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, descents.size() - 1);
    int i = descents[pick(rng)];
    std::swap(line[static_cast<size_t>(i - 1)], line[static_cast<size_t>(i)]);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testutil
