#pragma once

/* Permutations in one-line notation, their inversion sets, the pattern-
 * avoidance classes this library studies, and census enumeration.
 *
 * Composition is (p * q)(x) = p(q(x)); in words of simple reflections the
 * rightmost letter acts first.  A permutation of degree m works with the
 * rank m-1 root system: inversions (i, j) with i < j, p(i) > p(j) correspond
 * to the roots a[i,j-1].
 */

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectlift/rectsets.hpp"
#include "rectlift/roots.hpp"

namespace rectlift {

class Permutation {
 public:
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int degree);
  static Permutation simple(int degree, int i);  // s_i, swaps i and i+1
  static Permutation transposition(int degree, int a, int b);

  /* product s_{w_1} ... s_{w_k} in the symmetric group on rank+1 letters */
  static Permutation from_word(int rank, std::span<const int> word);

  int degree() const { return static_cast<int>(oneline_.size()); }
  int operator()(int x) const { return oneline_[static_cast<size_t>(x - 1)]; }
  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;

  long long length() const;  // number of inversions
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> oneline_;
};

/* "43251" (degree <= 9) or "4,3,2,5,1"; see parse_permutation for the
 * accepted input forms including words "s1 s2 s1" */
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/* N(p) = { a[i,j-1] : i < j, p(i) > p(j) }, a subset of rank degree-1 */
RootSubset inversion_set(const Permutation& p);

/* action on the root lattice: eps_k -> eps_{p(k)} */
SignedRoot act_on_root(const Permutation& p, const SignedRoot& a);

/* whether p contains q as a (classical, order-isomorphic) pattern */
bool contains_pattern(const Permutation& p, const Permutation& q);

/* rectangular <=> avoids 2413, 2431, 4213, 4231;
 * triangular  <=> avoids 2413, 4231.
 * Each predicate also evaluates the direct inequality criterion on values
 * and insists the two answers agree. */
bool is_rectangular(const Permutation& p);
bool is_triangular(const Permutation& p);

/* w0 * p^-1 * w0 as a pattern-duality involution: p avoids q iff
 * involution_i(p) avoids involution_i(q) */
Permutation involution_i(const Permutation& p);

/* deterministic reduced word, built by repeatedly removing the leftmost
 * descent; from_word(degree-1, reduced_word(p)) == p */
std::vector<int> reduced_word(const Permutation& p);

enum class PermClass { rectangular, triangular };

inline constexpr int kCensusBound = 8;

/* class members of the symmetric group on n letters, lexicographic by
 * one-line notation; refuses n above the bound (prefix-pruned search keeps
 * the default bound cheap, but the space is factorial) */
std::vector<Permutation> enumerate_class(int n, PermClass cls, int bound = kCensusBound);
long long census(int n, PermClass cls, int bound = kCensusBound);

}  // namespace rectlift
