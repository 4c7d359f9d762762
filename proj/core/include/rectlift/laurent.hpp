#pragma once

/* Sparse integer polynomials in m commuting variables, with the isobaric
 * divided difference pi_i f = (x_i f - x_{i+1} s_i(f)) / (x_i - x_{i+1}).
 * pi_i is evaluated per monomial by the telescoped geometric sum, so no
 * polynomial division happens anywhere.
 */

#include <map>
#include <vector>

namespace rectlift {

class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars);
  static LaurentPoly monomial(std::vector<int> exponents, long long coeff = 1);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  long long coeff(const std::vector<int>& expo) const;
  void add_term(std::vector<int> expo, long long c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;

  /* evaluation at x_1 = ... = x_m = 1 */
  long long coeff_sum() const;

  /* exchange two variables; handy for symmetry checks */
  LaurentPoly with_swapped(int a, int b) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int nvars_;
  std::map<std::vector<int>, long long> terms_;
};

/* pi_i, acting on variables x_i, x_{i+1} (1-based, i < nvars).
 * On a monomial with exponents (a, b) in those slots:
 *   a >= b     ->  sum of x_i^t x_{i+1}^{a+b-t} for t = b..a
 *   b == a+1   ->  0
 *   b >  a+1   ->  minus the sum for t = a+1..b-1                     */
LaurentPoly demazure_operator(const LaurentPoly& f, int i);

}  // namespace rectlift
