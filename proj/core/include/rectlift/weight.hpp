#pragma once

/* Integral weights of sl_{rank+1} in the basis of fundamental weights.
 * pairing(a[i,j]) is c_i + ... + c_j; the symmetric group acts through
 * epsilon coordinates (partial sums), which are well defined up to the
 * determinant relation and normalized by a trailing zero.
 */

#include <span>
#include <string>
#include <vector>

#include "rectlift/perm.hpp"
#include "rectlift/roots.hpp"

namespace rectlift {

class Weight {
 public:
  explicit Weight(std::vector<long long> coeffs);

  static Weight zero(int rank);
  static Weight fundamental(int rank, int r);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  long long coeff(int t) const { return coeffs_[static_cast<size_t>(t - 1)]; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  bool is_dominant() const;
  bool is_zero() const;

  long long pairing(const PosRoot& a) const;

  /* epsilon coordinates (a_1, ..., a_{rank+1}) with a_k = c_k + ... + c_rank */
  std::vector<long long> to_epsilon() const;
  static Weight from_epsilon(std::span<const long long> eps);

  /* w . lambda, where the permutation has degree rank+1 */
  Weight acted_by(const Permutation& w) const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<long long> coeffs_;
};

std::string to_string(const Weight& w);

/* comma-separated fundamental coefficients, e.g. "1,0,2" */
Weight parse_weight(std::string_view text);

}  // namespace rectlift
