#pragma once

/* Positive roots of the type A_n root system, identified by their support
 * interval: a[i,j] = a_i + ... + a_j for 1 <= i <= j <= n.  Dominance order,
 * join and meet, and the textual form "a[i,j]" (simple roots print as "a[i]").
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rectlift {

struct PosRoot {
  int i;
  int j;
  int rank;

  PosRoot(int i, int j, int rank);

  int height() const { return j - i + 1; }

  /* ordering is (i, j) within a fixed rank; rank participates so that
   * distinct ambient systems never compare equal */
  friend auto operator<=>(const PosRoot&, const PosRoot&) = default;
};

/* a stands for +root, -root for the negative; the W-action can flip signs */
struct SignedRoot {
  PosRoot root;
  bool negative = false;

  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/* dominance order: a <= b iff supp(a) is contained in supp(b) */
bool leq(const PosRoot& a, const PosRoot& b);

/* least upper bound; always exists (supports may be glued through the gap) */
PosRoot join(const PosRoot& a, const PosRoot& b);

/* greatest lower bound; exists iff the supports overlap */
std::optional<PosRoot> meet(const PosRoot& a, const PosRoot& b);

/* whether supp(a) union supp(b) is a contiguous interval */
bool supports_connected(const PosRoot& a, const PosRoot& b);

/* highest root a[1,n] */
PosRoot highest_root(int rank);

/* all positive roots, sorted by (i, j) */
std::vector<PosRoot> positive_roots(int rank);

std::string to_string(const PosRoot& a);
std::string to_string(const SignedRoot& a);

/* parses "a[i,j]" or the simple-root shorthand "a[i]" */
PosRoot parse_root(std::string_view text, int rank);

}  // namespace rectlift
