#pragma once

/* Demazure characters and dimensions.  char V_tau(lambda) is computed as
 * pi_{i_1} ... pi_{i_l} x^lambda over a reduced word of tau, where x^lambda
 * carries the epsilon exponents of lambda.  The twisted module V_tau^-(
 * lambda) has the same dimension, so a single dimension function serves
 * both.  weyl_dim is the closed product formula for the full module and is
 * used as an independent cross-check of the w0 case.
 */

#include <span>

#include "rectlift/laurent.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/weight.hpp"

namespace rectlift {

/* requires lambda dominant with rank = degree(tau) - 1 */
LaurentPoly demazure_character(const Permutation& tau, const Weight& lambda);

/* same, over a caller-chosen (not necessarily reduced) word in a symmetric
 * group of the given degree */
LaurentPoly demazure_character_from_word(int degree, std::span<const int> word,
                                         const Weight& lambda);

long long demazure_dim(const Permutation& tau, const Weight& lambda);

/* dim V(lambda) = prod over i <= j of (c_i + ... + c_j + j - i + 1)/(j - i + 1),
 * evaluated in exact arithmetic */
long long weyl_dim(const Weight& lambda);

}  // namespace rectlift
