#include "rectlift/dimension.hpp"

#include <numeric>
#include <stdexcept>

namespace rectlift {

namespace {

LaurentPoly highest_weight_monomial(int degree, const Weight& lambda) {
  if (lambda.rank() != degree - 1)
    throw std::invalid_argument("weight rank " + std::to_string(lambda.rank()) +
                                " does not match degree " + std::to_string(degree));
  if (!lambda.is_dominant())
    throw std::invalid_argument("Demazure character needs a dominant weight, got " +
                                to_string(lambda));
  std::vector<long long> eps = lambda.to_epsilon();
  std::vector<int> expo(eps.size());
  for (size_t k = 0; k < eps.size(); ++k) expo[k] = static_cast<int>(eps[k]);
  return LaurentPoly::monomial(std::move(expo));
}

}  // namespace

LaurentPoly demazure_character_from_word(int degree, std::span<const int> word,
                                         const Weight& lambda) {
  LaurentPoly f = highest_weight_monomial(degree, lambda);
  /* the rightmost letter is innermost, so it is applied first */
  for (size_t t = word.size(); t-- > 0;) f = demazure_operator(f, word[t]);
  return f;
}

LaurentPoly demazure_character(const Permutation& tau, const Weight& lambda) {
  std::vector<int> word = reduced_word(tau);
  return demazure_character_from_word(tau.degree(), word, lambda);
}

long long demazure_dim(const Permutation& tau, const Weight& lambda) {
  return demazure_character(tau, lambda).coeff_sum();
}

long long weyl_dim(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dim needs a dominant weight, got " + to_string(lambda));
  /* keep the running product reduced so nothing overflows */
  long long num = 1, den = 1;
  for (int i = 1; i <= lambda.rank(); ++i) {
    long long run = 0;
    for (int j = i; j <= lambda.rank(); ++j) {
      run += lambda.coeff(j);
      long long top = run + (j - i + 1);
      long long bot = j - i + 1;
      long long g = std::gcd(top, bot);
      top /= g;
      bot /= g;
      g = std::gcd(num, bot);
      num /= g;
      bot /= g;
      g = std::gcd(top, den);
      top /= g;
      den /= g;
      if (num > (1LL << 62) / top) throw std::overflow_error("weyl_dim overflow");
      num *= top;
      den *= bot;
    }
  }
  if (den != 1) throw std::logic_error("weyl_dim: product did not reduce to an integer");
  return num;
}

}  // namespace rectlift
