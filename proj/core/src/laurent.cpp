#include "rectlift/laurent.hpp"

#include <stdexcept>
#include <utility>

namespace rectlift {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial needs >= 1 variable");
}

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, long long coeff) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

long long LaurentPoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(std::vector<int> expo, long long c) {
  if (static_cast<int>(expo.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(expo), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

long long LaurentPoly::coeff_sum() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::with_swapped(int a, int b) const {
  if (a < 1 || b < 1 || a > nvars_ || b > nvars_) throw std::invalid_argument("bad variable index");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    std::swap(e2[static_cast<size_t>(a - 1)], e2[static_cast<size_t>(b - 1)]);
    out.add_term(std::move(e2), c);
  }
  return out;
}

LaurentPoly demazure_operator(const LaurentPoly& f, int i) {
  if (i < 1 || i >= f.nvars())
    throw std::invalid_argument("pi_" + std::to_string(i) + " undefined with " +
                                std::to_string(f.nvars()) + " variables");
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int a = e[static_cast<size_t>(i - 1)], b = e[static_cast<size_t>(i)];
    if (a >= b) {
      std::vector<int> e2 = e;
      for (int t = b; t <= a; ++t) {
        e2[static_cast<size_t>(i - 1)] = t;
        e2[static_cast<size_t>(i)] = a + b - t;
        out.add_term(e2, c);
      }
    } else if (b > a + 1) {
      std::vector<int> e2 = e;
      for (int t = a + 1; t <= b - 1; ++t) {
        e2[static_cast<size_t>(i - 1)] = t;
        e2[static_cast<size_t>(i)] = a + b - t;
        out.add_term(e2, -c);
      }
    }
    /* b == a + 1 contributes nothing */
  }
  return out;
}

}  // namespace rectlift
