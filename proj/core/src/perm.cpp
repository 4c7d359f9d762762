#include "rectlift/perm.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rectlift {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  if (oneline_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(oneline_.size() + 1, 0);
  for (int v : oneline_) {
    if (v < 1 || v > degree() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("one-line notation is not a permutation of 1.." +
                                  std::to_string(degree()));
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> v(static_cast<size_t>(degree));
  for (int x = 1; x <= degree; ++x) v[static_cast<size_t>(x - 1)] = x;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int degree, int i) {
  if (i < 1 || i >= degree)
    throw std::invalid_argument("s" + std::to_string(i) + " does not exist in degree " +
                                std::to_string(degree));
  Permutation p = identity(degree);
  std::swap(p.oneline_[static_cast<size_t>(i - 1)], p.oneline_[static_cast<size_t>(i)]);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw std::invalid_argument("bad transposition");
  Permutation p = identity(degree);
  std::swap(p.oneline_[static_cast<size_t>(a - 1)], p.oneline_[static_cast<size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_word(int rank, std::span<const int> word) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  Permutation p = identity(rank + 1);
  /* left-to-right right-multiplication: the rightmost letter acts first */
  for (int i : word) {
    if (i < 1 || i > rank)
      throw std::invalid_argument("word letter s" + std::to_string(i) + " out of range for rank " +
                                  std::to_string(rank));
    std::swap(p.oneline_[static_cast<size_t>(i - 1)], p.oneline_[static_cast<size_t>(i)]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(oneline_.size());
  for (int x = 1; x <= degree(); ++x) v[static_cast<size_t>(oneline_[static_cast<size_t>(x - 1)] - 1)] = x;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> v(oneline_.size());
  for (int x = 1; x <= degree(); ++x) v[static_cast<size_t>(x - 1)] = (*this)(q(x));
  return Permutation(std::move(v));
}

long long Permutation::length() const {
  long long inv = 0;
  for (int i = 1; i < degree(); ++i)
    for (int j = i + 1; j <= degree(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out;
  if (p.degree() <= 9) {
    for (int v : p.oneline()) out += static_cast<char>('0' + v);
  } else {
    for (size_t t = 0; t < p.oneline().size(); ++t) {
      if (t) out += ',';
      out += std::to_string(p.oneline()[t]);
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("bad permutation '" + std::string(text) +
                                "': expected one-line digits, comma-separated values, or a word "
                                "like \"s1 s2 s1\"");
  };
  if (text.empty()) fail();

  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail();
    return v;
  };

  if (text.find('s') != std::string_view::npos) {
    /* word form: whitespace-separated s<k> letters */
    std::vector<int> word;
    size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos >= text.size()) break;
      size_t end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      if (tok.size() < 2 || tok[0] != 's') fail();
      word.push_back(parse_int(tok.substr(1)));
      pos = end;
    }
    if (word.empty()) fail();
    int rank = *std::max_element(word.begin(), word.end());
    return Permutation::from_word(rank, word);
  }

  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      v.push_back(parse_int(text.substr(pos, end - pos)));
      pos = end + 1;
      if (end == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') fail();
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

RootSubset inversion_set(const Permutation& p) {
  int rank = p.degree() - 1;
  RootSubset out(rank);
  for (int i = 1; i < p.degree(); ++i)
    for (int j = i + 1; j <= p.degree(); ++j)
      if (p(i) > p(j)) out.insert(PosRoot(i, j - 1, rank));
  return out;
}

SignedRoot act_on_root(const Permutation& p, const SignedRoot& a) {
  if (a.root.rank != p.degree() - 1)
    throw std::invalid_argument("root " + to_string(a.root) + " does not live in the rank-" +
                                std::to_string(p.degree() - 1) + " system of this permutation");
  /* a[i,j] = eps_i - eps_{j+1}; the permutation moves eps_k to eps_{p(k)} */
  int x = p(a.root.i), y = p(a.root.j + 1);
  bool neg = a.negative;
  if (x > y) {
    std::swap(x, y);
    neg = !neg;
  }
  return SignedRoot{PosRoot(x, y - 1, a.root.rank), neg};
}

namespace {

/* order-isomorphism of (vals..., last) with the pattern */
bool extends_to_pattern(std::span<const int> prefix, int last, std::span<const int> pat) {
  int k = static_cast<int>(pat.size());
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  auto consistent = [&](int cand, int slot) {
    for (int s = 0; s < slot; ++s)
      if ((pat[static_cast<size_t>(s)] < pat[static_cast<size_t>(slot)]) != (chosen[static_cast<size_t>(s)] < cand)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int slot, size_t from) -> bool {
    if (slot == k - 1) return consistent(last, slot);
    for (size_t t = from; t < prefix.size(); ++t) {
      if (!consistent(prefix[t], slot)) continue;
      chosen.push_back(prefix[t]);
      if (self(self, slot + 1, t + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0, 0);
}

const std::vector<std::vector<int>>& forbidden_patterns(PermClass cls) {
  static const std::vector<std::vector<int>> rect = {
      {2, 4, 1, 3}, {2, 4, 3, 1}, {4, 2, 1, 3}, {4, 2, 3, 1}};
  static const std::vector<std::vector<int>> tri = {{2, 4, 1, 3}, {4, 2, 3, 1}};
  return cls == PermClass::rectangular ? rect : tri;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& q) {
  if (q.degree() > p.degree()) return false;
  const auto& vals = p.oneline();
  const auto& pat = q.oneline();
  /* try every position for the final pattern slot */
  for (size_t last = static_cast<size_t>(q.degree()) - 1; last < vals.size(); ++last)
    if (extends_to_pattern(std::span(vals).first(last), vals[last], pat)) return true;
  return false;
}

namespace {

bool avoids_all(const Permutation& p, PermClass cls) {
  for (const auto& pat : forbidden_patterns(cls))
    if (contains_pattern(p, Permutation(pat))) return false;
  return true;
}

/* direct value criterion: over positions w < x < y < z,
 * rectangular:  p(w)>p(y) and p(x)>p(z)  <=>  p(w)>p(z) and p(x)>p(y)
 * triangular:   p(w)>p(y) and p(x)>p(z)  =>   p(w)>p(z) and p(x)>p(y)
 * (the defining inequalities allow x = y, but that case is vacuous) */
bool rectangular_by_inequalities(const Permutation& p) {
  int m = p.degree();
  for (int w = 1; w <= m - 3; ++w)
    for (int x = w + 1; x <= m - 2; ++x)
      for (int y = x + 1; y <= m - 1; ++y)
        for (int z = y + 1; z <= m; ++z)
          if ((p(w) > p(y) && p(x) > p(z)) != (p(w) > p(z) && p(x) > p(y))) return false;
  return true;
}

bool triangular_by_inequalities(const Permutation& p) {
  int m = p.degree();
  for (int w = 1; w <= m - 3; ++w)
    for (int x = w + 1; x <= m - 2; ++x)
      for (int y = x + 1; y <= m - 1; ++y)
        for (int z = y + 1; z <= m; ++z)
          if ((p(w) > p(y) && p(x) > p(z)) && !(p(w) > p(z) && p(x) > p(y))) return false;
  return true;
}

}  // namespace

bool is_rectangular(const Permutation& p) {
  bool by_patterns = avoids_all(p, PermClass::rectangular);
  if (by_patterns != rectangular_by_inequalities(p))
    throw std::logic_error("rectangularity tests disagree on " + to_string(p));
  return by_patterns;
}

bool is_triangular(const Permutation& p) {
  bool by_patterns = avoids_all(p, PermClass::triangular);
  if (by_patterns != triangular_by_inequalities(p))
    throw std::logic_error("triangularity tests disagree on " + to_string(p));
  return by_patterns;
}

Permutation involution_i(const Permutation& p) {
  std::vector<int> v = p.inverse().oneline();
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> word;
  std::vector<int> v = p.oneline();
  for (;;) {
    int i = 0;
    for (int t = 1; t < p.degree(); ++t)
      if (v[static_cast<size_t>(t - 1)] > v[static_cast<size_t>(t)]) {
        i = t;
        break;
      }
    if (i == 0) break;
    word.push_back(i);
    std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

void enumerate_rec(int n, PermClass cls, std::vector<int>& prefix, std::vector<char>& used,
                   std::vector<Permutation>* out, long long* count) {
  if (static_cast<int>(prefix.size()) == n) {
    if (out) out->emplace_back(prefix);
    ++*count;
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    bool bad = false;
    for (const auto& pat : forbidden_patterns(cls))
      if (extends_to_pattern(prefix, v, pat)) {
        bad = true;
        break;
      }
    if (bad) continue;
    used[static_cast<size_t>(v)] = 1;
    prefix.push_back(v);
    enumerate_rec(n, cls, prefix, used, out, count);
    prefix.pop_back();
    used[static_cast<size_t>(v)] = 0;
  }
}

void check_census_args(int n, int bound) {
  if (n < 1) throw std::invalid_argument("census degree must be >= 1");
  if (n > bound)
    throw std::invalid_argument("census degree " + std::to_string(n) +
                                " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::vector<Permutation> enumerate_class(int n, PermClass cls, int bound) {
  check_census_args(n, bound);
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  long long count = 0;
  enumerate_rec(n, cls, prefix, used, &out, &count);
  return out;
}

long long census(int n, PermClass cls, int bound) {
  check_census_args(n, bound);
  std::vector<int> prefix;
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  long long count = 0;
  enumerate_rec(n, cls, prefix, used, nullptr, &count);
  return count;
}

}  // namespace rectlift
