#include "rectlift/roots.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rectlift {

namespace {

void require_same_rank(const PosRoot& a, const PosRoot& b) {
  if (a.rank != b.rank)
    throw std::invalid_argument("rank mismatch: " + to_string(a) + " lives in A_" +
                                std::to_string(a.rank) + ", " + to_string(b) + " in A_" +
                                std::to_string(b.rank));
}

}  // namespace

PosRoot::PosRoot(int i_, int j_, int rank_) : i(i_), j(j_), rank(rank_) {
  if (rank < 1) throw std::invalid_argument("root system rank must be >= 1");
  if (i < 1 || i > j || j > rank)
    throw std::invalid_argument("bad root indices a[" + std::to_string(i_) + "," +
                                std::to_string(j_) + "] for rank " + std::to_string(rank_));
}

bool leq(const PosRoot& a, const PosRoot& b) {
  require_same_rank(a, b);
  return b.i <= a.i && a.j <= b.j;
}

PosRoot join(const PosRoot& a, const PosRoot& b) {
  require_same_rank(a, b);
  return PosRoot(std::min(a.i, b.i), std::max(a.j, b.j), a.rank);
}

std::optional<PosRoot> meet(const PosRoot& a, const PosRoot& b) {
  require_same_rank(a, b);
  int lo = std::max(a.i, b.i), hi = std::min(a.j, b.j);
  if (lo > hi) return std::nullopt;
  return PosRoot(lo, hi, a.rank);
}

bool supports_connected(const PosRoot& a, const PosRoot& b) {
  require_same_rank(a, b);
  return std::max(a.i, b.i) <= std::min(a.j, b.j) + 1;
}

PosRoot highest_root(int rank) { return PosRoot(1, rank, rank); }

std::vector<PosRoot> positive_roots(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  std::vector<PosRoot> out;
  out.reserve(static_cast<size_t>(rank) * (rank + 1) / 2);
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) out.emplace_back(i, j, rank);
  return out;
}

std::string to_string(const PosRoot& a) {
  if (a.i == a.j) return "a[" + std::to_string(a.i) + "]";
  return "a[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
}

std::string to_string(const SignedRoot& a) {
  return a.negative ? "-" + to_string(a.root) : to_string(a.root);
}

PosRoot parse_root(std::string_view text, int rank) {
  auto fail = [&] {
    throw std::invalid_argument("bad root '" + std::string(text) + "', expected a[i,j] or a[i]");
  };
  if (text.size() < 4 || text[0] != 'a' || text[1] != '[' || text.back() != ']') fail();
  std::string_view body = text.substr(2, text.size() - 3);
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail();
    return v;
  };
  size_t comma = body.find(',');
  int i, j;
  if (comma == std::string_view::npos) {
    i = j = parse_int(body);
  } else {
    i = parse_int(body.substr(0, comma));
    j = parse_int(body.substr(comma + 1));
  }
  if (i < 1 || i > j || j > rank)
    throw std::invalid_argument("root '" + std::string(text) + "' out of range for rank " +
                                std::to_string(rank));
  return PosRoot(i, j, rank);
}

}  // namespace rectlift
