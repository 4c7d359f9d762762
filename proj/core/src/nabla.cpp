#include "rectlift/nabla.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectlift {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("nabla_n needs n >= 1");
}

}  // namespace

RootSubset nabla(int n) {
  check_n(n);
  RootSubset out(2 * n - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = n; j <= 2 * n - 1 && j - i <= n - 1; ++j) out.insert(PosRoot(i, j, 2 * n - 1));
  return out;
}

std::pair<int, int> nabla_coords(int n, const PosRoot& a) {
  check_n(n);
  int k = n - a.i + 1, h = a.j - n + 1;
  if (a.rank != 2 * n - 1 || k < 1 || h < 1 || k + h > n + 1)
    throw std::invalid_argument(to_string(a) + " is not in nabla_" + std::to_string(n));
  return {k, h};
}

PosRoot nabla_cell(int n, int k, int h) {
  check_n(n);
  if (k < 1 || h < 1 || k + h > n + 1)
    throw std::invalid_argument("cell (" + std::to_string(k) + "," + std::to_string(h) +
                                ") outside nabla_" + std::to_string(n));
  return PosRoot(n - k + 1, n + h - 1, 2 * n - 1);
}

bool is_nabla_ideal(int n, const RootSubset& a) {
  check_n(n);
  if (a.rank() != 2 * n - 1) return false;
  RootSubset region = nabla(n);
  for (const PosRoot& x : a) {
    if (!region.contains(x)) return false;
    /* downward closure: the two covers below x must already be members */
    if (x.i < n && !a.contains(PosRoot(x.i + 1, x.j, x.rank))) return false;
    if (x.j > n && !a.contains(PosRoot(x.i, x.j - 1, x.rank))) return false;
  }
  return true;
}

NablaIdeal::NablaIdeal(int n, RootSubset members) : n_(n), members_(std::move(members)) {
  check_n(n);
  if (members_.rank() != 2 * n - 1)
    throw std::invalid_argument("ideal rank " + std::to_string(members_.rank()) +
                                ", expected " + std::to_string(2 * n - 1));
  RootSubset region = nabla(n);
  for (const PosRoot& x : members_) {
    if (!region.contains(x))
      throw std::invalid_argument(to_string(x) + " is not in nabla_" + std::to_string(n));
    if (x.i < n && !members_.contains(PosRoot(x.i + 1, x.j, x.rank)))
      throw std::invalid_argument("not downward closed: " + to_string(x) + " present without " +
                                  to_string(PosRoot(x.i + 1, x.j, x.rank)));
    if (x.j > n && !members_.contains(PosRoot(x.i, x.j - 1, x.rank)))
      throw std::invalid_argument("not downward closed: " + to_string(x) + " present without " +
                                  to_string(PosRoot(x.i, x.j - 1, x.rank)));
  }
  col_.assign(static_cast<size_t>(n), 0);
  row_.assign(static_cast<size_t>(n), 0);
  for (const PosRoot& x : members_) {
    auto [k, h] = nabla_coords(n, x);
    col_[static_cast<size_t>(k - 1)] = std::max(col_[static_cast<size_t>(k - 1)], h);
    row_[static_cast<size_t>(h - 1)] = std::max(row_[static_cast<size_t>(h - 1)], k);
  }
}

NablaIdeal NablaIdeal::full(int n) { return NablaIdeal(n, nabla(n)); }

Permutation reflection_product(int degree, std::span<const PosRoot> betas) {
  Permutation p = Permutation::identity(degree);
  for (const PosRoot& b : betas) {
    if (b.rank != degree - 1)
      throw std::invalid_argument("reflection of " + to_string(b) + " does not live in degree " +
                                  std::to_string(degree));
    p = p * Permutation::transposition(degree, b.i, b.j + 1);
  }
  return p;
}

Permutation tau_A(const NablaIdeal& a) {
  std::vector<PosRoot> order = a.members().members();
  std::stable_sort(order.begin(), order.end(), [](const PosRoot& x, const PosRoot& y) {
    if (x.height() != y.height()) return x.height() > y.height();
    return x < y;
  });
  return reflection_product(2 * a.n(), order);
}

std::optional<SignedRoot> tau_inv_on_nabla(const NablaIdeal& a, const PosRoot& x) {
  int n = a.n();
  auto [k, h] = nabla_coords(n, x);
  int ck = a.col_stats()[static_cast<size_t>(k - 1)];
  int rh = a.row_stats()[static_cast<size_t>(h - 1)];
  if (a.contains(x)) {
    /* lands on a negative root */
    return SignedRoot{PosRoot(n + h - rh, n - k + ck, 2 * n - 1), true};
  }
  int p = n - k + ck + 1, q = n + h - rh - 1;
  if (p == q + 1) return std::nullopt;  // the degenerate zero outcome
  if (p > q + 1)
    throw std::logic_error("tau_inv_on_nabla: empty interval (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
  return SignedRoot{PosRoot(p, q, 2 * n - 1), false};
}

PosRoot i_map(const NablaIdeal& a, const PosRoot& x) {
  if (!a.contains(x))
    throw std::invalid_argument("i_map argument " + to_string(x) + " is not in the ideal");
  auto img = tau_inv_on_nabla(a, x);
  if (!img || !img->negative)
    throw std::logic_error("i_map: member image should be a negative root");
  return img->root;
}

Weight weight_mu(const NablaIdeal& a, const std::map<PosRoot, long long>& f) {
  int n = a.n();
  int rank = 2 * n - 1;

  if (static_cast<int>(f.size()) != a.size())
    throw std::invalid_argument("f must be defined exactly on the ideal members");
  for (const auto& [x, v] : f) {
    if (!a.contains(x))
      throw std::invalid_argument("f is defined at " + to_string(x) + " outside the ideal");
    if (v > 0)
      throw std::invalid_argument("hypothesis (i) fails: f(" + to_string(x) + ") = " +
                                  std::to_string(v) + " > 0");
  }

  const auto& mem = a.members().members();
  for (size_t s = 0; s < mem.size(); ++s) {
    for (size_t t = s + 1; t < mem.size(); ++t) {
      const PosRoot &x = mem[s], &y = mem[t];
      if (leq(x, y) && f.at(x) > f.at(y))
        throw std::invalid_argument("hypothesis (ii) fails: f not monotone on " + to_string(x) +
                                    " <= " + to_string(y));
      if (leq(y, x) && f.at(y) > f.at(x))
        throw std::invalid_argument("hypothesis (ii) fails: f not monotone on " + to_string(y) +
                                    " <= " + to_string(x));
      /* members share the column through n, so the meet always exists */
      PosRoot mt = *meet(x, y);
      if (!a.contains(mt)) throw std::logic_error("ideal not meet-closed at " + to_string(mt));
      long long defect = f.at(x) + f.at(y) - f.at(mt);
      PosRoot jn = join(x, y);
      if (a.contains(jn)) {
        if (f.at(jn) != defect)
          throw std::invalid_argument("hypothesis (iii) fails: f not modular on (" + to_string(x) +
                                      ", " + to_string(y) + ")");
      } else if (defect < 0) {
        throw std::invalid_argument("hypothesis (iv) fails: negative defect on (" + to_string(x) +
                                    ", " + to_string(y) + ") with join outside the ideal");
      }
    }
  }

  std::vector<long long> c(static_cast<size_t>(rank), 0);
  if (!a.members().empty()) {
    auto fat = [&](int i, int j) { return f.at(PosRoot(i, j, rank)); };
    /* h: least row start a[h,n] in A; k: largest column end a[n,k] in A */
    int h = n, k = n;
    while (h > 1 && a.contains(PosRoot(h - 1, n, rank))) --h;
    while (k < rank && a.contains(PosRoot(n, k + 1, rank))) ++k;

    c[static_cast<size_t>(n - 1)] = fat(n, n);
    for (int t = h; t <= n - 1; ++t) c[static_cast<size_t>(t - 1)] = fat(t, n) - fat(t + 1, n);
    for (int t = n + 1; t <= k; ++t) c[static_cast<size_t>(t - 1)] = fat(n, t) - fat(n, t - 1);
    if (h - 1 >= 1) c[static_cast<size_t>(h - 2)] = -fat(h, n);
    if (k + 1 <= rank) c[static_cast<size_t>(k)] = -fat(n, k);
  }
  Weight mu{std::move(c)};

  /* the construction promises these; fail loudly if the input sneaks past
   * the hypothesis checks in a way that breaks them */
  for (const PosRoot& b : positive_roots(rank)) {
    long long p = mu.pairing(b);
    if (a.contains(b)) {
      if (p != f.at(b)) throw std::logic_error("weight_mu: <mu, " + to_string(b) + "> != f");
    } else if (p < 0) {
      throw std::logic_error("weight_mu: <mu, " + to_string(b) + "> < 0 off the ideal");
    }
  }
  if (!mu.acted_by(tau_A(a).inverse()).is_dominant())
    throw std::logic_error("weight_mu: tau_A^{-1} mu is not dominant");
  return mu;
}

}  // namespace rectlift
