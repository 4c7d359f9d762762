#include "rectlift/weight.hpp"

#include <charconv>
#include <stdexcept>

namespace rectlift {

Weight::Weight(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("weight needs rank >= 1");
}

Weight Weight::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("weight needs rank >= 1");
  return Weight(std::vector<long long>(static_cast<size_t>(rank), 0));
}

Weight Weight::fundamental(int rank, int r) {
  Weight w = zero(rank);
  if (r < 1 || r > rank)
    throw std::invalid_argument("fundamental weight index " + std::to_string(r) +
                                " out of range for rank " + std::to_string(rank));
  w.coeffs_[static_cast<size_t>(r - 1)] = 1;
  return w;
}

bool Weight::is_dominant() const {
  for (long long c : coeffs_)
    if (c < 0) return false;
  return true;
}

bool Weight::is_zero() const {
  for (long long c : coeffs_)
    if (c != 0) return false;
  return true;
}

long long Weight::pairing(const PosRoot& a) const {
  if (a.rank != rank())
    throw std::invalid_argument("pairing of a rank-" + std::to_string(rank()) +
                                " weight with " + to_string(a) + " of rank " +
                                std::to_string(a.rank));
  long long s = 0;
  for (int t = a.i; t <= a.j; ++t) s += coeff(t);
  return s;
}

std::vector<long long> Weight::to_epsilon() const {
  std::vector<long long> eps(static_cast<size_t>(rank()) + 1, 0);
  for (int k = rank(); k >= 1; --k) eps[static_cast<size_t>(k - 1)] = eps[static_cast<size_t>(k)] + coeff(k);
  return eps;
}

Weight Weight::from_epsilon(std::span<const long long> eps) {
  if (eps.size() < 2) throw std::invalid_argument("epsilon vector needs degree >= 2");
  std::vector<long long> c(eps.size() - 1);
  for (size_t t = 0; t + 1 < eps.size(); ++t) c[t] = eps[t] - eps[t + 1];
  return Weight(std::move(c));
}

Weight Weight::acted_by(const Permutation& w) const {
  if (w.degree() != rank() + 1)
    throw std::invalid_argument("permutation degree " + std::to_string(w.degree()) +
                                " does not act on rank-" + std::to_string(rank()) + " weights");
  std::vector<long long> eps = to_epsilon();
  std::vector<long long> out(eps.size());
  for (int k = 1; k <= w.degree(); ++k) out[static_cast<size_t>(w(k) - 1)] = eps[static_cast<size_t>(k - 1)];
  return from_epsilon(out);
}

Weight Weight::operator+(const Weight& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in weight sum");
  std::vector<long long> c = coeffs_;
  for (size_t t = 0; t < c.size(); ++t) c[t] += o.coeffs_[t];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in weight difference");
  std::vector<long long> c = coeffs_;
  for (size_t t = 0; t < c.size(); ++t) c[t] -= o.coeffs_[t];
  return Weight(std::move(c));
}

std::string to_string(const Weight& w) {
  std::string out;
  for (size_t t = 0; t < w.coeffs().size(); ++t) {
    if (t) out += ',';
    out += std::to_string(w.coeffs()[t]);
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  std::vector<long long> c;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("bad weight '" + std::string(text) +
                                  "': expected comma-separated integers");
    c.push_back(v);
    pos = end + 1;
    if (end == text.size()) break;
  }
  return Weight(std::move(c));
}

}  // namespace rectlift
