#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "b3cert/free_group.hpp"

namespace b3cert {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Magnus coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Magnus coefficient overflow");
  return r;
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int degree) : rank_(rank), degree_(degree) {
  if (rank < 1 || degree < 0) throw std::invalid_argument("bad Magnus series shape");
  if (static_cast<double>(ipow(static_cast<std::size_t>(rank), degree)) > 5e7)
    throw std::invalid_argument("Magnus truncation too large for dense storage");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
  for (int d = 0; d <= degree; ++d) coeffs_[static_cast<std::size_t>(d)].assign(ipow(static_cast<std::size_t>(rank), d), 0);
  coeffs_[0][0] = 1;
}

std::int64_t MagnusSeries::coefficient(const std::vector<int>& monomial) const {
  if (static_cast<int>(monomial.size()) > degree_) throw std::out_of_range("monomial beyond truncation degree");
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 1 || g > rank_) throw std::out_of_range("monomial letter out of range");
    idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g - 1);
  }
  return coeffs_[monomial.size()][idx];
}

void MagnusSeries::multiply_generator(int letter) {
  const std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
  const std::size_t r = static_cast<std::size_t>(rank_);
  if (g >= r) throw std::out_of_range("generator out of range");
  // x = 1 + X, x^-1 = 1 - X + X^2 - ...; new_n = sum_j c_j old_{n-j} X^j.
  for (int n = degree_; n >= 1; --n) {
    auto& target = coeffs_[static_cast<std::size_t>(n)];
    const int max_j = letter > 0 ? 1 : n;
    for (int j = 1; j <= max_j; ++j) {
      const auto& src = coeffs_[static_cast<std::size_t>(n - j)];
      const std::int64_t sign = (letter < 0 && j % 2 == 1) ? -1 : 1;
      // Appending X_g^j to a monomial of length n-j.
      std::size_t tail = 0;
      for (int t = 0; t < j; ++t) tail = tail * r + g;
      const std::size_t shift = ipow(r, j);
      for (std::size_t k = 0; k < src.size(); ++k) {
        if (src[k] == 0) continue;
        std::size_t idx = k * shift + tail;
        target[idx] = checked_add(target[idx], sign * src[k]);
      }
    }
  }
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& rhs) const {
  if (rank_ != rhs.rank_) throw std::invalid_argument("Magnus ranks differ");
  const int d = std::min(degree_, rhs.degree_);
  MagnusSeries out(rank_, d);
  out.coeffs_[0][0] = 0;
  const std::size_t r = static_cast<std::size_t>(rank_);
  for (int n = 0; n <= d; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto& a = coeffs_[static_cast<std::size_t>(i)];
      const auto& b = rhs.coeffs_[static_cast<std::size_t>(n - i)];
      const std::size_t shift = ipow(r, n - i);
      auto& target = out.coeffs_[static_cast<std::size_t>(n)];
      for (std::size_t ka = 0; ka < a.size(); ++ka) {
        if (a[ka] == 0) continue;
        for (std::size_t kb = 0; kb < b.size(); ++kb) {
          if (b[kb] == 0) continue;
          std::size_t idx = ka * shift + kb;
          target[idx] = checked_add(target[idx], checked_mul(a[ka], b[kb]));
        }
      }
    }
  return out;
}

MagnusSeries MagnusSeries::of_word(const FreeWord& w, int degree) {
  MagnusSeries s(w.rank, degree);
  for (int x : free_reduce(w).letters) s.multiply_generator(x);
  return s;
}

std::optional<int> magnus_depth(const FreeWord& w, int dmax) {
  if (dmax < 1) throw std::invalid_argument("dmax must be at least 1");
  const MagnusSeries s = MagnusSeries::of_word(w, dmax);
  for (int d = 1; d <= dmax; ++d)
    for (std::int64_t c : s.homogeneous(d))
      if (c != 0) return d;
  return std::nullopt;
}

}  // namespace b3cert
