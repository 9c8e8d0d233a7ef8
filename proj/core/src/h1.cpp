#include <cstdlib>
#include <stdexcept>

#include "b3cert/free_group.hpp"

namespace b3cert {

namespace {

using Row = std::vector<Integer>;

long mod(long x, long m) { return ((x % m) + m) % m; }

// Row-style Hermite normal form; returns the nonzero rows with positive pivots.
std::vector<Row> hermite_rows(std::vector<Row> rows, std::size_t cols, std::vector<std::size_t>& pivots) {
  std::size_t top = 0;
  pivots.clear();
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    // Euclid on column c among rows top..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        Integer qt;
        mpz_fdiv_q(qt.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= qt * rows[top][k];
        if (sgn(rows[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[top][c]) == 0) continue;
    if (sgn(rows[top][c]) < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Integer qt;
      mpz_fdiv_q(qt.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (sgn(qt) != 0)
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= qt * rows[top][k];
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return rows;
}

}  // namespace

std::vector<Integer> h1_rewrite(const FreeWord& w, long D, long x0, long y0) {
  if (D < 2) throw std::invalid_argument("h1 needs D >= 2");
  const std::size_t n = static_cast<std::size_t>((D - 1) * (D - 1));
  std::vector<Integer> v(n, Integer(0));
  auto idx = [D](long i, long j) { return static_cast<std::size_t>((i - 1) * (D - 1) + (j - 1)); };
  // Schreier generator at coset (x, y): c_{x,y} - c_{x+1,y}, with c_{0,.} = c_{D,.} = 0.
  auto add_s = [&](long x, long y, long sign) {
    if (y == 0) return;
    if (x >= 1 && x <= D - 1) v[idx(x, y)] += sign;
    if (x + 1 >= 1 && x + 1 <= D - 1) v[idx(x + 1, y)] -= sign;
  };
  long x = mod(x0, D), y = mod(y0, D);
  for (int letter : w.letters) {
    switch (letter) {
      case 1: add_s(x, y, 1); x = mod(x + 1, D); break;
      case -1: x = mod(x - 1, D); add_s(x, y, -1); break;
      case 2: y = mod(y + 1, D); break;
      case -2: y = mod(y - 1, D); break;
      default: throw std::invalid_argument("h1 words use only a and b");
    }
  }
  if (x != mod(x0, D) || y != mod(y0, D))
    throw std::invalid_argument("element is not in the commutator subgroup (exponent sums must vanish mod D)");
  return v;
}

AbelianCert h1_cert(long D, const std::vector<Integer>& class_vector) {
  if (D < 2) throw std::invalid_argument("h1 needs D >= 2");
  AbelianCert cert;
  cert.D = D;
  cert.generator_count = static_cast<std::size_t>((D - 1) * (D - 1));
  if (class_vector.size() != cert.generator_count) throw std::invalid_argument("class vector has the wrong length");
  cert.class_vector = class_vector;
  const FreeWord relator = FreeWord(2, {1, 2}).pow(D);
  cert.base_relation = h1_rewrite(relator, D);
  std::vector<Row> rels;
  for (long i = 0; i < D; ++i)
    for (long j = 0; j < D; ++j) rels.push_back(h1_rewrite(relator, D, i, j));
  std::vector<std::size_t> pivots;
  const std::vector<Row> basis = hermite_rows(rels, cert.generator_count, pivots);
  cert.relation_rank = basis.size();

  // Coefficients of the class on the echelon basis, solved over Q by forward substitution.
  std::vector<Rational> rest(class_vector.begin(), class_vector.end());
  std::vector<Rational> coeff(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::size_t c = pivots[r];
    coeff[r] = rest[c] / Rational(basis[r][c]);
    if (sgn(coeff[r]) == 0) continue;
    for (std::size_t k = c; k < cert.generator_count; ++k) rest[k] -= coeff[r] * basis[r][k];
  }
  for (const auto& x : rest) {
    if (sgn(x) != 0) {
      cert.infinite = true;
      return cert;
    }
  }
  Integer t = 1;
  for (const auto& c : coeff) {
    const Integer den = c.get_den();
    mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
  }
  cert.order = t;
  return cert;
}

AbelianCert h1_cert(long D, const FreeWord& element) {
  return h1_cert(D, h1_rewrite(free_reduce(element), D));
}

}  // namespace b3cert
