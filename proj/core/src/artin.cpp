#include <cstdlib>
#include <stdexcept>

#include "b3cert/free_group.hpp"

namespace b3cert {

namespace {

FreeAutomorphism generator_action(int letter, int n) {
  FreeAutomorphism phi;
  for (int j = 1; j <= n; ++j) phi.push_back(FreeWord::generator(n, j));
  const int i = std::abs(letter);
  const FreeWord xi = FreeWord::generator(n, i), xj = FreeWord::generator(n, i + 1);
  if (letter > 0) {
    phi[i - 1] = xi * xj * xi.inverse();
    phi[i] = xi;
  } else {
    phi[i - 1] = xj;
    phi[i] = xj.inverse() * xi * xj;
  }
  return phi;
}

}  // namespace

FreeWord apply(const FreeAutomorphism& phi, const FreeWord& w) { return substitute(w, phi); }

FreeAutomorphism artin_action(const BraidWord& b) {
  const int n = b.strands;
  FreeAutomorphism current;
  for (int j = 1; j <= n; ++j) current.push_back(FreeWord::generator(n, j));
  for (int x : b.letters) {
    const FreeAutomorphism g = generator_action(x, n);
    FreeAutomorphism next;
    next.reserve(g.size());
    for (const auto& img : g) next.push_back(substitute(img, current));
    current = std::move(next);
  }
  return current;
}

std::vector<FreeWord> longitudes(const BraidWord& b) {
  if (!is_pure(b)) throw std::invalid_argument("longitudes need a pure braid");
  const FreeAutomorphism phi = artin_action(b);
  const int n = b.strands;
  std::vector<FreeWord> out;
  for (int i = 1; i <= n; ++i) {
    const FreeWord& w = phi[static_cast<std::size_t>(i - 1)];
    const std::size_t len = w.letters.size();
    if (len % 2 == 0 || w.letters[len / 2] != i) throw std::logic_error("Artin image is not a conjugate of x_i");
    const FreeWord p(n, std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<long>(len / 2)));
    if (p * FreeWord::generator(n, i) * p.inverse() != w) throw std::logic_error("Artin image is not a conjugate of x_i");
    FreeWord l = p.inverse();
    l = FreeWord::generator(n, i).pow(-l.exponent_sum(i)) * l;
    out.push_back(l);
  }
  return out;
}

}  // namespace b3cert
