#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "b3cert/braid.hpp"
#include "b3cert/cyclotomic.hpp"
#include "b3cert/free_word.hpp"

namespace b3cert {

/// Normal form in Z/k * Z/k on generators a (0) and b (1).
struct FreeProductWord {
  struct Syllable {
    int gen;  // 0 = a, 1 = b
    long exp;  // 1..k-1
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  long modulus = 2;
  std::vector<Syllable> syllables;

  /// Image of a word over a (letter 1) and b (letter 2).
  static FreeProductWord from_word(const FreeWord& w, long k);

  bool is_trivial() const { return syllables.empty(); }
  FreeProductWord inverse() const;
  std::string to_string() const;

  friend FreeProductWord operator*(const FreeProductWord& u, const FreeProductWord& v);
  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;
};

/// Image of (ab)^k in Z/k * Z/k; nontrivial means (ab)^k is not in the normal closure of a^k, b^k.
FreeProductWord squier_witness(long k);

/// (ab)^D a^-D b^-D against the product [a,b][b,a^2][a^2,b^2] ... [b^{D-1},a^D][a^D,b^D].
struct CommutatorIdentityReport {
  long D = 0;
  bool holds = false;
  std::string convention;  // "uvu^-1v^-1", "u^-1v^-1uv" or "none"
  std::vector<std::pair<FreeWord, FreeWord>> factors;
  FreeWord lhs;
  FreeWord rhs;
};
CommutatorIdentityReport commutator_identity_check(long D);

/// Class of an element of the commutator subgroup of Delta(D,D,D) in its abelianization,
/// on the basis c_ij = [a^i, b^j], 1 <= i, j <= D-1.
struct AbelianCert {
  long D = 0;
  std::size_t generator_count = 0;
  std::vector<Integer> class_vector;   // indexed (i-1)(D-1) + (j-1)
  std::vector<Integer> base_relation;  // rewrite of (ab)^D at the trivial coset
  std::size_t relation_rank = 0;       // rank of all coset conjugates of (ab)^D
  bool infinite = false;
  std::optional<Integer> order;        // set when finite
};

/// Coordinates over c_ij of a word in a, b whose exponent sums vanish mod D.
std::vector<Integer> h1_rewrite(const FreeWord& w, long D, long x0 = 0, long y0 = 0);
AbelianCert h1_cert(long D, const FreeWord& element);
AbelianCert h1_cert(long D, const std::vector<Integer>& class_vector);

/// Automorphism of the free group of rank n as the images of x_1..x_n.
using FreeAutomorphism = std::vector<FreeWord>;

/// g_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; composed as phi_{uv} = phi_u o phi_v.
FreeAutomorphism artin_action(const BraidWord& b);
FreeWord apply(const FreeAutomorphism& phi, const FreeWord& w);

/// l_i with phi_b(x_i) = l_i^-1 x_i l_i and zero x_i exponent in l_i; b must be pure.
std::vector<FreeWord> longitudes(const BraidWord& b);

/// Truncated Magnus expansion x_i -> 1 + X_i with integer coefficients.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int degree);
  static MagnusSeries of_word(const FreeWord& w, int degree);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  /// Coefficients of degree d; index is the base-rank expansion of the monomial, first letter most significant.
  const std::vector<std::int64_t>& homogeneous(int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
  std::int64_t coefficient(const std::vector<int>& monomial) const;

  /// Right multiplication by x_g^{sign}.
  void multiply_generator(int letter);

  MagnusSeries operator*(const MagnusSeries& rhs) const;

 private:
  int rank_;
  int degree_;
  std::vector<std::vector<std::int64_t>> coeffs_;
};

/// Least k <= dmax with a nonzero degree-k term in Magnus(w) - 1, or nullopt.
std::optional<int> magnus_depth(const FreeWord& w, int dmax = 8);

/// x_i -> [y_i, z_i] into rank 6 with generators ordered y1 z1 y2 z2 y3 z3.
FreeWord zeta_embed(const FreeWord& w);

}  // namespace b3cert
