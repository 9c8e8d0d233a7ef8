#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "b3cert/free_word.hpp"

namespace b3cert {

/// Word in the braid group B_n; letter +-i stands for g_i^{+-1}.
struct BraidWord {
  int strands = 3;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls = {});

  /// Accepts "1 2 -1", "g1 g2^-1 g1^3" and mixtures; separators are spaces or commas.
  static BraidWord parse(const std::string& text, int strands = 3);

  static BraidWord gen(int i, int strands = 3) { return BraidWord(strands, {i}); }
  /// A = g1^2, B = g2^2, Z = (g1 g2 g1)^2 in B_3.
  static BraidWord A() { return BraidWord(3, {1, 1}); }
  static BraidWord B() { return BraidWord(3, {2, 2}); }
  static BraidWord center() { return BraidWord(3, {1, 2, 1, 1, 2, 1}); }
  /// A_ij = g_i ... g_{j-1} g_j^2 g_{j-1}^-1 ... g_i^-1.
  static BraidWord pure_generator(int i, int j, int strands);

  bool empty() const { return letters.empty(); }
  BraidWord inverse() const;
  BraidWord pow(long e) const;
  BraidWord reduced() const;
  long exponent_sum() const;
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord& u, const BraidWord& v) {
    return u.strands == v.strands && u.letters == v.letters;
  }
};

/// images[k] is the image of strand k (0-based).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  bool is_identity() const;
  /// Cycle notation on 1-based points, e.g. "(1 2)".
  std::string to_string() const;
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
};

/// Induced permutation; g_i swaps i and i+1, and the word is read left to right.
Permutation permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// Equality in B_3 by exact generic Burau matrices.
bool word_equal_b3(const BraidWord& u, const BraidWord& v);

/// w = f(A, B) * Z^m for a pure 3-braid w; f is a reduced word with a = A, b = B.
struct Pb3Decomposition {
  FreeWord f;
  long m = 0;
  BraidWord recompose() const;
};

Pb3Decomposition pb3_rewrite(const BraidWord& w);

}  // namespace b3cert
