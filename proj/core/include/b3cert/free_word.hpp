#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace b3cert {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word in a free group of the given rank; letters are +-1..+-rank.
struct FreeWord {
  int rank = 2;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int r, std::vector<int> ls = {});

  static FreeWord generator(int rank, int i) { return FreeWord(rank, {i}); }
  /// Accepts "x1 x2^-1", "a b^2 A" (uppercase = inverse) and signed integers; not reduced.
  /// The rank is the larger of min_rank and the highest index used.
  static FreeWord parse(const std::string& text, int min_rank = 0);

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  FreeWord inverse() const;
  FreeWord pow(long e) const;
  /// Exponent sum of generator i.
  long exponent_sum(int i) const;
  /// Default letter names: a, b, c, ... (uppercase for inverses).
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord& u, const FreeWord& v) { return u.letters == v.letters; }
  friend bool operator!=(const FreeWord& u, const FreeWord& v) { return !(u == v); }
};

/// Cancel adjacent x x^-1 pairs until none remain.
FreeWord free_reduce(const FreeWord& w);
std::vector<int> free_reduce_letters(const std::vector<int>& letters);

/// [u, v] = u v u^-1 v^-1, freely reduced.
FreeWord commutator(const FreeWord& u, const FreeWord& v);

/// Homomorphic substitution of images[i-1] for generator i; result reduced.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

}  // namespace b3cert
