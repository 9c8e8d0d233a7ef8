#include "b3cert/braid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "b3cert/burau.hpp"

namespace b3cert {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 2) throw std::invalid_argument("a braid needs at least 2 strands");
  for (int x : letters)
    if (x == 0 || std::abs(x) > n - 1) throw std::out_of_range("braid generator index out of range");
}

namespace {

long parse_long(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected an integer at position " + std::to_string(start) + " in \"" + text + "\"");
  try {
    return std::stol(text.substr(start, pos - start));
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range in \"" + text + "\"");
  }
}

}  // namespace

BraidWord BraidWord::parse(const std::string& text, int strands) {
  BraidWord w(strands);
  std::size_t pos = 0;
  auto push = [&](long gen, long power) {
    if (gen == 0 || std::abs(gen) > strands - 1)
      throw ParseError("generator index " + std::to_string(gen) + " out of range for " + std::to_string(strands) +
                       " strands");
    if (std::abs(power) > 100000) throw ParseError("exponent too large in \"" + text + "\"");
    const int letter = static_cast<int>(power < 0 ? -gen : gen);
    for (long k = 0; k < std::abs(power); ++k) w.letters.push_back(letter);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == 'g' || c == 's' || c == 'G') {
      ++pos;
      if (pos < text.size() && text[pos] == '_') ++pos;
      const long gen = parse_long(text, pos);
      if (gen <= 0) throw ParseError("generator index must be positive in \"" + text + "\"");
      long power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos < text.size() && text[pos] == '(') {
          ++pos;
          power = parse_long(text, pos);
          if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced parenthesis in \"" + text + "\"");
          ++pos;
        } else {
          power = parse_long(text, pos);
        }
      }
      push(gen, power);
      continue;
    }
    if (c == 'e' && (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const long x = parse_long(text, pos);
      push(std::abs(x), x < 0 ? -1 : 1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in braid word \"" + text + "\"");
  }
  return w;
}

BraidWord BraidWord::pure_generator(int i, int j, int strands) {
  if (i < 1 || j < i || j > strands - 1) throw std::out_of_range("A_ij needs 1 <= i <= j <= n - 1");
  BraidWord w(strands);
  for (int k = i; k < j; ++k) w.letters.push_back(k);
  w.letters.push_back(j);
  w.letters.push_back(j);
  for (int k = j - 1; k >= i; --k) w.letters.push_back(-k);
  return w;
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands);
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord BraidWord::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BraidWord out(strands);
  for (long k = 0; k < e; ++k) out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  return out;
}

BraidWord BraidWord::reduced() const { return BraidWord(strands, free_reduce_letters(letters)); }

long BraidWord::exponent_sum() const {
  long s = 0;
  for (int x : letters) s += x > 0 ? 1 : -1;
  return s;
}

std::string BraidWord::to_string() const {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out << ' ';
    out << 'g' << std::abs(letters[k]);
    if (letters[k] < 0) out << "^-1";
  }
  return out.str();
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw std::invalid_argument("strand counts differ");
  BraidWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::vector<bool> seen(images.size(), false);
  std::ostringstream out;
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (seen[s] || images[s] == static_cast<int>(s)) continue;
    out << '(';
    std::size_t k = s;
    bool first = true;
    while (!seen[k]) {
      seen[k] = true;
      if (!first) out << ' ';
      out << k + 1;
      first = false;
      k = static_cast<std::size_t>(images[k]);
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation permutation_of(const BraidWord& w) {
  // Track where each starting strand ends up.
  std::vector<int> pos_of(static_cast<std::size_t>(w.strands));
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  for (int i = 0; i < w.strands; ++i) pos_of[i] = at[i] = i;
  for (int x : w.letters) {
    const int p = std::abs(x) - 1;
    std::swap(at[p], at[p + 1]);
    pos_of[at[p]] = p;
    pos_of[at[p + 1]] = p + 1;
  }
  return Permutation{pos_of};
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

bool word_equal_b3(const BraidWord& u, const BraidWord& v) {
  if (u.strands != 3 || v.strands != 3) throw std::invalid_argument("word_equal_b3 needs 3-strand braids");
  return eval_word_generic(u.reduced()) == eval_word_generic(v.reduced());
}

BraidWord Pb3Decomposition::recompose() const {
  BraidWord out(3);
  for (int x : f.letters) {
    const int g = std::abs(x);
    out.letters.push_back(x > 0 ? g : -g);
    out.letters.push_back(x > 0 ? g : -g);
  }
  return out * BraidWord::center().pow(m);
}

namespace {

struct SchreierTable {
  std::array<BraidWord, 6> reps;
  std::array<Permutation, 6> perms;
  // Decomposition of t x rep(t x)^-1 for each coset t and generator x.
  std::array<std::array<Pb3Decomposition, 2>, 6> gens;
  std::array<std::array<int, 2>, 6> next;

  int coset_of(const Permutation& p) const {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("permutation outside S3");
  }
};

// Reduced words in A, B of length <= max_len.
std::vector<FreeWord> words_up_to(int max_len) {
  std::vector<FreeWord> out{FreeWord(2)};
  std::vector<FreeWord> layer{FreeWord(2)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : layer)
      for (int x : {1, -1, 2, -2}) {
        if (!w.letters.empty() && w.letters.back() == -x) continue;
        FreeWord v = w;
        v.letters.push_back(x);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Pb3Decomposition search_decomposition(const BraidWord& s) {
  const LaurentMatrix target = eval_word_generic(s);
  const long es = s.exponent_sum();
  static const std::vector<FreeWord> candidates = words_up_to(4);
  for (const auto& f : candidates) {
    long ef = 0;
    for (int x : f.letters) ef += x > 0 ? 2 : -2;
    if ((es - ef) % 6 != 0) continue;
    Pb3Decomposition d{f, (es - ef) / 6};
    if (eval_word_generic(d.recompose()) == target) return d;
  }
  throw std::logic_error("no short decomposition for Schreier generator " + s.to_string());
}

const SchreierTable& schreier_table() {
  static std::once_flag once;
  static SchreierTable table;
  std::call_once(once, [] {
    const std::array<std::vector<int>, 6> words{
        std::vector<int>{}, {1}, {1, 2}, {2}, {2, 1}, {1, 2, 1}};
    for (int i = 0; i < 6; ++i) {
      table.reps[i] = BraidWord(3, words[i]);
      table.perms[i] = permutation_of(table.reps[i]);
    }
    for (int i = 0; i < 6; ++i)
      for (int x = 1; x <= 2; ++x) {
        const BraidWord tx = table.reps[i] * BraidWord::gen(x);
        const int j = table.coset_of(permutation_of(tx));
        table.next[i][x - 1] = j;
        table.gens[i][x - 1] = search_decomposition(tx * table.reps[j].inverse());
      }
  });
  return table;
}

}  // namespace

Pb3Decomposition pb3_rewrite(const BraidWord& w) {
  if (w.strands != 3) throw std::invalid_argument("pb3_rewrite needs a 3-strand braid");
  if (!is_pure(w)) throw std::invalid_argument("pb3_rewrite needs a pure braid");
  const SchreierTable& table = schreier_table();
  FreeWord f(2);
  long m = 0;
  int coset = 0;
  for (int x : w.letters) {
    const int g = std::abs(x) - 1;
    if (x > 0) {
      const Pb3Decomposition& d = table.gens[coset][g];
      f = f * d.f;
      m += d.m;
      coset = table.next[coset][g];
    } else {
      // t x^-1 = s(t', x)^-1 t' where t' x lies in coset t.
      int prev = -1;
      for (int i = 0; i < 6; ++i)
        if (table.next[i][g] == coset) prev = i;
      const Pb3Decomposition& d = table.gens[prev][g];
      f = f * d.f.inverse();
      m -= d.m;
      coset = prev;
    }
  }
  // Z is central, so the free parts just concatenate.
  Pb3Decomposition out{free_reduce(f), m};
  if (!word_equal_b3(out.recompose(), w)) throw std::logic_error("pb3_rewrite failed its own check");
  return out;
}

}  // namespace b3cert
