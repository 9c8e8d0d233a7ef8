#include "b3cert/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace b3cert {

FreeWord::FreeWord(int r, std::vector<int> ls) : rank(r), letters(std::move(ls)) {
  if (r < 1) throw std::invalid_argument("free group rank must be positive");
  for (int x : letters)
    if (x == 0 || std::abs(x) > r) throw std::out_of_range("free generator index out of range");
}

namespace {

long read_long(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
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

long read_power(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '^') return 1;
  ++pos;
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    const long e = read_long(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced parenthesis in \"" + text + "\"");
    ++pos;
    return e;
  }
  return read_long(text, pos);
}

}  // namespace

FreeWord FreeWord::parse(const std::string& text, int min_rank) {
  std::vector<int> ls;
  int rank = std::max(min_rank, 1);
  auto push = [&](long gen, long power) {
    if (gen <= 0 || gen > 64) throw ParseError("free generator index " + std::to_string(gen) + " out of range");
    if (std::abs(power) > 100000) throw ParseError("exponent too large in \"" + text + "\"");
    rank = std::max(rank, static_cast<int>(gen));
    for (long k = 0; k < std::abs(power); ++k) ls.push_back(static_cast<int>(power < 0 ? -gen : gen));
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if ((c == 'x' || c == 'X') && pos + 1 < text.size() &&
        (text[pos + 1] == '_' || std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
      pos += text[pos + 1] == '_' ? 2 : 1;
      const long gen = read_long(text, pos);
      const long p = read_power(text, pos);
      push(gen, c == 'X' ? -p : p);
      continue;
    }
    if (c == 'e' && (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const bool inv = std::isupper(static_cast<unsigned char>(c));
      const long gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      ++pos;
      const long p = read_power(text, pos);
      push(gen, inv ? -p : p);
      continue;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const long x = read_long(text, pos);
      push(std::abs(x), x < 0 ? -1 : 1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in free word \"" + text + "\"");
  }
  return FreeWord(rank, std::move(ls));
}

std::vector<int> free_reduce_letters(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

FreeWord free_reduce(const FreeWord& w) { return FreeWord(w.rank, free_reduce_letters(w.letters)); }

FreeWord FreeWord::inverse() const {
  FreeWord out(rank);
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord FreeWord::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FreeWord out(rank);
  for (long k = 0; k < e; ++k) out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  return free_reduce(out);
}

long FreeWord::exponent_sum(int i) const {
  long s = 0;
  for (int x : letters) {
    if (x == i) ++s;
    else if (x == -i) --s;
  }
  return s;
}

std::string FreeWord::to_string() const {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return to_string(names);
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  std::size_t k = 0;
  bool first = true;
  while (k < letters.size()) {
    std::size_t run = 1;
    while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
    if (!first) out << ' ';
    out << names.at(static_cast<std::size_t>(std::abs(letters[k]) - 1));
    const long e = static_cast<long>(run) * (letters[k] > 0 ? 1 : -1);
    if (e != 1) out << '^' << e;
    first = false;
    k += run;
  }
  return out.str();
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord out(std::max(u.rank, v.rank), u.letters);
  for (int x : v.letters) {
    if (!out.letters.empty() && out.letters.back() == -x) out.letters.pop_back();
    else out.letters.push_back(x);
  }
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return free_reduce(u) * v * u.inverse() * v.inverse();
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  if (images.empty()) throw std::invalid_argument("substitute needs images");
  FreeWord out(images.front().rank);
  for (int x : w.letters) {
    const FreeWord& img = images.at(static_cast<std::size_t>(std::abs(x) - 1));
    out = out * (x > 0 ? img : img.inverse());
  }
  return out;
}

FreeProductWord FreeProductWord::from_word(const FreeWord& w, long k) {
  if (k < 2) throw std::invalid_argument("free product modulus must be at least 2");
  FreeProductWord out;
  out.modulus = k;
  for (int x : w.letters) {
    const int gen = std::abs(x) - 1;
    if (gen > 1) throw std::invalid_argument("free product words use only a and b");
    const long e = x > 0 ? 1 : k - 1;
    if (!out.syllables.empty() && out.syllables.back().gen == gen) {
      long& top = out.syllables.back().exp;
      top = (top + e) % k;
      if (top == 0) out.syllables.pop_back();
    } else {
      out.syllables.push_back({gen, e});
    }
  }
  return out;
}

FreeProductWord FreeProductWord::inverse() const {
  FreeProductWord out;
  out.modulus = modulus;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) out.syllables.push_back({it->gen, modulus - it->exp});
  return out;
}

FreeProductWord operator*(const FreeProductWord& u, const FreeProductWord& v) {
  if (u.modulus != v.modulus) throw std::invalid_argument("free product moduli differ");
  FreeProductWord out = u;
  for (const auto& s : v.syllables) {
    if (!out.syllables.empty() && out.syllables.back().gen == s.gen) {
      long& top = out.syllables.back().exp;
      top = (top + s.exp) % u.modulus;
      if (top == 0) out.syllables.pop_back();
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

std::string FreeProductWord::to_string() const {
  if (syllables.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i) out << ' ';
    out << (syllables[i].gen == 0 ? 'a' : 'b');
    if (syllables[i].exp != 1) out << '^' << syllables[i].exp;
  }
  return out.str();
}

FreeProductWord squier_witness(long k) {
  if (k < 2) throw std::invalid_argument("squier_witness needs k >= 2");
  const FreeWord ab(2, {1, 2});
  return FreeProductWord::from_word(ab.pow(k), k);
}

CommutatorIdentityReport commutator_identity_check(long D) {
  if (D < 2) throw std::invalid_argument("commutator identity needs D >= 2");
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  CommutatorIdentityReport rep;
  rep.D = D;
  rep.lhs = FreeWord(2, {1, 2}).pow(D) * a.pow(-D) * b.pow(-D);
  for (long i = 1; i <= D; ++i) {
    rep.factors.emplace_back(a.pow(i), b.pow(i));
    if (i < D) rep.factors.emplace_back(b.pow(i), a.pow(i + 1));
  }
  FreeWord standard(2), other(2);
  for (const auto& [u, v] : rep.factors) {
    standard = standard * commutator(u, v);
    other = other * commutator(u.inverse(), v.inverse());
  }
  if (standard == rep.lhs) {
    rep.holds = true;
    rep.convention = "uvu^-1v^-1";
    rep.rhs = standard;
  } else if (other == rep.lhs) {
    rep.holds = true;
    rep.convention = "u^-1v^-1uv";
    rep.rhs = other;
  } else {
    rep.convention = "none";
    rep.rhs = standard;
  }
  return rep;
}

FreeWord zeta_embed(const FreeWord& w) {
  if (w.rank != 3) throw std::invalid_argument("zeta_embed needs a rank-3 word");
  std::vector<FreeWord> images;
  for (int i = 1; i <= 3; ++i)
    images.push_back(commutator(FreeWord::generator(6, 2 * i - 1), FreeWord::generator(6, 2 * i)));
  FreeWord out(6);
  for (int x : w.letters) {
    const FreeWord& img = images[static_cast<std::size_t>(std::abs(x) - 1)];
    out = out * (x > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace b3cert
