#include "b3cert/triangle_groups.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "b3cert/burau.hpp"

namespace b3cert {

namespace {

BraidWord gword(std::initializer_list<std::pair<int, long>> syllables) {
  BraidWord w(3);
  for (const auto& [g, e] : syllables) w = w * BraidWord::gen(g).pow(e);
  return w;
}

ExactMatrix eval_power(const NamedRelator& r, unsigned n, long m) {
  return matrix_pow(eval_word_minus_q(r.base, n, m), r.power);
}

bool is_projective_identity(const ExactMatrix& x) { return x.is_scalar() && !x.is_zero(); }

// Exact value of a word over a, b given the two matrices.
ExactMatrix eval_ab(const FreeWord& w, const ExactMatrix& a, const ExactMatrix& b) {
  const ExactMatrix ai = inverse2(a), bi = inverse2(b);
  ExactMatrix out = ExactMatrix::identity(2);
  for (int x : w.letters) {
    switch (x) {
      case 1: out = out * a; break;
      case -1: out = out * ai; break;
      case 2: out = out * b; break;
      case -2: out = out * bi; break;
      default: throw std::invalid_argument("word over a, b expected");
    }
  }
  return out;
}

ExactMatrix lift_matrix(const ExactMatrix& x, unsigned N) {
  return x.map([N](const CyclotomicNumber& c) { return c.lift(N); });
}

struct ProjectiveHash {
  std::size_t operator()(const ExactMatrix& m) const {
    std::size_t h = 0;
    for (const auto& x : m.data()) h = h * 1000003u ^ x.hash();
    return h;
  }
};

}  // namespace

TrianglePresentation triangle_presentation(long p1, long p2, long p3) {
  if (p1 < 1 || p2 < 1 || p3 < 1) throw std::invalid_argument("triangle exponents must be positive");
  TrianglePresentation t;
  t.generators = {"a", "b"};
  t.p1 = p1;
  t.p2 = p2;
  t.p3 = p3;
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  t.relators = {a.pow(p1), b.pow(p2), (a * b).pow(p3)};
  const long lhs = p2 * p3 + p1 * p3 + p1 * p2, rhs = p1 * p2 * p3;
  t.euclidean = lhs == rhs;
  t.hyperbolic = lhs < rhs;
  if (t.euclidean) t.note = "Euclidean: angle sum equals pi";
  else if (!t.hyperbolic) t.note = "spherical: finite group";
  return t;
}

ImagePresentation image_presentation(unsigned n) {
  if (n < 2) throw std::invalid_argument("image_presentation needs n >= 2");
  ImagePresentation p;
  p.n = n;
  p.even = n % 2 == 0;
  p.k = p.even ? n / 2 : (n - 1) / 2;
  const long k = p.k;
  p.relators.push_back({"braid", gword({{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}}), 1, false});
  if (p.even) {
    p.center_exponent = 3 * std::lcm(3L, k) * std::gcd(2L, k);
    p.relators.push_back({"g1^(2k)", BraidWord::gen(1), 2 * k, false});
    p.relators.push_back({"g2^(2k)", BraidWord::gen(2), 2 * k, false});
    p.relators.push_back({"(g1^2 g2^2)^k", gword({{1, 2}, {2, 2}}), k, false});
  } else {
    const long n_odd = 2 * k + 1;
    p.center_exponent = 6 * std::lcm(3L, n_odd);
    p.relators.push_back({"g1^(2k+1)", BraidWord::gen(1), n_odd, false});
    p.relators.push_back({"g2^(2k+1)", BraidWord::gen(2), n_odd, false});
    p.relators.push_back({"(g1^2 g2^2)^(2k+1)", gword({{1, 2}, {2, 2}}), n_odd, false});
    p.relators.push_back({"(g1^-2 g2^(2k))^2", gword({{1, -2}, {2, 2 * k}}), 2, false});
    p.relators.push_back({"(g1^(2k) g2^(2k-2))^3", gword({{1, 2 * k}, {2, 2 * k - 2}}), 3, false});
  }
  p.relators.push_back({"(g1 g2)^" + std::to_string(p.center_exponent), gword({{1, 1}, {2, 1}}), p.center_exponent, true});
  return p;
}

RelationReport verify_relations(unsigned n, long m) {
  if (std::gcd(static_cast<long>(n), m) != 1) throw std::invalid_argument("root exponent must be coprime to n");
  RelationReport rep;
  rep.n = n;
  rep.m = m;
  rep.all_pass = true;
  for (const auto& r : image_presentation(n).relators) {
    const ExactMatrix x = eval_power(r, n, m);
    RelatorCheck c;
    c.name = r.name;
    c.projective_identity = is_projective_identity(x);
    c.exact_identity = x == ExactMatrix::identity(2);
    c.pass = r.is_center ? c.exact_identity : c.projective_identity;
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(c);
  }
  return rep;
}

TrianglePresentation gamma_presentation(unsigned n) {
  if (n < 2) throw std::invalid_argument("gamma_presentation needs n >= 2");
  if (n % 2 == 0) {
    const long k = n / 2;
    TrianglePresentation t = triangle_presentation(k, k, k);
    t.generators = {"A", "B"};
    if (t.euclidean) t.note = "Euclidean edge case Delta(3,3,3): outside the disk model";
    return t;
  }
  const long k = (n - 1) / 2;
  const long p = n;
  TrianglePresentation t = triangle_presentation(p, p, p);
  t.generators = {"A", "B"};
  const FreeWord A = FreeWord::generator(2, 1), B = FreeWord::generator(2, 2);
  t.relators.push_back((A.inverse() * B.pow(k)).pow(2));
  t.relators.push_back((B.pow(k) * A.pow(k - 1)).pow(3));
  t.note = "isomorphic to Delta(2,3," + std::to_string(n) + ")";
  return t;
}

BraidWord ab_to_braid(const FreeWord& w) {
  BraidWord out(3);
  for (int x : w.letters) {
    const int g = std::abs(x);
    if (g > 2) throw std::invalid_argument("word over A, B expected");
    out.letters.push_back(x);
    out.letters.push_back(x);
  }
  return out;
}

IsoReport iso_2_3_odd(long k) {
  if (k < 1) throw std::invalid_argument("iso_2_3_odd needs k >= 1");
  const unsigned n = static_cast<unsigned>(2 * k + 1);
  IsoReport rep;
  rep.k = k;
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  rep.alpha = a.pow(k + 1);
  rep.u = a.inverse() * b.pow(k) * a.pow(k);
  rep.v = a.pow(k) * b.pow(k) * a.pow(k);
  const ExactMatrix ma = eval_word_minus_q(BraidWord(3, {1, 1}), n);
  const ExactMatrix mb = eval_word_minus_q(BraidWord(3, {2, 2}), n);
  auto ev = [&](const FreeWord& w) { return eval_ab(w, ma, mb); };
  const ExactMatrix al = ev(rep.alpha), u = ev(rep.u), v = ev(rep.v);
  auto add = [&](const std::string& name, bool ok) {
    rep.checks.push_back({name, ok});
    rep.all_pass = rep.all_pass && ok;
  };
  rep.all_pass = true;
  add("alpha^" + std::to_string(n) + " = 1", is_projective_identity(matrix_pow(al, static_cast<long>(n))));
  add("u^3 = 1", is_projective_identity(u * u * u));
  add("v^2 = 1", is_projective_identity(v * v));
  add("alpha u v = 1", is_projective_identity(al * u * v));
  add("a = alpha^2", projective_equal(al * al, ma));
  add("b = v alpha^2 v", projective_equal(v * al * al * v, mb));
  add("b = u^2 alpha^2 u", projective_equal(u * u * al * al * u, mb));
  return rep;
}

ClosureResult finite_image_closure(unsigned o, std::size_t bound, long m, bool keep_elements) {
  if (o < 1) throw std::invalid_argument("order must be positive");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (std::gcd(static_cast<long>(o), m) != 1) throw std::invalid_argument("root exponent must be coprime to the order");
  const CyclotomicNumber t = CyclotomicNumber::root(o, m);
  const ExactMatrix g1 = lift_matrix(burau_generator(1, 3, t), o);
  const ExactMatrix g2 = lift_matrix(burau_generator(2, 3, t), o);
  auto normal = [o](const ExactMatrix& x) { return lift_matrix(projective_normalize(x), o); };
  std::unordered_set<ExactMatrix, ProjectiveHash> seen;
  std::vector<ExactMatrix> frontier{normal(ExactMatrix::identity(2))};
  seen.insert(frontier.front());
  ClosureResult res;
  while (!frontier.empty()) {
    std::vector<ExactMatrix> next;
    for (const auto& x : frontier)
      for (const ExactMatrix* g : {&g1, &g2}) {
        ExactMatrix y = normal(x * *g);
        if (seen.count(y)) continue;
        if (seen.size() >= bound) {
          res.finite = false;
          res.order = seen.size();
          return res;
        }
        seen.insert(y);
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  res.finite = true;
  res.order = seen.size();
  if (keep_elements) res.elements.assign(seen.begin(), seen.end());
  return res;
}

std::string to_string(Verdict v) { return v == Verdict::member ? "member" : "non_member"; }

std::string to_string(NonMemberReason r) {
  switch (r) {
    case NonMemberReason::none: return "none";
    case NonMemberReason::overlap: return "overlap";
    case NonMemberReason::color_flip: return "color_flip";
  }
  return "unknown";
}

}  // namespace b3cert
