// Acceptance battery. `b3cert_acceptance --criterion N` runs one criterion;
// without arguments all ten run. Each prints one PASS/FAIL line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "b3cert/burau.hpp"
#include "b3cert/free_group.hpp"
#include "b3cert/hyperbolic.hpp"
#include "b3cert/triangle_groups.hpp"

using namespace b3cert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;
};

void fail(Verdict& v, const std::string& what) {
  if (v.pass) v.detail = what;
  else if (v.detail.size() < 400) v.detail += "; " + what;
  v.pass = false;
}

std::vector<long> units(long n) {
  std::vector<long> out;
  for (long m = 1; m < n || (n == 1 && m == 1); ++m)
    if (std::gcd(m, n) == 1) out.push_back(m);
  return out;
}

// 1. Every relator of the image presentation is trivial under exact beta_{-q}.
Verdict relation_suite() {
  Verdict v;
  int runs = 0;
  for (unsigned n = 4; n <= 24; ++n)
    for (long m : units(n)) {
      const RelationReport r = verify_relations(n, m);
      ++runs;
      for (const auto& c : r.checks)
        if (!c.pass) fail(v, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + c.name);
    }
  if (v.pass) v.detail = std::to_string(runs) + " (n, m) pairs";
  return v;
}

// 2. Order of -q^3 against lcm(3,k) gcd(2,k); odd-case center exponent.
Verdict center_order() {
  Verdict v;
  for (long k = 2; 2 * k <= 24; ++k) {
    const unsigned n = static_cast<unsigned>(2 * k);
    const CyclotomicNumber q = CyclotomicNumber::root(n, 1);
    const auto ord = root_order(-(q * q * q));
    const long claimed = std::lcm(3L, k) * std::gcd(2L, k);
    if (!ord || static_cast<long>(*ord) != claimed) {
      fail(v, "n=" + std::to_string(n) + ": order " + (ord ? std::to_string(*ord) : "inf") + " vs " + std::to_string(claimed));
    }
    // The claimed exponent still annihilates the center exactly.
    const ExactMatrix z = matrix_pow(eval_word_minus_q(BraidWord::parse("1 2"), n), 3 * claimed);
    if (!(z == ExactMatrix::identity(2))) fail(v, "n=" + std::to_string(n) + ": (g1g2)^" + std::to_string(3 * claimed) + " != I");
  }
  for (long k = 1; 2 * k + 1 <= 24; ++k) {
    const unsigned n = static_cast<unsigned>(2 * k + 1);
    const long e = 6 * std::lcm(3L, 2 * k + 1);
    const ExactMatrix z = matrix_pow(eval_word_minus_q(BraidWord::parse("1 2"), n), e);
    if (!z.is_scalar()) fail(v, "n=" + std::to_string(n) + ": (g1g2)^" + std::to_string(e) + " not scalar");
  }
  if (v.pass) v.detail = "even n <= 24 orders match; odd exponents annihilate";
  return v;
}

// 3. Finite versus infinite projective image by closure, stable over Galois conjugates.
Verdict dichotomy() {
  Verdict v;
  // Orders of the finite images, from an independent floating-point closure.
  const std::map<unsigned, std::size_t> finite_oracle{{4, 24}, {6, 12}, {10, 60}};
  for (unsigned o : {2u, 3u, 4u, 6u, 10u}) {
    std::optional<std::size_t> first;
    for (long m : units(o)) {
      const ClosureResult c = finite_image_closure(o, 10000, m);
      if (!c.finite) {
        fail(v, "order " + std::to_string(o) + " m=" + std::to_string(m) + " exceeded the bound");
        continue;
      }
      if (first && *first != c.order) fail(v, "order " + std::to_string(o) + " unstable across conjugates");
      first = c.order;
      const auto it = finite_oracle.find(o);
      if (it != finite_oracle.end() && it->second != c.order)
        fail(v, "order " + std::to_string(o) + " size " + std::to_string(c.order));
    }
  }
  for (unsigned o : {5u, 7u, 8u, 9u, 12u})
    for (long m : units(o))
      if (finite_image_closure(o, 10000, m).finite)
        fail(v, "order " + std::to_string(o) + " m=" + std::to_string(m) + " closed below the bound");
  if (v.pass) v.detail = "finite {2,3,4,6,10}, infinite {5,7,8,9,12}";
  return v;
}

// 4. Closed forms of the disk model.
Verdict geometry() {
  Verdict v;
  constexpr double tol = 1e-10;
  for (unsigned n : {8u, 10u, 12u, 14u, 16u, 20u, 24u}) {
    const U11Model mod = u11_generators(n);
    const double alpha = 2 * kPi / n;
    const std::string tag = "n=" + std::to_string(n) + " ";
    // The radicand 1 + 2cos(alpha + pi) is negative here; compare with its modulus.
    if (std::abs(std::abs(mod.P) - std::sqrt(std::abs(1 + 2 * std::cos(alpha + kPi)))) > tol) fail(v, tag + "|P|");
    for (double a : triangle_OPQ(n).angles)
      if (std::abs(a - alpha) > tol) fail(v, tag + "triangle angle");
    for (const Isometry* g : {&mod.A, &mod.B, &mod.AB})
      if (g->kind != IsometryKind::elliptic || std::abs(g->angle - 2 * alpha) > tol) fail(v, tag + "rotation 2 alpha");
    if (mod.D.kind != IsometryKind::elliptic || std::abs(mod.D.angle - alpha) > tol) fail(v, tag + "rotation of D");
    if (std::abs(moebius_apply(mod.D.matrix, DiskPoint{mod.Q}).z) > tol) fail(v, tag + "D(Q) != 0");
  }
  if (v.pass) v.detail = "7 values of n";
  return v;
}

// 5. Membership certificates.
Verdict membership() {
  Verdict v;
  std::mt19937 rng(20240521);
  int members = 0;
  for (unsigned k : {4u, 5u, 6u}) {
    const unsigned n = 2 * k;
    for (const char* g : {"1", "2", "1 2", "2 1", "1 2 1"}) {
      const auto c = member_delta_kkk(eval_word_minus_q(BraidWord::parse(g), n), k);
      if (c.verdict != b3cert::Verdict::non_member) fail(v, "k=" + std::to_string(k) + " [" + g + "] certified member");
    }
    for (int t = 0; t < 100; ++t) {
      std::vector<int> ls;
      const int len = static_cast<int>(rng() % 41);
      for (int i = 0; i < len; ++i) {
        const int x = 1 + static_cast<int>(rng() % 2);
        ls.push_back(rng() % 2 ? x : -x);
      }
      const FreeWord w(2, ls);
      const ExactMatrix M = eval_word_minus_q(ab_to_braid(w), n);
      const auto c = member_delta_kkk(M, k);
      const bool ok = c.verdict == b3cert::Verdict::member && c.exact_check &&
                      projective_equal(eval_word_minus_q(ab_to_braid(c.word), n), M);
      if (!ok) fail(v, "k=" + std::to_string(k) + " word " + w.to_string({"A", "B"}));
      members += ok;
    }
  }
  if (v.pass) v.detail = "15 non-members, " + std::to_string(members) + " round trips";
  return v;
}

// 6. Delta(2,3,2k+1) dictionary.
Verdict iso_suite() {
  Verdict v;
  for (long k : {3L, 4L, 5L}) {
    const IsoReport r = iso_2_3_odd(k);
    for (const auto& c : r.checks)
      if (!c.pass) fail(v, "k=" + std::to_string(k) + " " + c.name);
  }
  if (v.pass) v.detail = "k = 3, 4, 5";
  return v;
}

// 7. Squier witnesses and the commutator identity.
Verdict squier() {
  Verdict v;
  for (long k = 2; k <= 64; ++k)
    if (squier_witness(k).is_trivial()) fail(v, "witness k=" + std::to_string(k));
  for (long D = 2; D <= 64; ++D)
    if (!commutator_identity_check(D).holds) fail(v, "identity D=" + std::to_string(D));
  if (v.pass) v.detail = "k, D in 2..64";
  return v;
}

// 8. Infinite order of [a^F, b^F] in H1.
Verdict h1_suite() {
  Verdict v;
  int items = 0;
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  for (long D : {4L, 6L, 8L, 10L, 12L})
    for (long F = 1; F < D; ++F) {
      if (D % F != 0) continue;
      ++items;
      const AbelianCert c = h1_cert(D, commutator(a.pow(F), b.pow(F)));
      if (!c.infinite) fail(v, "D=" + std::to_string(D) + " F=" + std::to_string(F));
    }
  if (v.pass) v.detail = std::to_string(items) + " (D, F) pairs";
  return v;
}

// 9. Lower central depths under the Johnson reduction.
Verdict johnson() {
  Verdict v;
  const BraidWord d11 = BraidWord::A() * BraidWord::B() * BraidWord::A().inverse() * BraidWord::B().inverse();
  for (const auto& l : longitudes(d11)) {
    const auto d = magnus_depth(l, 8);
    if (d && *d < 2) fail(v, "longitude " + l.to_string() + " depth " + std::to_string(*d));
  }
  const FreeWord x1 = FreeWord::generator(3, 1), x2 = FreeWord::generator(3, 2);
  const FreeWord c = commutator(x1, x2);
  const std::vector<std::pair<FreeWord, int>> cases{{x1, 1}, {c, 2}, {commutator(c, x1), 3}};
  for (const auto& [w, depth] : cases) {
    const auto d = magnus_depth(w, 8), dz = magnus_depth(zeta_embed(w), 8);
    if (d != depth) fail(v, w.to_string() + " depth");
    if (dz && *dz < 2 * depth) fail(v, w.to_string() + " image depth " + std::to_string(*dz));
  }
  if (v.pass) v.detail = "longitudes of [g1^2, g2^2] and zeta doubling";
  return v;
}

// 10. Angle between the rotation axes of the Jones generators.
Verdict axes() {
  Verdict v;
  std::ostringstream os;
  for (unsigned n : {5u, 7u, 9u}) {
    const double alpha = 2 * kPi / n;
    const double got = jones_axes_angle(alpha).theta;
    const double want = std::acos(std::cos(alpha) / (1 + std::cos(alpha)));
    if (std::abs(got - want) > 1e-9) fail(v, "alpha=2pi/" + std::to_string(n));
    os << (os.tellp() ? ", " : "") << "2pi/" << n << ": " << got;
  }
  if (v.pass) v.detail = os.str();
  return v;
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"relation suite n = 4..24", relation_suite},
      {"center order formula", center_order},
      {"finite/infinite dichotomy", dichotomy},
      {"disk-model geometry", geometry},
      {"membership certificates", membership},
      {"Delta(2,3,2k+1) dictionary", iso_suite},
      {"Squier strictness and commutator identity", squier},
      {"H1 infinite-order certificates", h1_suite},
      {"Johnson reduction depths", johnson},
      {"axis-angle formula", axes},
  };
  return all;
}

bool run_one(std::size_t i) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = criteria()[i].run();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %zu: %s  %s (%s) [%.2fs]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria()[i].title, v.detail.c_str(), s);
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const long i = std::strtol(argv[2], nullptr, 10);
    if (i < 1 || i > static_cast<long>(criteria().size())) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", criteria().size());
      return 2;
    }
    return run_one(static_cast<std::size_t>(i - 1)) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) all = run_one(i) && all;
  return all ? 0 : 1;
}
