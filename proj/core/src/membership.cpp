#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <numeric>
#include <stdexcept>

#include "b3cert/burau.hpp"
#include "b3cert/hyperbolic.hpp"
#include "b3cert/tiling.hpp"
#include "b3cert/triangle_groups.hpp"

namespace b3cert {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>, boost::multiprecision::et_off>;
using C = Cx<Real>;
using Mob = Mobius<Real>;

constexpr std::size_t kMaxSteps = 200000;
const Real kMarginFloor("1e-170");
const Real kMatchTol("1e-60");

// Free reduction plus syllable exponents taken in (-k/2, k/2], repeated until stable.
FreeWord reduce_mod_k(FreeWord w, long k) {
  for (;;) {
    w = FreeWord(w.rank, free_reduce_letters(w.letters));
    std::vector<int> out;
    bool changed = false;
    for (std::size_t i = 0; i < w.letters.size();) {
      const int g = std::abs(w.letters[i]);
      long e = 0;
      std::size_t j = i;
      for (; j < w.letters.size() && std::abs(w.letters[j]) == g; ++j) e += w.letters[j] > 0 ? 1 : -1;
      long r = ((e % k) + k) % k;
      if (2 * r > k) r -= k;
      if (r != e) changed = true;
      for (long t = 0; t < std::abs(r); ++t) out.push_back(r > 0 ? g : -g);
      i = j;
    }
    w.letters = std::move(out);
    if (!changed) return w;
  }
}

struct Setup {
  unsigned n;
  long s;
  Mob V, V_inv;
  Chamber<Real> chamber;
  C x0;
  FreeWord pair_word[3][3];
};

Mob to_mobius(const ExactMatrix& m, const Setup& st, const Real& pi) {
  const unsigned N = std::lcm(2U, st.n);
  auto e = [&](std::size_t i, std::size_t j) {
    if (N % m(i, j).order() != 0) throw std::invalid_argument("matrix entry outside Q(zeta_n)");
    return embed_as<Real>(m(i, j).lift(N), st.s, pi);
  };
  return st.V_inv * Mob{e(0, 0), e(0, 1), e(1, 0), e(1, 1)} * st.V;
}


Setup make_setup(unsigned k, long m, const Real& pi) {
  Setup st;
  st.n = 2 * k;
  st.s = transport_exponent(st.n, m, std::lcm(2U, st.n));
  using std::cos;
  using std::sqrt;
  const Real alpha = Real(2) * pi / Real(st.n);
  const C q = unit_root<Real>(1, st.n, pi);
  const C one(Real(1));
  const Real a2 = sqrt(Real(2) * cos(alpha) - Real(1)) / cx_abs(one - q);
  const Real a = sqrt(a2);
  const C ca(a), cia(Real(1) / a);
  const C t = one / ((one - q) * ca);
  st.V = Mob{ca, t, C(), cia};
  st.V_inv = Mob{cia, -t, C(), ca};
  const C P = -(q * q - q + one) / (q * (one - q) * C(a2));
  const C Q = q * P;
  st.chamber = Chamber<Real>::from_vertices({C(), P, Q});
  st.x0 = Real("0.3") * P + Real("0.2") * Q;

  const Mob A = to_mobius(eval_word_minus_q(BraidWord(3, {1, 1}), st.n, m), st, pi);
  const Mob B = to_mobius(eval_word_minus_q(BraidWord(3, {2, 2}), st.n, m), st, pi);
  const Mob AB = A * B;
  const std::array<std::pair<FreeWord, Mob>, 6> cands{{{FreeWord(2, {1}), A},
                                                       {FreeWord(2, {-1}), A.inverse()},
                                                       {FreeWord(2, {2}), B},
                                                       {FreeWord(2, {-2}), B.inverse()},
                                                       {FreeWord(2, {1, 2}), AB},
                                                       {FreeWord(2, {-2, -1}), AB.inverse()}}};
  const std::array<C, 2> probes{st.x0, C(Real("0.05"), Real("-0.02"))};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      // Orientation-preserving map z -> r_i(r_j(z)), sampled at the probes.
      bool found = false;
      for (const auto& [w, x] : cands) {
        bool ok = true;
        for (const auto& z : probes)
          if (cx_abs(st.chamber.side[i].reflect(st.chamber.side[j].reflect(z)) - x.apply(z)) > kMatchTol) ok = false;
        if (ok) {
          st.pair_word[i][j] = w;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("chamber reflections do not generate the expected rotations");
    }
  return st;
}

}  // namespace

MembershipCertificate member_delta_kkk(const ExactMatrix& M, unsigned k, long m) {
  if (k < 4) throw std::invalid_argument("membership needs k >= 4 (hyperbolic Delta(k,k,k))");
  if (M.rows() != 2 || M.cols() != 2) throw std::invalid_argument("membership expects a 2x2 matrix");
  if (det2(M).is_zero()) throw std::invalid_argument("singular matrix");
  const Real pi = boost::math::constants::pi<Real>();
  const Setup st = make_setup(k, m, pi);
  const Mob Mbar = to_mobius(M, st, pi);

  // Disk preservation after determinant normalisation: |d| = |a| and |c| = |b| with |a|^2 - |b|^2 = |det|.
  using std::abs;
  const Real det_abs = cx_abs(Mbar.a * Mbar.d - Mbar.b * Mbar.c);
  const Real gap = Mbar.a.norm() - Mbar.b.norm();
  if (abs(gap - det_abs) > Real("1e-40") * (Real(1) + det_abs) || abs(Mbar.a.norm() - Mbar.d.norm()) > Real("1e-40") * (Real(1) + det_abs))
    throw std::invalid_argument("matrix does not preserve the unit disk");

  const C y = Mbar.apply(st.x0);
  const Walk<Real> walk = chamber_walk(st.chamber, y, kMaxSteps);
  if (!walk.converged) throw std::runtime_error("chamber walk did not terminate");
  if (walk.min_margin < kMarginFloor) throw std::runtime_error("orbit point too close to a tile edge for the working precision");

  MembershipCertificate cert;
  cert.margin_log10 = static_cast<double>(log10(walk.min_margin));
  static constexpr char names[3] = {'O', 'P', 'Q'};
  for (int r : walk.reflections) cert.trace.push_back(names[r]);
  if (walk.reflections.size() % 2 == 1) {
    cert.verdict = Verdict::non_member;
    cert.reason = NonMemberReason::color_flip;
    return cert;
  }
  FreeWord w(2);
  for (std::size_t i = 0; i < walk.reflections.size(); i += 2)
    w = w * st.pair_word[walk.reflections[i]][walk.reflections[i + 1]];
  cert.word = reduce_mod_k(w, k);
  const ExactMatrix W = eval_word_minus_q(ab_to_braid(cert.word), 2 * k, m);
  cert.exact_check = true;
  if (projective_equal(M, W)) {
    cert.verdict = Verdict::member;
    cert.reason = NonMemberReason::none;
  } else {
    cert.verdict = Verdict::non_member;
    cert.reason = NonMemberReason::overlap;
  }
  return cert;
}

}  // namespace b3cert
