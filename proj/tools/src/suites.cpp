#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "b3cert/cli.hpp"
#include "b3cert/serialize.hpp"

namespace b3cert::cli {

namespace {

json item(const std::string& name, bool pass, json detail = nullptr) {
  json j = {{"item", name}, {"pass", pass}};
  if (!detail.is_null()) j["detail"] = std::move(detail);
  return j;
}

json theorem_b3() {
  json items = json::array();
  for (unsigned n = 4; n <= 24; ++n)
    for (long m = 1; m < static_cast<long>(n); ++m) {
      if (std::gcd(static_cast<long>(n), m) != 1) continue;
      const RelationReport rep = verify_relations(n, m);
      json failed = json::array();
      for (const auto& c : rep.checks)
        if (!c.pass) failed.push_back(c.name);
      items.push_back(item("n=" + std::to_string(n) + " m=" + std::to_string(m), rep.all_pass,
                           failed.empty() ? json(nullptr) : json{{"failed", failed}}));
    }
  return items;
}

json geometry() {
  constexpr double tol = 1e-10;
  json items = json::array();
  for (unsigned n : {8u, 10u, 12u, 14u, 16u, 20u, 24u}) {
    const U11Model mod = u11_generators(n);
    const double alpha = mod.alpha;
    const std::string tag = "n=" + std::to_string(n) + " ";
    const double radicand = std::abs(1 + 2 * std::cos(alpha + std::numbers::pi));
    items.push_back(item(tag + "|P|", std::abs(std::abs(mod.P) - std::sqrt(radicand)) < tol));
    const HypTriangle t = triangle_OPQ(n);
    bool eq = true;
    for (double a : t.angles) eq = eq && std::abs(a - alpha) < tol;
    items.push_back(item(tag + "equilateral", eq, {{"angles", t.angles}}));
    bool rot = true;
    for (const Isometry* g : {&mod.A, &mod.B, &mod.AB})
      rot = rot && g->kind == IsometryKind::elliptic && std::abs(g->angle - 2 * alpha) < tol;
    rot = rot && mod.D.kind == IsometryKind::elliptic && std::abs(mod.D.angle - alpha) < tol;
    items.push_back(item(tag + "rotation angles", rot));
    items.push_back(item(tag + "B fixes P, AB fixes Q",
                         std::abs(mod.B.center->z - mod.P) < tol && std::abs(mod.AB.center->z - mod.Q) < tol));
    const Complex dq = moebius_apply(mod.D.matrix, DiskPoint{mod.Q}).z;
    items.push_back(item(tag + "D(Q) = 0", std::abs(dq) < tol));
  }
  return items;
}

json squier() {
  json items = json::array();
  for (long k = 2; k <= 64; ++k) {
    const FreeProductWord w = squier_witness(k);
    items.push_back(item("witness k=" + std::to_string(k), !w.is_trivial(), {{"syllables", w.syllables.size()}}));
  }
  for (long D = 2; D <= 64; ++D) {
    const CommutatorIdentityReport rep = commutator_identity_check(D);
    items.push_back(item("identity D=" + std::to_string(D), rep.holds, {{"convention", rep.convention}}));
  }
  return items;
}

json johnson() {
  json items = json::array();
  const BraidWord d11 = BraidWord::A() * BraidWord::B() * BraidWord::A().inverse() * BraidWord::B().inverse();
  const auto ls = longitudes(d11);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto d = magnus_depth(ls[i], 8);
    items.push_back(item("longitude " + std::to_string(i + 1) + " of [g1^2, g2^2]", !d || *d >= 2,
                         {{"longitude", ls[i].to_string()}, {"depth", d ? json(*d) : json(nullptr)}}));
  }
  const FreeWord x1 = FreeWord::generator(3, 1), x2 = FreeWord::generator(3, 2);
  const FreeWord c = commutator(x1, x2);
  const std::vector<std::pair<std::string, FreeWord>> words{{"x1", x1}, {"[x1,x2]", c}, {"[[x1,x2],x1]", commutator(c, x1)}};
  for (const auto& [name, w] : words) {
    const auto d = magnus_depth(w, 8);
    const auto dz = magnus_depth(zeta_embed(w), 8);
    const bool pass = d && (!dz || *dz >= 2 * *d);
    items.push_back(item("zeta " + name, pass, {{"depth", d ? json(*d) : json(nullptr)}, {"image_depth", dz ? json(*dz) : json(nullptr)}}));
  }
  return items;
}

json h1() {
  json items = json::array();
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  for (long D : {4L, 6L, 8L, 10L, 12L})
    for (long F = 1; F < D; ++F) {
      if (D % F != 0) continue;
      const AbelianCert c = h1_cert(D, commutator(a.pow(F), b.pow(F)));
      items.push_back(item("D=" + std::to_string(D) + " F=" + std::to_string(F), c.infinite,
                           {{"relation_rank", c.relation_rank}, {"generators", c.generator_count}}));
    }
  return items;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-b3", "geometry", "squier", "johnson", "h1"};
  return names;
}

json run_suite(const std::string& name) {
  json items;
  if (name == "theorem-b3") items = theorem_b3();
  else if (name == "geometry") items = geometry();
  else if (name == "squier") items = squier();
  else if (name == "johnson") items = johnson();
  else if (name == "h1") items = h1();
  else throw std::invalid_argument("unknown suite " + name);
  bool pass = true;
  for (const auto& it : items) pass = pass && it.at("pass").get<bool>();
  return {{"suite", name}, {"items", items}, {"pass", pass}};
}

}  // namespace b3cert::cli
