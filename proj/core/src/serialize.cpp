#include "b3cert/serialize.hpp"

#include <stdexcept>

namespace b3cert {

namespace {

std::vector<std::string> integers(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

void to_json(json& j, const CyclotomicNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  j = json{{"order", x.order()}, {"coeffs", coeffs}};
}

void from_json(const json& j, CyclotomicNumber& x) {
  const unsigned order = j.at("order").get<unsigned>();
  std::vector<Rational> c;
  for (const auto& e : j.at("coeffs")) {
    auto part = [](const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()); };
    Rational r(Integer(part(e.at(0))), Integer(part(e.at(1))));
    r.canonicalize();
    c.push_back(r);
  }
  x = CyclotomicNumber::from_powers(order, c);
}

void to_json(json& j, const LaurentPoly& p) {
  j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
}

void from_json(const json& j, LaurentPoly& p) {
  p = LaurentPoly();
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    const long e = std::stol(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad Laurent exponent " + key);
    p += LaurentPoly(Integer(val.is_string() ? val.get<std::string>() : std::to_string(val.get<long>())), e);
  }
}

void to_json(json& j, const ExactMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
}

void from_json(const json& j, ExactMatrix& m) {
  const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  m = ExactMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<CyclotomicNumber>();
  }
}

void to_json(json& j, const LaurentMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
}

void to_json(json& j, const ComplexMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    j.push_back(row);
  }
}

void to_json(json& j, const FreeWord& w) { j = json{{"rank", w.rank}, {"letters", w.letters}, {"text", w.to_string()}}; }

void to_json(json& j, const BraidWord& w) {
  j = json{{"strands", w.strands}, {"letters", w.letters}, {"text", w.to_string()}};
}

void to_json(json& j, const Isometry& iso) {
  j = json{{"kind", to_string(iso.kind)}};
  if (iso.center) {
    j["center"] = complex_json(iso.center->z);
    j["angle"] = iso.angle;
    j["orientation"] = iso.orientation;
  }
}

void to_json(json& j, const HypTriangle& t) {
  json v = json::array();
  for (const auto& p : t.vertices) v.push_back(complex_json(p.z));
  j = json{{"vertices", v}, {"angles", t.angles}, {"sides", t.sides}};
}

void to_json(json& j, const UnitarityClass& c) { j = json{{"class", to_string(c.tag)}, {"epsilon", c.epsilon}}; }

void to_json(json& j, const AxisAngle& a) { j = json{{"axis", a.axis}, {"angle", a.angle}}; }

void to_json(json& j, const TrianglePresentation& t) {
  std::vector<std::string> rel;
  for (const auto& r : t.relators) rel.push_back(r.to_string(t.generators));
  j = json{{"generators", t.generators}, {"relators", rel},       {"exponents", {t.p1, t.p2, t.p3}},
           {"euclidean", t.euclidean},   {"hyperbolic", t.hyperbolic}, {"note", t.note}};
}

void to_json(json& j, const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"relator", c.name},
                          {"projective_identity", c.projective_identity},
                          {"exact_identity", c.exact_identity},
                          {"pass", c.pass}});
  j = json{{"n", r.n}, {"m", r.m}, {"checks", checks}, {"all_pass", r.all_pass}};
}

void to_json(json& j, const IsoReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"check", c.name}, {"pass", c.pass}});
  j = json{{"k", r.k},         {"alpha", r.alpha.to_string()}, {"u", r.u.to_string()},
           {"v", r.v.to_string()}, {"checks", checks},             {"all_pass", r.all_pass}};
}

void to_json(json& j, const ClosureResult& r) {
  j = json{{"finite", r.finite}, {r.finite ? "order" : "visited", r.order}};
}

void to_json(json& j, const MembershipCertificate& c) {
  j = json{{"verdict", to_string(c.verdict)},
           {"reason", to_string(c.reason)},
           {"word", c.word.to_string({"A", "B"})},
           {"trace", std::string(c.trace.begin(), c.trace.end())},
           {"exact_check", c.exact_check},
           {"margin_log10", c.margin_log10}};
}

void to_json(json& j, const CommutatorIdentityReport& r) {
  json factors = json::array();
  for (const auto& [u, v] : r.factors) factors.push_back({u.to_string(), v.to_string()});
  j = json{{"D", r.D},
           {"holds", r.holds},
           {"convention", r.convention},
           {"factors", factors},
           {"lhs", r.lhs.to_string()},
           {"rhs", r.rhs.to_string()}};
}

void to_json(json& j, const AbelianCert& c) {
  j = json{{"D", c.D},
           {"generator_count", c.generator_count},
           {"class_vector", integers(c.class_vector)},
           {"base_relation", integers(c.base_relation)},
           {"relation_rank", c.relation_rank},
           {"infinite", c.infinite}};
  j["order"] = c.order ? json(c.order->get_str()) : json(nullptr);
}

void to_json(json& j, const FreeProductWord& w) {
  j = json{{"modulus", w.modulus}, {"trivial", w.is_trivial()}, {"normal_form", w.to_string()}};
}

void to_json(json& j, const Pb3Decomposition& d) {
  j = json{{"f", d.f.to_string({"A", "B"})}, {"center_power", d.m}};
}

}  // namespace b3cert
