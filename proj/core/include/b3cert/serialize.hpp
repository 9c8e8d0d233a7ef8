#pragma once

#include <nlohmann/json.hpp>

#include "b3cert/braid.hpp"
#include "b3cert/burau.hpp"
#include "b3cert/cyclotomic.hpp"
#include "b3cert/free_group.hpp"
#include "b3cert/hyperbolic.hpp"
#include "b3cert/laurent.hpp"
#include "b3cert/matrix.hpp"
#include "b3cert/triangle_groups.hpp"

namespace b3cert {

using json = nlohmann::json;

// {"order": n, "coeffs": [[num, den], ...]} with coefficients on zeta_n^0..zeta_n^{phi(n)-1}.
void to_json(json& j, const CyclotomicNumber& x);
void from_json(const json& j, CyclotomicNumber& x);

// {"e": "c", ...}; big coefficients stay exact as strings.
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);

void to_json(json& j, const ExactMatrix& m);
void from_json(const json& j, ExactMatrix& m);
void to_json(json& j, const LaurentMatrix& m);
void to_json(json& j, const ComplexMatrix& m);

void to_json(json& j, const FreeWord& w);
void to_json(json& j, const BraidWord& w);
void to_json(json& j, const Isometry& iso);
void to_json(json& j, const HypTriangle& t);
void to_json(json& j, const UnitarityClass& c);
void to_json(json& j, const AxisAngle& a);
void to_json(json& j, const TrianglePresentation& t);
void to_json(json& j, const RelationReport& r);
void to_json(json& j, const IsoReport& r);
void to_json(json& j, const ClosureResult& r);
void to_json(json& j, const MembershipCertificate& c);
void to_json(json& j, const CommutatorIdentityReport& r);
void to_json(json& j, const AbelianCert& c);
void to_json(json& j, const FreeProductWord& w);
void to_json(json& j, const Pb3Decomposition& d);

}  // namespace b3cert
