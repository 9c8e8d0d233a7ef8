#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "b3cert/braid.hpp"
#include "b3cert/matrix.hpp"

namespace b3cert {

using Complex = std::complex<double>;

enum class IsometryKind { elliptic, parabolic, hyperbolic };
std::string to_string(IsometryKind k);

struct DiskPoint {
  Complex z;
  double error_bound = 0;
};

struct Isometry {
  ComplexMatrix matrix;
  IsometryKind kind = IsometryKind::elliptic;
  std::optional<DiskPoint> center;  // elliptic only
  double angle = 0;                 // unsigned rotation angle in [0, pi], elliptic only
  int orientation = 0;              // +1 counterclockwise, -1 clockwise

  /// Classifies by the real trace of the determinant-one rescaling; throws if
  /// the matrix does not preserve the unit disk.
  static Isometry from_matrix(const ComplexMatrix& m);
};

struct HypTriangle {
  std::array<DiskPoint, 3> vertices;
  std::array<double, 3> angles;  // at each vertex
  std::array<double, 3> sides;   // side i is opposite vertex i
};

DiskPoint moebius_apply(const ComplexMatrix& m, const DiskPoint& z);
double hyp_distance(Complex z, Complex w);

struct RotationData {
  DiskPoint center;
  double angle;
  int orientation;
  double signed_angle() const { return orientation * angle; }
};
/// Throws for parabolic or hyperbolic input.
RotationData rotation_data(const Isometry& m);

/// Galois exponent s with s m = 1 mod n and gcd(s, N) = 1, so the embedding
/// zeta_N -> exp(2 pi i s / N) sends zeta_n^m to exp(2 pi i / n).
long transport_exponent(unsigned n, long m, unsigned N);

/// Disk model of Gamma_{-q} for q = zeta_n^m, transported to alpha = 2 pi / n.
struct U11Model {
  unsigned n = 0;
  long m = 1;
  double alpha = 0;
  Complex q;
  double a2 = 0;  // the positive real a^2
  ComplexMatrix V;
  ComplexMatrix V_inv;
  Isometry A, B, AB, D, g1;
  Complex P, Q;  // closed forms for the centers of B and AB

  /// V^-1 Z V for an exact beta_{-q} matrix Z.
  ComplexMatrix conjugate(const ExactMatrix& z) const;
  ComplexMatrix conjugate_word(const BraidWord& w) const;
};

/// Requires the U(1,1) regime, i.e. n >= 7.
U11Model u11_generators(unsigned n, long galois = 1);

HypTriangle triangle_OPQ(unsigned n, long galois = 1);

/// Discreteness of the rotation group of the equilateral triangle with angles 2 pi m / n.
bool discreteness_predicate(long m, long n);

/// SVG of the orbit of the rhombus Delta u r_O(Delta) for Delta(k,k,k), n = 2k.
std::string tessellation_svg(unsigned k, unsigned depth, bool coloring);

/// Orbit elements used by the renderer: words in A, B (letters 1, 2) up to length depth
/// over A^{+-1}, B^{+-1}, (AB)^{+-1}, deduplicated and canonically ordered.
struct OrbitElement {
  FreeWord word;
  ComplexMatrix matrix;
};
std::vector<OrbitElement> rhombus_orbit(const U11Model& model, unsigned depth);

}  // namespace b3cert
