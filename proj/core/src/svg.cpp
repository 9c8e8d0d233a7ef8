#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "b3cert/hyperbolic.hpp"
#include "b3cert/tiling.hpp"

namespace b3cert {

namespace {

constexpr double kCenter = 500.0;
constexpr double kRadius = 480.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string pt(Complex z) { return fmt(kCenter + kRadius * z.real()) + "," + fmt(kCenter - kRadius * z.imag()); }

// Cubic Bezier pieces for the geodesic from p to r, appended as "C" commands.
void append_arc(std::ostringstream& d, Complex p, Complex r) {
  const auto g = Geodesic<double>::through(Cx<double>(p.real(), p.imag()), Cx<double>(r.real(), r.imag()));
  const Complex B(g.B.re, g.B.im);
  if (std::abs(g.A) < 1e-12 * std::abs(B)) {
    d << " L " << pt(r);
    return;
  }
  const Complex c = -B / g.A;
  const double rad = std::sqrt(std::norm(B) / (g.A * g.A) - 1);
  const double t0 = std::arg(p - c);
  double sweep = std::remainder(std::arg(r - c) - t0, 2 * std::numbers::pi);
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / (std::numbers::pi / 2))));
  const double step = sweep / pieces;
  const double k = 4.0 / 3.0 * std::tan(step / 4);
  for (int i = 0; i < pieces; ++i) {
    const double a0 = t0 + i * step, a1 = a0 + step;
    const Complex e0 = std::polar(1.0, a0), e1 = std::polar(1.0, a1);
    const Complex z0 = c + rad * e0, z1 = c + rad * e1;
    const Complex c0 = z0 + k * rad * Complex(0, 1) * e0;
    const Complex c1 = z1 - k * rad * Complex(0, 1) * e1;
    d << " C " << pt(c0) << " " << pt(c1) << " " << pt(i + 1 == pieces ? r : z1);
  }
}

std::string triangle_path(const std::array<Complex, 3>& v, const char* fill) {
  std::ostringstream d;
  d << "M " << pt(v[0]);
  append_arc(d, v[0], v[1]);
  append_arc(d, v[1], v[2]);
  append_arc(d, v[2], v[0]);
  d << " Z";
  std::ostringstream out;
  out << "<path d=\"" << d.str() << "\" fill=\"" << fill << "\" stroke=\"#808080\" stroke-width=\"0.6\"/>\n";
  return out.str();
}

}  // namespace

std::string tessellation_svg(unsigned k, unsigned depth, bool coloring) {
  if (k < 4) throw std::invalid_argument("tessellation needs k >= 4 (the group is not a hyperbolic lattice otherwise)");
  if (depth > 12) throw std::invalid_argument("tessellation depth above 12 is not supported");
  const U11Model model = u11_generators(2 * k);
  const Complex O(0, 0), P = model.P, Q = model.Q;
  const auto pq = Geodesic<double>::through(Cx<double>(P.real(), P.imag()), Cx<double>(Q.real(), Q.imag()));
  const Cx<double> o2 = pq.reflect(Cx<double>(0, 0));
  const Complex O2(o2.re, o2.im);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\" width=\"1000\" "
         "height=\"1000\">\n"
      << "<title>Delta(" << k << "," << k << "," << k << ") rhombus orbit, depth " << depth << "</title>\n"
      << "<circle cx=\"500\" cy=\"500\" r=\"480\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& el : rhombus_orbit(model, depth)) {
    auto img = [&](Complex z) { return moebius_apply(el.matrix, DiskPoint{z}).z; };
    svg << "<!-- " << el.word.to_string({"A", "B"}) << " -->\n";
    svg << triangle_path({img(O), img(P), img(Q)}, coloring ? "white" : "none");
    svg << triangle_path({img(O2), img(Q), img(P)}, coloring ? "black" : "none");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace b3cert
