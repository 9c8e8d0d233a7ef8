#include "b3cert/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "b3cert/serialize.hpp"

namespace b3cert::cli {

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.3.0";

struct Flags {
  unsigned n = 0;
  long galois = 1;
  std::vector<std::string> words;
  std::string braid;
  unsigned k = 0;
  long D = 0;
  long F = 0;
  int depth = -1;
  std::size_t bound = 10000;
  unsigned strands = 3;
  std::string out;
  std::string format;  // empty: JSON, except SVG for geom tessellate
  bool no_color = false;
  bool timings = false;
  std::string suite;
};

struct Result {
  json payload;
  bool exact = true;
  bool negative = false;
  std::string svg;  // set by the renderer instead of a payload
};

const std::string& one_word(const Flags& f) {
  if (f.words.size() != 1) throw std::invalid_argument("exactly one --word is required");
  return f.words.front();
}

double alpha_of(const Flags& f) {
  if (std::gcd(static_cast<long>(f.n), f.galois) != 1) throw std::invalid_argument("--galois must be coprime to --n");
  const long m = ((f.galois % static_cast<long>(f.n)) + f.n) % f.n;
  return 2 * std::numbers::pi * static_cast<double>(m) / f.n;
}

json text_matrix(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

// burau ---------------------------------------------------------------------

Result burau_eval(const Flags& f) {
  const BraidWord w = BraidWord::parse(one_word(f), static_cast<int>(f.strands));
  const ExactMatrix m = eval_word_minus_q(w, f.n, f.galois);
  Result r;
  r.payload = {{"word", w},
               {"n", f.n},
               {"galois", f.galois},
               {"parameter", "-q with q = zeta_n^galois"},
               {"matrix", m},
               {"matrix_text", text_matrix(m)},
               {"generic_burau_q", eval_word_generic(w)}};
  return r;
}

Result burau_classify(const Flags& f) {
  const double alpha = alpha_of(f);
  Result r;
  r.exact = false;
  r.payload = {{"n", f.n}, {"galois", f.galois}, {"alpha", alpha}, {"form", classify_form(alpha)}};
  return r;
}

Result burau_so3(const Flags& f) {
  const double alpha = alpha_of(f);
  const JonesPair jp = jones_pair_numeric(alpha);
  Result r;
  r.exact = false;
  r.payload = {{"n", f.n}, {"galois", f.galois}, {"alpha", alpha}, {"epsilon", jp.epsilon}, {"c", jp.c}};
  if (jp.epsilon != 1) {
    r.negative = true;
    r.payload["unitary"] = false;
    return r;
  }
  r.payload["unitary"] = true;
  r.payload["su2_scalar"] = complex_pair(su2_scalar(alpha));
  r.payload["g1"] = axis_angle(jp.g1);
  r.payload["g2"] = axis_angle(jp.g2);
  const AxesAngle ax = jones_axes_angle(alpha);
  r.payload["axes_angle"] = ax.theta;
  r.payload["axes_signed_cos"] = ax.signed_cos;
  if (!f.words.empty()) {
    const BraidWord w = BraidWord::parse(one_word(f), 3);
    ComplexMatrix m = ComplexMatrix::identity(2);
    const ComplexMatrix g1i = inverse2(jp.g1), g2i = inverse2(jp.g2);
    for (int x : w.letters) m = m * (x == 1 ? jp.g1 : x == -1 ? g1i : x == 2 ? jp.g2 : g2i);
    r.payload["word"] = w;
    r.payload["word_rotation"] = axis_angle(m);
  }
  return r;
}

// geom ----------------------------------------------------------------------

Result geom_triangle(const Flags& f) {
  const U11Model mod = u11_generators(f.n, f.galois);
  Result r;
  r.exact = false;
  r.payload = {{"n", f.n},
               {"galois", f.galois},
               {"alpha", mod.alpha},
               {"P", complex_pair(mod.P)},
               {"Q", complex_pair(mod.Q)},
               {"abs_P", std::abs(mod.P)},
               {"triangle", triangle_OPQ(f.n, f.galois)},
               {"A", mod.A},
               {"B", mod.B},
               {"AB", mod.AB},
               {"D", mod.D},
               {"discrete", discreteness_predicate(f.galois, f.n)}};
  return r;
}

Result geom_tessellate(const Flags& f) {
  if (f.k == 0) throw std::invalid_argument("--k is required");
  const unsigned depth = f.depth < 0 ? 3 : static_cast<unsigned>(f.depth);
  Result r;
  r.exact = false;
  r.svg = tessellation_svg(f.k, depth, !f.no_color);
  if (f.format == "json") {
    r.payload = {{"k", f.k}, {"depth", depth}, {"svg", r.svg}};
    r.svg.clear();
  }
  return r;
}

Result geom_classify(const Flags& f) {
  const U11Model mod = u11_generators(f.n, f.galois);
  const BraidWord w = BraidWord::parse(one_word(f), 3);
  const ComplexMatrix m = mod.conjugate_word(w);
  Result r;
  r.exact = false;
  r.payload = {{"n", f.n}, {"galois", f.galois}, {"word", w}, {"disk_matrix", m}, {"isometry", Isometry::from_matrix(m)}};
  return r;
}

// triangle ------------------------------------------------------------------

Result triangle_presentation_cmd(const Flags& f) {
  const ImagePresentation p = image_presentation(f.n);
  json rel = json::array();
  for (const auto& x : p.relators)
    rel.push_back({{"name", x.name}, {"base", x.base.to_string()}, {"power", x.power}, {"center", x.is_center}});
  Result r;
  r.payload = {{"n", f.n},
               {"parity", p.even ? "even" : "odd"},
               {"k", p.k},
               {"center_exponent", p.center_exponent},
               {"relators", rel},
               {"gamma", gamma_presentation(f.n)}};
  return r;
}

Result triangle_verify(const Flags& f) {
  const RelationReport rep = verify_relations(f.n, f.galois);
  Result r;
  r.payload = rep;
  r.negative = !rep.all_pass;
  return r;
}

unsigned k_of(const Flags& f) {
  if (f.k != 0) return f.k;
  if (f.n != 0) {
    if (f.n % 2 != 0) throw std::invalid_argument("membership needs even n = 2k");
    return f.n / 2;
  }
  throw std::invalid_argument("--k (or even --n) is required");
}

Result triangle_member(const Flags& f) {
  const unsigned k = k_of(f);
  const BraidWord w = BraidWord::parse(one_word(f), 3);
  const MembershipCertificate cert = member_delta_kkk(eval_word_minus_q(w, 2 * k, f.galois), k, f.galois);
  Result r;
  r.payload = {{"k", k}, {"galois", f.galois}, {"input", w}, {"certificate", cert}};
  r.exact = cert.exact_check;
  r.negative = cert.verdict == Verdict::non_member;
  return r;
}

Result triangle_closure(const Flags& f) {
  const ClosureResult c = finite_image_closure(f.n, f.bound, f.galois);
  Result r;
  r.payload = {{"order_of_parameter", f.n}, {"galois", f.galois}, {"bound", f.bound}, {"closure", c}};
  return r;
}

Result triangle_iso(const Flags& f) {
  if (f.k == 0) throw std::invalid_argument("--k is required");
  const IsoReport rep = iso_2_3_odd(f.k);
  Result r;
  r.payload = rep;
  r.negative = !rep.all_pass;
  return r;
}

// free ----------------------------------------------------------------------

Result free_identity(const Flags& f) {
  const CommutatorIdentityReport rep = commutator_identity_check(f.D);
  Result r;
  r.payload = rep;
  r.negative = !rep.holds;
  return r;
}

Result free_witness(const Flags& f) {
  if (f.k == 0) throw std::invalid_argument("--k is required");
  const FreeProductWord w = squier_witness(f.k);
  Result r;
  r.payload = {{"k", f.k}, {"word", "(ab)^" + std::to_string(f.k)}, {"image", w}, {"syllables", w.syllables.size()}};
  r.negative = w.is_trivial();
  return r;
}

Result free_h1(const Flags& f) {
  if (f.F < 1) throw std::invalid_argument("--F must be positive");
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  const FreeWord el = commutator(a.pow(f.F), b.pow(f.F));
  const AbelianCert cert = h1_cert(f.D, el);
  Result r;
  r.payload = {{"D", f.D}, {"F", f.F}, {"element", el.to_string()}, {"certificate", cert}};
  bool zero = true;
  for (const auto& x : cert.class_vector) zero = zero && sgn(x) == 0;
  r.negative = zero || (!cert.infinite && cert.order && *cert.order == 1);
  return r;
}

json depth_json(const std::optional<int>& d) { return d ? json(*d) : json(nullptr); }

Result free_depth(const Flags& f) {
  const int dmax = f.depth < 0 ? 8 : f.depth;
  Result r;
  if (!f.braid.empty()) {
    const BraidWord b = BraidWord::parse(f.braid, static_cast<int>(f.strands));
    json ls = json::array();
    for (const auto& l : longitudes(b))
      ls.push_back({{"longitude", l.to_string()}, {"depth", depth_json(magnus_depth(l, dmax))}});
    r.payload = {{"braid", b}, {"dmax", dmax}, {"longitudes", ls}};
    return r;
  }
  const FreeWord w = free_reduce(FreeWord::parse(one_word(f)));
  r.payload = {{"word", w}, {"dmax", dmax}, {"depth", depth_json(magnus_depth(w, dmax))}};
  return r;
}

Result free_zeta(const Flags& f) {
  const int dmax = f.depth < 0 ? 8 : f.depth;
  const FreeWord w = free_reduce(FreeWord::parse(one_word(f), 3));
  if (w.rank > 3) throw std::invalid_argument("zeta is defined on the free group of rank 3");
  const FreeWord z = zeta_embed(w);
  Result r;
  r.payload = {{"word", w},
               {"image", z.to_string({"y1", "z1", "y2", "z2", "y3", "z3"})},
               {"dmax", dmax},
               {"depth", depth_json(magnus_depth(w, dmax))},
               {"image_depth", depth_json(magnus_depth(z, dmax))}};
  return r;
}

// braid ---------------------------------------------------------------------

Result braid_equal(const Flags& f) {
  if (f.words.size() != 2) throw std::invalid_argument("braid equal needs two --word options");
  const BraidWord u = BraidWord::parse(f.words[0]), v = BraidWord::parse(f.words[1]);
  const bool eq = word_equal_b3(u, v);
  Result r;
  r.payload = {{"u", u}, {"v", v}, {"equal", eq}};
  r.negative = !eq;
  return r;
}

Result braid_rewrite(const Flags& f) {
  const BraidWord w = BraidWord::parse(one_word(f));
  if (!is_pure(w))
    throw std::invalid_argument("word is not a pure braid (permutation " + permutation_of(w).to_string() + ")");
  const Pb3Decomposition d = pb3_rewrite(w);
  Result r;
  r.payload = {{"word", w}, {"decomposition", d}, {"verified", word_equal_b3(d.recompose(), w)}};
  return r;
}

Result suite_cmd(const Flags& f) {
  Result r;
  r.payload = run_suite(f.suite);
  r.negative = !r.payload.at("pass").get<bool>();
  return r;
}

using Handler = std::function<Result(const Flags&)>;

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Flags f;
  CLI::App app{"Exact certificates for Burau images of B_3 and triangle groups", "b3cert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Handler chosen;
  std::string path;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->add_option("--out", f.out, "write the output to a file");
    sub->add_option("--format", f.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    sub->add_flag("--timings", f.timings, "append wall-clock timings");
    sub->callback([&, parent, name, h] {
      path = parent->get_name() + " " + name;
      chosen = h;
    });
    return sub;
  };
  auto n_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--n", f.n, "root order n")->check(CLI::Range(2u, 100000u));
    if (required) o->required();
    s->add_option("--galois", f.galois, "exponent m of q = zeta_n^m");
  };
  auto word_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--word", f.words, "word, e.g. \"g1 g2^-1\" or \"1 -2\"");
    if (required) o->required();
  };

  CLI::App* burau = app.add_subcommand("burau", "Burau and Jones representations")->require_subcommand(1);
  {
    auto* s = leaf(burau, "eval", "exact beta_{-q} of a braid word", burau_eval);
    n_opt(s, true);
    word_opt(s, true);
    s->add_option("--strands", f.strands, "number of strands")->check(CLI::Range(2u, 64u));
    n_opt(leaf(burau, "classify", "invariant Hermitian form of beta_t", burau_classify), true);
    s = leaf(burau, "so3", "SO(3) images of the unitary Jones pair", burau_so3);
    n_opt(s, true);
    word_opt(s, false);
  }

  CLI::App* geom = app.add_subcommand("geom", "disk model of Gamma_{-q}")->require_subcommand(1);
  {
    n_opt(leaf(geom, "triangle", "triangle OPQ and the generator rotations", geom_triangle), true);
    auto* s = leaf(geom, "tessellate", "SVG of the rhombus orbit of Delta(k,k,k)", geom_tessellate);
    s->add_option("--k", f.k, "k with n = 2k")->required()->check(CLI::Range(1u, 1000u));
    s->add_option("--depth", f.depth, "orbit word length")->check(CLI::Range(0, 12));
    s->add_flag("--no-color", f.no_color, "outline only");
    s = leaf(geom, "classify", "isometry type of a braid word's image", geom_classify);
    n_opt(s, true);
    word_opt(s, true);
  }

  CLI::App* tri = app.add_subcommand("triangle", "triangle-group presentations and membership")->require_subcommand(1);
  {
    n_opt(leaf(tri, "presentation", "relators of the image and of Gamma_{-q}", triangle_presentation_cmd), true);
    n_opt(leaf(tri, "verify", "evaluate every relator exactly", triangle_verify), true);
    auto* s = leaf(tri, "member", "membership certificate in Delta(k,k,k)", triangle_member);
    s->add_option("--k", f.k, "k with n = 2k")->check(CLI::Range(1u, 1000u));
    n_opt(s, false);
    word_opt(s, true);
    s = leaf(tri, "closure", "projective closure of the image at t = zeta_n^m", triangle_closure);
    n_opt(s, false);
    s->get_option("--n")->required();
    s->add_option("--bound", f.bound, "element bound")->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
    s = leaf(tri, "iso", "Delta(2,3,2k+1) dictionary", triangle_iso);
    s->add_option("--k", f.k, "k with n = 2k+1")->required()->check(CLI::Range(1u, 1000u));
  }

  CLI::App* fr = app.add_subcommand("free", "free-group computations")->require_subcommand(1);
  {
    auto* s = leaf(fr, "identity", "commutator product identity for (ab)^D a^-D b^-D", free_identity);
    s->add_option("--D", f.D, "D")->required()->check(CLI::Range(2L, 100000L));
    s = leaf(fr, "witness", "normal form of (ab)^k in Z/k * Z/k", free_witness);
    s->add_option("--k", f.k, "k")->required()->check(CLI::Range(2u, 100000u));
    s = leaf(fr, "h1", "class of [a^F, b^F] in H1 of the commutator subgroup of Delta(D,D,D)", free_h1);
    s->add_option("--D", f.D, "D")->required()->check(CLI::Range(2L, 64L));
    s->add_option("--F", f.F, "F")->required()->check(CLI::Range(1L, 100000L));
    s = leaf(fr, "depth", "lower central depth via the Magnus expansion", free_depth);
    word_opt(s, false);
    s->add_option("--braid", f.braid, "pure braid whose longitudes are measured");
    s->add_option("--strands", f.strands, "number of strands")->check(CLI::Range(2u, 64u));
    s->add_option("--depth", f.depth, "truncation degree")->check(CLI::Range(1, 16));
    s = leaf(fr, "zeta", "image under x_i -> [y_i, z_i]", free_zeta);
    word_opt(s, true);
    s->add_option("--depth", f.depth, "truncation degree")->check(CLI::Range(1, 16));
  }

  CLI::App* br = app.add_subcommand("braid", "3-strand braid words")->require_subcommand(1);
  {
    auto* s = leaf(br, "equal", "equality in B_3", braid_equal);
    word_opt(s, true);
    s = leaf(br, "rewrite", "pure 3-braid as f(A, B) Z^m", braid_rewrite);
    word_opt(s, true);
  }

  {
    CLI::App* s = app.add_subcommand("suite", "run a named batch of checks");
    s->add_option("name", f.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    s->add_option("--out", f.out, "write the output to a file");
    s->add_flag("--timings", f.timings, "append wall-clock timings");
    s->callback([&] {
      path = "suite " + f.suite;
      chosen = suite_cmd;
    });
  }

  Outcome res;
  std::vector<const char*> argv{"b3cert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? kExitOk : kExitInput;
    return res;
  }

  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    if (f.format == "svg" && path != "geom tessellate") throw std::invalid_argument("--format svg is only available for geom tessellate");
    r = chosen(f);
  } catch (const std::exception& e) {
    res.err = "error: " + std::string(e.what()) + "\n";
    res.exit_code = kExitInput;
    return res;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string doc;
  if (!r.svg.empty()) {
    doc = r.svg;
  } else {
    json env = {{"command", path},
                {"arguments", args},
                {"result", r.payload},
                {"exact_verified", r.exact},
                {"version", kVersion},
                {"schema", kSchemaVersion}};
    if (f.timings) env["timings"] = {{"wall_ms", ms}};
    doc = env.dump(2) + "\n";
  }
  if (!f.out.empty()) {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      res.err = "error: cannot write " + f.out + "\n";
      res.exit_code = kExitInput;
      return res;
    }
    file << doc;
  } else {
    res.out = doc;
  }
  res.exit_code = r.negative ? kExitNegative : kExitOk;
  return res;
}

}  // namespace b3cert::cli
