#pragma once

#include <optional>
#include <string>
#include <vector>

#include "b3cert/braid.hpp"
#include "b3cert/matrix.hpp"

namespace b3cert {

/// <a, b, c ; a^p1 = b^p2 = c^p3 = abc = 1> with relators over a, b and c = (ab)^-1.
struct TrianglePresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
  long p1 = 0, p2 = 0, p3 = 0;
  bool euclidean = false;
  bool hyperbolic = false;
  std::string note;
};

/// Delta(p1, p2, p3) on generators a, b.
TrianglePresentation triangle_presentation(long p1, long p2, long p3);

/// base^power.
struct NamedRelator {
  std::string name;
  BraidWord base;
  long power = 1;
  bool is_center = false;
  BraidWord word() const { return base.pow(power); }
};

struct ImagePresentation {
  unsigned n = 0;
  bool even = true;
  long k = 0;
  long center_exponent = 0;
  std::vector<NamedRelator> relators;
};

/// Relators of the image of B_3 under beta_{-q}, q a primitive n-th root.
ImagePresentation image_presentation(unsigned n);

struct RelatorCheck {
  std::string name;
  bool projective_identity = false;
  bool exact_identity = false;
  bool pass = false;
};

struct RelationReport {
  unsigned n = 0;
  long m = 1;
  std::vector<RelatorCheck> checks;
  bool all_pass = false;
};

/// Every relator projectively trivial under exact beta_{-q}, the center relator exactly.
RelationReport verify_relations(unsigned n, long m = 1);

/// Gamma_{-q} on A = g1^2 and B = g2^2.
TrianglePresentation gamma_presentation(unsigned n);

struct IsoCheck {
  std::string name;
  bool pass = false;
};
struct IsoReport {
  long k = 0;
  FreeWord alpha, u, v;  // over a, b
  std::vector<IsoCheck> checks;
  bool all_pass = false;
};

/// Delta(2,3,2k+1) dictionary alpha = a^{k+1}, u = a^-1 b^k a^k, v = a^k b^k a^k, checked exactly at q = zeta_{2k+1}.
IsoReport iso_2_3_odd(long k);

/// Braid word with a -> g1^2, b -> g2^2.
BraidWord ab_to_braid(const FreeWord& w);

struct ClosureResult {
  bool finite = false;
  std::size_t order = 0;  // element count when finite, elements visited otherwise
  std::vector<ExactMatrix> elements;
};

/// Projective closure of <beta_t(g1), beta_t(g2)> for t = zeta_o^m.
ClosureResult finite_image_closure(unsigned o, std::size_t bound, long m = 1, bool keep_elements = false);

enum class Verdict { member, non_member };
enum class NonMemberReason { none, overlap, color_flip };
std::string to_string(Verdict v);
std::string to_string(NonMemberReason r);

struct MembershipCertificate {
  Verdict verdict = Verdict::non_member;
  NonMemberReason reason = NonMemberReason::none;
  FreeWord word;                  // over A (1) and B (2); the candidate found by the walk
  std::vector<char> trace;        // sides crossed, named by the opposite vertex O, P, Q
  bool exact_check = false;       // word re-evaluated exactly and compared projectively
  double margin_log10 = 0;        // log10 of the smallest side value met during the walk
};

/// Membership of an exact beta_{-q} matrix in Gamma_{-q} = <A, B> ~ Delta(k,k,k), n = 2k, q = zeta_n^m.
MembershipCertificate member_delta_kkk(const ExactMatrix& M, unsigned k, long m = 1);

}  // namespace b3cert
