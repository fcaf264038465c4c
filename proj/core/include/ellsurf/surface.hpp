#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellsurf/curve.hpp"
#include "ellsurf/poly.hpp"
#include "ellsurf/ratfn.hpp"

namespace ellsurf {

enum class SurfaceKind { Fx, G6, General };

/// y^2 = x^3 + A(t) x + B(t). Fx: A = f, B = 0 (deg f <= 4, f nonconstant).
/// G6: A = 0, B = g (g monic of degree 6). General: arbitrary A, B.
class Surface {
 public:
  static Surface fx(Poly f);
  static Surface g6(Poly g);
  static Surface general(Poly A, Poly B);

  SurfaceKind kind() const noexcept { return kind_; }
  const Poly& A() const noexcept { return A_; }
  const Poly& B() const noexcept { return B_; }
  /// The defining polynomial f (Fx) or g (G6).
  const Poly& family_poly() const;
  const std::string& var() const;

  std::string str() const;

 private:
  Surface(SurfaceKind kind, Poly A, Poly B) : kind_(kind), A_(std::move(A)), B_(std::move(B)) {}

  SurfaceKind kind_;
  Poly A_;
  Poly B_;
};

const char* kind_name(SurfaceKind k);

/// -16(4A^3 + 27B^2)
Poly discriminant(const Surface& S);
/// -1728 (4A)^3 / discriminant. PreconditionError if the discriminant is zero.
RatFn j_invariant(const Surface& S);
bool is_isotrivial(const Surface& S);

/// Fx: f has at least two distinct complex roots. G6: g is not a sixth power
/// (t - k)^6. General: heuristic, see nonsplit_is_heuristic.
bool nonsplit_check(const Surface& S);
/// True for General surfaces: non-isotrivial, or isotrivial with nonconstant
/// A or B. No twist analysis is done.
inline bool nonsplit_is_heuristic(const Surface& S) { return S.kind() == SurfaceKind::General; }
/// Exact split test for Fx (f = c (t - k)^4) and G6 (g = (t - k)^6); for
/// General this is the negation of the heuristic nonsplit_check.
bool is_split(const Surface& S);

CurveQ fiber(const Surface& S, const Rat& t0);

enum class TorsionTag { Z4, Z2xZ2, Z2, Z6, Z3_sqrt, Z3_432, Z2_cbrt, Trivial, Singular };
const char* tag_name(TorsionTag t);

struct FiberTorsion {
  TorsionTag tag;
  /// Every non-identity torsion point of the fiber.
  std::vector<PointQ> witnesses;
  /// Order of the torsion subgroup (0 for Singular).
  int group_order() const;
};

/// Torsion of y^2 = x^3 + k x. Z4 when k = 4w^4, Z2xZ2 when -k is a square,
/// otherwise Z2.
FiberTorsion fiber_torsion_fx(const Rat& k);
/// Torsion of y^2 = x^3 + k. Z6 when k is a sixth power, Z3_432 when
/// k = -432 w^6, Z3_sqrt when k is a square, Z2_cbrt when k is a cube.
FiberTorsion fiber_torsion_g6(const Rat& k);

/// t = phi(s), point (X(s), Y(s)) on the pulled-back surface.
struct Section {
  std::string parameter = "s";
  RatFn phi;
  RatFn X;
  RatFn Y;
};

/// Y^2 == X^3 + A(phi) X + B(phi) in Q(s), checked after clearing
/// denominators.
bool verify_section(const Surface& S, const Section& sec);

/// (X(s0), Y(s0)) and phi(s0), or nullopt at a pole of any of them.
struct Specialized {
  Rat t0;
  PointQ point;
};
std::optional<Specialized> specialize(const Section& sec, const Rat& s0);

enum class CertMethod { YNonzeroFx, XYNonzeroG6, SpecializationMazur, IntegralityZt };
const char* method_name(CertMethod m);

struct Certificate {
  CertMethod method = CertMethod::SpecializationMazur;
  /// SpecializationMazur: parameter value, base value, fiber, point, order evidence.
  std::optional<Rat> s0;
  std::optional<Rat> t0;
  std::optional<CurveQ> fiber;
  std::optional<PointQ> point;
  OrderClass order;
  /// IntegralityZt: multiple m of the section whose X is non-polynomial on
  /// the integral model over Q[s].
  int multiple = 0;
  int attempts = 0;
};

/// The s0 values tried by SpecializationMazur, in order: 1, -1, 2, -2, ...
Rat specialization_value(int i);

/// Non-torsion certificate. Requires verify_section and a non-split surface
/// (PreconditionError). Throws BudgetExhausted when no certificate is found;
/// that does not prove the section is torsion.
Certificate certify_non_torsion(const Surface& S, const Section& sec, int budget = 40);

/// Specialization certificate only (the shortcut methods are skipped).
Certificate certify_by_specialization(const Surface& S, const Section& sec, int budget = 40);

/// Integrality certificate: on the model over Q[s] scaled by den(phi)^m, a
/// torsion section has polynomial coordinates. Checks the section and its
/// double. Returns nullopt when both X coordinates are polynomial.
std::optional<Certificate> certify_by_integrality(const Surface& S, const Section& sec);

/// Section doubling in Q(s).
Section double_section(const Surface& S, const Section& sec);

/// Re-runs the checks recorded in the certificate.
bool replay(const Surface& S, const Section& sec, const Certificate& cert);

}  // namespace ellsurf
