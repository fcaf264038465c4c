#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellsurf/constructions.hpp"
#include "ellsurf/curve.hpp"
#include "ellsurf/poly.hpp"

namespace ellsurf {

/// x(t), y(t), z(t) with residual = x^2 - y^3 - g(z), recomputed on
/// construction.
struct PolyTriple {
  Poly x, y, z;
  Poly residual;
};

/// x^2 - y^3 - g(z)
Poly triple_residual(const Poly& g, const Poly& x, const Poly& y, const Poly& z);
PolyTriple make_triple(const Poly& g, Poly x, Poly y, Poly z);

/// Coefficients of g(z) = z^6 + a z^4 + b z^3 + c z^2 + d z + e.
struct SexticCoeffs {
  Rat a, b, c, d, e;
  Poly poly(const std::string& var = "t") const;
};

/// v^2 = U(s), U(s) = s^4 - 12a s^2 + 48b s + 6(a^2 - 12c).
struct QuarticCurve {
  Poly U;
  bool contains(const Rat& s, const Rat& v) const { return v * v == U(s); }
};

QuarticCurve thm10_curve_C(const Rat& a, const Rat& b, const Rat& c);
/// 25a^6 - 144a^3b^2 - 2592b^4 - 180a^4c + 5184ab^2c - 1296a^2c^2 - 1728c^3
Rat thm10_D(const Rat& a, const Rat& b, const Rat& c);

/// E: Y^2 = X^3 - 72(a^2 - 4c) X + 64(a^3 + 36b^2 - 36ac) with the maps
/// to and from C.
struct Thm10Model {
  Rat a, b, c;
  CurveQ E;
  /// (s, v) -> (2(-2a + s^2 + v), 4(12b - 6as + s^3 + sv))
  PointQ to_E(const Rat& s, const Rat& v) const;
  /// (X, Y) -> (s, 2a + X/2 - s^2) with s = (48b - Y)/(16a - 2X).
  /// PreconditionError at X = 8a or at infinity.
  std::pair<Rat, Rat> to_C(const PointQ& P) const;
  /// (8a, 48b)
  PointQ seed() const { return PointQ(Rat(8) * a, Rat(48) * b); }
};
Thm10Model thm10_weierstrass(const Rat& a, const Rat& b, const Rat& c);

/// 2P for P = (8a, 48b) as printed: x1 with the "144c" term and y1.
std::pair<Rat, Rat> thm10_printed_double(const Rat& a, const Rat& b, const Rat& c);

/// The polynomials built from a point (s, v) on C:
/// x = 3T^3 + pT^2 + qT + r, y = 2T^2 + sT + u, z = T.
struct Thm10Ansatz {
  Rat s, v, u, p, q, r;
  Poly x, y, z;  // in T
  Rat a0, a1;    // x^2 - y^3 - g(T) = a1 T + a0
};
/// u from the branch u = (3s^2 + 2a + v)/12.
Thm10Ansatz thm10_ansatz(const SexticCoeffs& g, const Rat& s, const Rat& v);

enum class PointSource { SeedMultiple, WeierstrassSearch, QuarticSearch, RationalC };
const char* source_name(PointSource s);

struct Thm10Solution {
  PolyTriple triple;  // residual == h (t for thm10_solve)
  Thm10Ansatz ansatz;
  PointSource source;
  Rat shift;  // z = T - shift for g with a z^5 term
};

struct Thm10Budget {
  int seed_multiples = 12;
  long weierstrass_height = 60;
  long quartic_height = 60;
};

/// Solves x^2 - y^3 - g(z) = t over Q[t] for monic sextic g. Throws
/// BudgetExhausted when no point with a1 != 0 is found.
Thm10Solution thm10_solve(const Poly& g, const Thm10Budget& budget = {});
/// Same with T = (h(t) - a0)/a1: x^2 - y^3 - g(z) = h.
Thm10Solution cor12_represent(const Poly& g, const Poly& h, const Thm10Budget& budget = {});

/// Every ansatz reachable within the budget (a1 may be zero), in search order.
std::vector<std::pair<PointSource, Thm10Ansatz>> thm10_candidates(const Poly& g, const Thm10Budget& budget = {});

/// Section on y^2 = x^3 + t^6 + e over s, base change -(648e + s^6)/(6s^5).
ConstructionResult cor13_section(const Rat& e);

/// Left minus right side of the two identities for y^2 = x^3 + T^6 + dT + e,
/// as polynomials in T at a fixed s. Zero when the identity holds.
Poly r10_difference(const Rat& s, const Rat& d, const Rat& e);
Poly r11_difference(const Rat& s, const Rat& d, const Rat& e);
/// R11 with the x-coefficient "2 s^2 T" as printed.
Poly r11_printed_difference(const Rat& s, const Rat& d, const Rat& e);
/// Both identities over `samples` values of s and (d, e) in {(0,0),(1,0),(0,1)}.
bool verify_r10(int samples = 64);
bool verify_r11(int samples = 64);

struct RatTriple {
  Rat x, y, z;
};
/// x^2 - y^3 - z^6 = n with the common denominator 124416.
RatTriple cor14_triple(long n);
/// The same with 24416 in place of 124416 and z = (n + 72)/72.
RatTriple cor14_printed(long n);
constexpr long kCor14Denominator = 124416;

enum class Cor15Case { First, Second };
/// The family as polynomials in n with t fixed; `literal` keeps "72^5" in the
/// second family.
PolyTriple cor15_family(Cor15Case which, const Rat& t, bool literal = false);
/// d in g(z) = z^6 + d z closing the family: candidates +-1 (first) and
/// +-1 +- 72t^5 (second), decided by exact residual checks over sampled t.
/// Returns d as a polynomial in t.
Poly cor15_select_d(Cor15Case which, bool literal = false);
struct IntTriple {
  mpz_class x, y, z, d;
};
IntTriple cor15_triple(Cor15Case which, long n, long t);

/// (3T^3 + 12T^2 + 33T + 25)^2 - (2T^2 + 6T + 10)^3 - g(T) for
/// g = T^6 + 6T^4 + 6T^3 + 9T^2 - 150T.
Poly rem11_residual();
bool rem11_check();
/// a = 6p^2, c = p(4b - 15p^3).
struct Order3Instance {
  Rat a, b, c;
  Thm10Model model;
  Rat delta;        // discriminant of E
  Rat delta_formula;  // -764411904 b^3 (3b - 16p^3)
  PointQ point;     // (8a, 48b)
  OrderClass order;
  bool alternate_on_curve;  // whether (6p^2, 48b) lies on E
};
Order3Instance rem11_order3(const Rat& p, const Rat& b);

}  // namespace ellsurf
