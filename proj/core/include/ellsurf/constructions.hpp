#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ellsurf/curve.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf {

using Param = std::variant<Rat, RatFn>;

struct ConstructionResult {
  Surface surface;
  Section section;
  /// Named intermediate quantities (p, q, T, ...) in construction order.
  std::vector<std::pair<std::string, Param>> parameters;
  Certificate certificate;
  /// Short label of the construction, e.g. "thm2".
  std::string tag;

  const Param* parameter(const std::string& name) const;
};

/// Base change t = phi(s) for deg f <= 3 (not linear), section
/// (X, X (r phi + s)) with X = p phi + q. Default r = 1.
ConstructionResult thm1_deg3(const Poly& f, const Rat& r = 1);

/// Degree-4 f with a point (x0, y0) on y^2 = x^3 + f(t0) x. Section over the
/// parameter r. A cubic term in f is removed by a shift first.
ConstructionResult thm1_deg4_from_point(const Poly& f, const Rat& t0, const Rat& x0, const Rat& y0);

/// Degree-4 f, c != 0 after removing the cubic term. Parameter u,
/// X = a u^2, base change phi(u) = -(-b^2 + 4ad + 4a^3 u^4)/(4ac).
ConstructionResult thm2_quartic(const Poly& f);

/// Parametric solution (u(s), v(s), w(s)) of v^2 = u^4 + f(w).
struct QuarticTransport {
  RatFn u, v, w;
  ConstructionResult source;  // section on y^2 = x^3 - 4 f(t) x
};
QuarticTransport cor4_transport(const Poly& f);
/// (x, y) on y^2 = x^3 - 4 f x  ->  (u, v) on v^2 = u^4 + f. Requires x != 0.
std::pair<Rat, Rat> cor4_forward(const Rat& x, const Rat& y);
/// (u, v) -> (x, y) = (2(u^2 - v), 4u(u^2 - v)).
std::pair<Rat, Rat> cor4_backward(const Rat& u, const Rat& v);
/// v^2 - u^4 - f(w) for the parametric triple, as a rational function.
RatFn cor4_residual(const Poly& f, const QuarticTransport& tr);

/// Monic sextic with t^3 or t coefficient nonzero after removing the t^5
/// term. Parameter u, X = (u^2 - a - 3T^2)/3, Y = u T^2 + p T + q.
ConstructionResult thm5_sextic(const Poly& g);

enum class Thm6Route {
  Auto,        // triple root first, then the a1 = a4 = 0 system
  TripleRoot,  // a1 = a2 = 0, T = -a3/a4
  R5           // a1 = a4 = 0 (q = a/2), T = -a2/a3
};

struct Thm6Step {
  Rat p, q, T, t1;
  /// Reported point: the negative of P1_model, matching the worked example's
  /// sign. Both lie on E^t1.
  PointQ P1;
  /// (pT + x0, qT + y0 - t0^3 + t1^3), the image of the model point.
  PointQ P1_model;
  Thm6Route route;
};

/// One fiber step for g = t^6 + a t^4 + c t^2 + e. `history` lists earlier
/// fibers (t0 is always included) against which g(t1)/g(t_i) must not be a
/// sixth power. Throws PreconditionError when no candidate is valid.
Thm6Step thm6_step(const Poly& g, const Rat& t0, const PointQ& P0,
                   const std::vector<Rat>& history = {}, Thm6Route route = Thm6Route::Auto);

struct ChainLink {
  Rat t;
  PointQ P;
  Rat p, q, T;
  int multiple;  // the multiple of the previous point that produced this link
};
/// n successive fibers carrying certified infinite-order points.
std::vector<ChainLink> thm6_chain(const Poly& g, const Rat& t0, const PointQ& P0, int n,
                                  Thm6Route route = Thm6Route::Auto);

/// Section over u from the fiber point (u^2, u^3) at a root t0 of even g.
ConstructionResult rem7_curve(const Poly& g, const Rat& t0);

/// Section on y^2 = x^3 + h(t), deg h = 5, h(0) = 1, through g = t^6 h(1/t).
ConstructionResult cor8_deg5(const Poly& h);

/// f4 of degree 3, deg g4 <= 4, g4 != 0. Parameter s, X = pT + q,
/// Y = r T^2 + s T + u. Default r = 1.
ConstructionResult thm16_cubic(const Poly& f4, const Poly& g4, const Rat& r = 1);

/// f4 of degree 4, deg g4 <= 4, one of c, f, h nonzero after removing the
/// cubic term of f4. Parameter u, X = (u^2 - e)/a.
ConstructionResult thm16_quartic(const Poly& f4, const Poly& g4);

}  // namespace ellsurf
