#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ellsurf/rat.hpp"

namespace ellsurf {

/// Affine rational point or the point at infinity.
class PointQ {
 public:
  PointQ() = default;  // infinity
  PointQ(Rat x, Rat y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}
  static PointQ infinity() { return {}; }

  bool is_infinity() const noexcept { return !affine_; }
  const Rat& x() const;
  const Rat& y() const;

  std::string str() const;
  friend bool operator==(const PointQ& a, const PointQ& b) {
    if (a.affine_ != b.affine_) return false;
    return !a.affine_ || (a.x_ == b.x_ && a.y_ == b.y_);
  }
  friend std::ostream& operator<<(std::ostream& os, const PointQ& p) { return os << p.str(); }

 private:
  bool affine_ = false;
  Rat x_;
  Rat y_;
};

/// y^2 = x^3 + A x + B over Q. Singular curves are representable; the group
/// law rejects them.
class CurveQ {
 public:
  CurveQ() = default;
  CurveQ(Rat A, Rat B);

  const Rat& A() const noexcept { return A_; }
  const Rat& B() const noexcept { return B_; }
  /// 4A^3 + 27B^2
  const Rat& singularity_form() const noexcept { return form_; }
  bool is_singular() const noexcept { return form_.is_zero(); }
  bool has_integer_coefficients() const noexcept { return A_.is_integer() && B_.is_integer(); }
  /// -16(4A^3 + 27B^2)
  Rat discriminant() const { return Rat(-16) * form_; }
  /// x^3 + A x + B
  Rat rhs(const Rat& x) const { return (x * x + A_) * x + B_; }

  std::string str() const;
  friend bool operator==(const CurveQ& a, const CurveQ& b) { return a.A_ == b.A_ && a.B_ == b.B_; }

 private:
  Rat A_;
  Rat B_;
  Rat form_;
};

bool on_curve(const CurveQ& C, const PointQ& P);
PointQ negate(const PointQ& P);
/// Chord-and-tangent sum. Throws SingularCurveError, PreconditionError if a
/// point is off the curve.
PointQ add(const CurveQ& C, const PointQ& P, const PointQ& Q);
PointQ scalar_mul(const CurveQ& C, long n, const PointQ& P);

struct IntegralModel {
  CurveQ curve;     // y^2 = x^3 + u^4 A x + u^6 B
  mpz_class scale;  // u
  PointQ to_model(const PointQ& P) const;
  PointQ from_model(const PointQ& P) const;
};

/// Minimal u > 0 with u^4 A, u^6 B integral.
IntegralModel integral_model(const CurveQ& C);

struct OrderClass {
  /// 0 means infinite order.
  int order = 0;
  /// For infinite order: the multiple k with k*P non-integral on the integral
  /// model (Nagell-Lutz), or 0 when the verdict rests on the Mazur bound.
  int non_integral_multiple = 0;
  bool infinite() const noexcept { return order == 0; }
};

/// Torsion order of P, or infinite. Throws PreconditionError for P at
/// infinity or off the curve, SingularCurveError for singular C.
OrderClass order_classify(const CurveQ& C, const PointQ& P);

/// Rational points x = m/d^2 (gcd(m, d) = 1) with 1 <= d <= ceil(sqrt(height))
/// and |m| <= height * d^2, i.e. |x| <= height. Both signs of y. Sorted by
/// (d, m, y). Requires integer coefficients (PreconditionError otherwise).
std::vector<PointQ> naive_point_search(const CurveQ& C, long height);

/// Same enumeration order, calling `visit` per point until it returns false.
/// Returns the number of x-candidates examined.
long for_each_point(const CurveQ& C, long height, const std::function<bool(const PointQ&)>& visit);

}  // namespace ellsurf
