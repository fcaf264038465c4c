#include "ellsurf/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ellsurf/errors.hpp"

namespace ellsurf {

const Rat& PointQ::x() const {
  if (!affine_) throw std::logic_error("x() of the point at infinity");
  return x_;
}

const Rat& PointQ::y() const {
  if (!affine_) throw std::logic_error("y() of the point at infinity");
  return y_;
}

std::string PointQ::str() const {
  if (!affine_) return "O";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

CurveQ::CurveQ(Rat A, Rat B) : A_(std::move(A)), B_(std::move(B)) {
  form_ = Rat(4) * A_ * A_ * A_ + Rat(27) * B_ * B_;
}

std::string CurveQ::str() const {
  std::ostringstream os;
  os << "y^2 = x^3";
  if (!A_.is_zero()) os << (A_.sign() < 0 ? " - " : " + ") << A_.abs() << "*x";
  if (!B_.is_zero()) os << (B_.sign() < 0 ? " - " : " + ") << B_.abs();
  return os.str();
}

bool on_curve(const CurveQ& C, const PointQ& P) {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == C.rhs(P.x());
}

PointQ negate(const PointQ& P) {
  if (P.is_infinity()) return P;
  return {P.x(), -P.y()};
}

namespace {

void require_group(const CurveQ& C) {
  if (C.is_singular()) throw SingularCurveError("group law on singular curve " + C.str());
}

void require_on(const CurveQ& C, const PointQ& P) {
  if (!on_curve(C, P)) throw PreconditionError("point on curve", P.str() + " is not on " + C.str());
}

PointQ add_unchecked(const CurveQ& C, const PointQ& P, const PointQ& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  Rat lambda;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y().is_zero()) return PointQ::infinity();
    lambda = (Rat(3) * P.x() * P.x() + C.A()) / (Rat(2) * P.y());
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  Rat x3 = lambda * lambda - P.x() - Q.x();
  Rat y3 = lambda * (P.x() - x3) - P.y();
  return {std::move(x3), std::move(y3)};
}

PointQ mul_unchecked(const CurveQ& C, long n, const PointQ& P) {
  PointQ base = n < 0 ? negate(P) : P;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  PointQ acc;
  while (k != 0) {
    if (k & 1UL) acc = add_unchecked(C, acc, base);
    k >>= 1;
    if (k != 0) base = add_unchecked(C, base, base);
  }
  return acc;
}

bool is_integral(const PointQ& P) { return P.is_infinity() || (P.x().is_integer() && P.y().is_integer()); }

// Prime factorization of n > 0 by trial division; a leftover cofactor with no
// factor below the bound is returned as a single entry.
std::map<mpz_class, unsigned long> factor(mpz_class n) {
  std::map<mpz_class, unsigned long> out;
  bool prime_left = false;
  auto strip = [&](unsigned long p) {
    bool hit = false;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++out[mpz_class(p)];
      n /= p;
      hit = true;
    }
    if (hit && n > 1) prime_left = mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
  };
  if (n > 1) prime_left = mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
  strip(2);
  strip(3);
  for (unsigned long p = 5; !prime_left && p <= 1000000 && p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) ++out[n];
  return out;
}

unsigned long valuation(mpz_class n, const mpz_class& p) {
  unsigned long v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

PointQ add(const CurveQ& C, const PointQ& P, const PointQ& Q) {
  require_group(C);
  require_on(C, P);
  require_on(C, Q);
  return add_unchecked(C, P, Q);
}

PointQ scalar_mul(const CurveQ& C, long n, const PointQ& P) {
  require_group(C);
  require_on(C, P);
  return mul_unchecked(C, n, P);
}

PointQ IntegralModel::to_model(const PointQ& P) const {
  if (P.is_infinity()) return P;
  const Rat u(scale);
  return {u * u * P.x(), u * u * u * P.y()};
}

PointQ IntegralModel::from_model(const PointQ& P) const {
  if (P.is_infinity()) return P;
  const Rat u(scale);
  return {P.x() / (u * u), P.y() / (u * u * u)};
}

IntegralModel integral_model(const CurveQ& C) {
  const mpz_class da = C.A().den();
  const mpz_class db = C.B().den();
  mpz_class u = 1;
  std::map<mpz_class, unsigned long> primes = factor(da);
  for (const auto& [p, e] : factor(db)) primes[p] += e;
  for (const auto& [p, ignored] : primes) {
    const unsigned long va = valuation(da, p);
    const unsigned long vb = valuation(db, p);
    const unsigned long e = std::max((va + 3) / 4, (vb + 5) / 6);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    u *= pe;
  }
  const Rat ur(u);
  const Rat u2 = ur * ur;
  CurveQ model(u2 * u2 * C.A(), u2 * u2 * u2 * C.B());
  return {std::move(model), u};
}

OrderClass order_classify(const CurveQ& C, const PointQ& P) {
  require_group(C);
  if (P.is_infinity()) throw PreconditionError("P != O", "the point at infinity has order 1");
  require_on(C, P);
  const IntegralModel im = integral_model(C);
  PointQ kP = P;
  for (int k = 1; k <= 12; ++k) {
    if (k > 1) kP = add_unchecked(C, kP, P);
    if (kP.is_infinity()) return {k, 0};
    if (!is_integral(im.to_model(kP))) return {0, k};
  }
  return {0, 0};
}

long for_each_point(const CurveQ& C, long height, const std::function<bool(const PointQ&)>& visit) {
  if (!C.has_integer_coefficients())
    throw PreconditionError("integer coefficients", C.str() + " (apply integral_model first)");
  if (height < 1) throw PreconditionError("height >= 1", std::to_string(height));
  const mpz_class A = C.A().num();
  const mpz_class B = C.B().num();
  long dmax = 1;
  while (dmax * dmax < height) ++dmax;
  long examined = 0;
  mpz_class rhs, root, d2, d4, d6;
  for (long d = 1; d <= dmax; ++d) {
    d2 = d * d;
    d4 = d2 * d2;
    d6 = d4 * d2;
    const mpz_class mmax = mpz_class(height) * d2;
    const mpz_class d3 = d2 * d;
    for (mpz_class m = -mmax; m <= mmax; ++m) {
      mpz_class g;
      mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(d));
      if (g != 1) continue;
      ++examined;
      // (y d^3)^2 = m^3 + A m d^4 + B d^6
      rhs = m * m * m + A * m * d4 + B * d6;
      if (rhs < 0 || mpz_perfect_square_p(rhs.get_mpz_t()) == 0) continue;
      mpz_sqrt(root.get_mpz_t(), rhs.get_mpz_t());
      const Rat x(m, d2);
      const Rat y(root, d3);
      if (y.is_zero()) {
        if (!visit(PointQ(x, y))) return examined;
      } else {
        if (!visit(PointQ(x, y))) return examined;
        if (!visit(PointQ(x, -y))) return examined;
      }
    }
  }
  return examined;
}

std::vector<PointQ> naive_point_search(const CurveQ& C, long height) {
  std::vector<PointQ> out;
  for_each_point(C, height, [&](const PointQ& P) {
    out.push_back(P);
    return true;
  });
  return out;
}

}  // namespace ellsurf
