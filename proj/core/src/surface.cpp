#include "ellsurf/surface.hpp"

#include <algorithm>

#include "ellsurf/errors.hpp"

namespace ellsurf {

Surface Surface::fx(Poly f) {
  if (f.is_constant()) throw PreconditionError("f nonconstant", "constant f gives a split surface");
  if (f.degree() > 4) throw PreconditionError("deg f <= 4", "degree " + std::to_string(f.degree()));
  Poly zero(f.var());
  return Surface(SurfaceKind::Fx, std::move(f), std::move(zero));
}

Surface Surface::g6(Poly g) {
  if (g.degree() != 6 || !g.leading().is_one())
    throw PreconditionError("g monic of degree 6", "degree " + std::to_string(g.degree()));
  Poly zero(g.var());
  return Surface(SurfaceKind::G6, std::move(zero), std::move(g));
}

Surface Surface::general(Poly A, Poly B) {
  if (!A.is_constant() && !B.is_constant() && A.var() != B.var())
    throw PreconditionError("A and B in one variable", A.var() + " vs " + B.var());
  if (A.is_constant() && !B.is_constant()) A = A.with_var(B.var());
  if (B.is_constant() && !A.is_constant()) B = B.with_var(A.var());
  return Surface(SurfaceKind::General, std::move(A), std::move(B));
}

const Poly& Surface::family_poly() const {
  switch (kind_) {
    case SurfaceKind::Fx: return A_;
    case SurfaceKind::G6: return B_;
    case SurfaceKind::General: break;
  }
  throw std::logic_error("family_poly() of a General surface");
}

const std::string& Surface::var() const { return A_.is_constant() ? B_.var() : A_.var(); }

const char* kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Fx: return "fx";
    case SurfaceKind::G6: return "g6";
    case SurfaceKind::General: return "general";
  }
  return "?";
}

Poly discriminant(const Surface& S) {
  const Poly& A = S.A();
  const Poly& B = S.B();
  return (A * A * A * Rat(4) + B * B * Rat(27)) * Rat(-16);
}

RatFn j_invariant(const Surface& S) {
  const Poly d = discriminant(S);
  if (d.is_zero()) throw PreconditionError("discriminant != 0", "surface is singular at every fiber");
  const Poly fourA = S.A() * Rat(4);
  return RatFn(fourA * fourA * fourA * Rat(-1728), d);
}

bool is_isotrivial(const Surface& S) { return j_invariant(S).is_constant(); }

namespace {

// c (t - k)^n with n = deg p, c != 0.
bool is_pure_power(const Poly& p) {
  if (p.is_constant()) return false;
  return squarefree_part(p).degree() == 1;
}

}  // namespace

bool nonsplit_check(const Surface& S) {
  switch (S.kind()) {
    case SurfaceKind::Fx: {
      const Poly& f = S.A();
      return !f.is_constant() && squarefree_part(f).degree() >= 2;
    }
    case SurfaceKind::G6:
      return squarefree_part(S.B()).degree() >= 2;
    case SurfaceKind::General:
      if (discriminant(S).is_zero()) return false;
      if (!is_isotrivial(S)) return true;
      return !S.A().is_constant() || !S.B().is_constant();
  }
  return false;
}

bool is_split(const Surface& S) {
  switch (S.kind()) {
    case SurfaceKind::Fx: return S.A().degree() == 4 && is_pure_power(S.A());
    case SurfaceKind::G6: return is_pure_power(S.B());
    case SurfaceKind::General: return !nonsplit_check(S);
  }
  return true;
}

CurveQ fiber(const Surface& S, const Rat& t0) { return CurveQ(S.A()(t0), S.B()(t0)); }

const char* tag_name(TorsionTag t) {
  switch (t) {
    case TorsionTag::Z4: return "Z4";
    case TorsionTag::Z2xZ2: return "Z2xZ2";
    case TorsionTag::Z2: return "Z2";
    case TorsionTag::Z6: return "Z6";
    case TorsionTag::Z3_sqrt: return "Z3_sqrt";
    case TorsionTag::Z3_432: return "Z3_432";
    case TorsionTag::Z2_cbrt: return "Z2_cbrt";
    case TorsionTag::Trivial: return "Trivial";
    case TorsionTag::Singular: return "Singular";
  }
  return "?";
}

int FiberTorsion::group_order() const {
  return tag == TorsionTag::Singular ? 0 : static_cast<int>(witnesses.size()) + 1;
}

namespace {

// Rational cube root (sign preserving).
std::optional<Rat> cube_root(const Rat& k) {
  if (k.sign() >= 0) return kth_power_test(k, 3);
  auto r = kth_power_test(-k, 3);
  if (r) return -*r;
  return std::nullopt;
}

}  // namespace

FiberTorsion fiber_torsion_fx(const Rat& k) {
  if (k.is_zero()) return {TorsionTag::Singular, {}};
  const PointQ two_torsion(0, 0);
  if (k.sign() > 0) {
    if (auto w = kth_power_test(k / Rat(4), 4)) {
      const Rat x = Rat(2) * *w * *w;
      const Rat y = Rat(4) * w->pow(3);
      return {TorsionTag::Z4, {two_torsion, PointQ(x, y), PointQ(x, -y)}};
    }
  }
  if (auto w = kth_power_test(-k, 2)) {
    return {TorsionTag::Z2xZ2, {two_torsion, PointQ(*w, 0), PointQ(-*w, 0)}};
  }
  return {TorsionTag::Z2, {two_torsion}};
}

FiberTorsion fiber_torsion_g6(const Rat& k) {
  if (k.is_zero()) return {TorsionTag::Singular, {}};
  if (k.sign() > 0) {
    if (auto w = kth_power_test(k, 6)) {
      const Rat w2 = *w * *w;
      const Rat w3 = w2 * *w;
      return {TorsionTag::Z6,
              {PointQ(-w2, 0), PointQ(0, w3), PointQ(0, -w3), PointQ(Rat(2) * w2, Rat(3) * w3),
               PointQ(Rat(2) * w2, Rat(-3) * w3)}};
    }
  } else if (auto w = kth_power_test(k / Rat(-432), 6)) {
    const Rat w2 = *w * *w;
    const Rat w3 = w2 * *w;
    return {TorsionTag::Z3_432, {PointQ(Rat(12) * w2, Rat(36) * w3), PointQ(Rat(12) * w2, Rat(-36) * w3)}};
  }
  if (auto r = kth_power_test(k, 2)) return {TorsionTag::Z3_sqrt, {PointQ(0, *r), PointQ(0, -*r)}};
  if (auto c = cube_root(k)) return {TorsionTag::Z2_cbrt, {PointQ(-*c, 0)}};
  return {TorsionTag::Trivial, {}};
}

namespace {

// Numerator of p(n/d) times d^deg, the homogenization of p at (n, d).
Poly homogenize(const Poly& p, const Poly& n, const Poly& d, int deg) {
  if (p.is_zero()) return Poly(n.var());
  std::vector<Poly> dp(static_cast<std::size_t>(deg) + 1);
  dp[0] = Poly::constant(1, n.var());
  for (int i = 1; i <= deg; ++i) dp[static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(i) - 1] * d;
  Poly acc(n.var());
  Poly npow = Poly::constant(1, n.var());
  for (int i = 0; i <= p.degree(); ++i) {
    if (!p.coeff(i).is_zero()) acc += npow * dp[static_cast<std::size_t>(deg - i)] * p.coeff(i);
    if (i < p.degree()) npow = npow * n;
  }
  return acc;
}

}  // namespace

bool verify_section(const Surface& S, const Section& sec) {
  const Poly& xn = sec.X.num();
  const Poly& xd = sec.X.den();
  const Poly& yn = sec.Y.num();
  const Poly& yd = sec.Y.den();
  const Poly& pn = sec.phi.num();
  const Poly& pd = sec.phi.den();
  const int k = std::max({S.A().degree(), S.B().degree(), 0});
  // Y^2 - X^3 - A(phi) X - B(phi), times yd^2 xd^3 pd^k.
  const Poly xd2 = xd * xd;
  const Poly xd3 = xd2 * xd;
  const Poly yd2 = yd * yd;
  const Poly pdk = pd.pow(static_cast<unsigned>(k));
  Poly lhs = yn * yn * xd3 * pdk;
  Poly rhs = xn * xn * xn * yd2 * pdk;
  if (!S.A().is_zero()) rhs += homogenize(S.A(), pn, pd, k) * xn * xd2 * yd2;
  if (!S.B().is_zero()) rhs += homogenize(S.B(), pn, pd, k) * xd3 * yd2;
  return lhs == rhs;
}

std::optional<Specialized> specialize(const Section& sec, const Rat& s0) {
  auto t0 = sec.phi.eval(s0);
  auto x = sec.X.eval(s0);
  auto y = sec.Y.eval(s0);
  if (!t0 || !x || !y) return std::nullopt;
  return Specialized{*t0, PointQ(*x, *y)};
}

const char* method_name(CertMethod m) {
  switch (m) {
    case CertMethod::YNonzeroFx: return "YNonzeroFx";
    case CertMethod::XYNonzeroG6: return "XYNonzeroG6";
    case CertMethod::SpecializationMazur: return "SpecializationMazur";
    case CertMethod::IntegralityZt: return "IntegralityZt";
  }
  return "?";
}

Rat specialization_value(int i) {
  const int m = i / 2 + 1;
  return i % 2 == 0 ? Rat(m) : Rat(-m);
}

namespace {

void require_certifiable(const Surface& S, const Section& sec) {
  if (!verify_section(S, sec)) throw PreconditionError("section satisfies the surface equation");
  if (is_split(S)) throw PreconditionError("surface non-split", S.str());
}

// Attempt i of the specialization search; nullopt if the fiber is bad.
std::optional<Certificate> try_specialization(const Surface& S, const Section& sec, int i) {
  const Rat s0 = specialization_value(i);
  auto sp = specialize(sec, s0);
  if (!sp) return std::nullopt;
  CurveQ E = fiber(S, sp->t0);
  if (E.is_singular()) return std::nullopt;
  OrderClass oc = order_classify(E, sp->point);
  if (!oc.infinite()) return std::nullopt;
  Certificate c;
  c.method = CertMethod::SpecializationMazur;
  c.s0 = s0;
  c.t0 = sp->t0;
  c.fiber = std::move(E);
  c.point = sp->point;
  c.order = oc;
  c.attempts = i + 1;
  return c;
}

int integrality_exponent(const Surface& S) {
  const int da = std::max(S.A().degree(), 0);
  const int db = std::max(S.B().degree(), 0);
  return std::max((da + 3) / 4, (db + 5) / 6);
}

// X scaled to the model over Q[s]: u^2 X with u = den(phi)^m.
RatFn integral_X(const Surface& S, const Section& sec) {
  const Poly u = sec.phi.den().pow(static_cast<unsigned>(integrality_exponent(S)));
  return sec.X * RatFn(u * u);
}

}  // namespace

Certificate certify_by_specialization(const Surface& S, const Section& sec, int budget) {
  require_certifiable(S, sec);
  for (int i = 0; i < budget; ++i) {
    if (auto c = try_specialization(S, sec, i)) return *c;
  }
  throw BudgetExhausted("no infinite-order specialization in " + std::to_string(budget) + " attempts");
}

Section double_section(const Surface& S, const Section& sec) {
  if (sec.Y.is_zero()) throw PreconditionError("Y != 0", "doubling a 2-torsion section");
  const RatFn A = compose(S.A(), sec.phi);
  const RatFn lambda = (RatFn(Rat(3), sec.parameter) * sec.X * sec.X + A) / (RatFn(Rat(2), sec.parameter) * sec.Y);
  const RatFn x2 = lambda * lambda - RatFn(Rat(2), sec.parameter) * sec.X;
  const RatFn y2 = lambda * (sec.X - x2) - sec.Y;
  return Section{sec.parameter, sec.phi, x2, y2};
}

std::optional<Certificate> certify_by_integrality(const Surface& S, const Section& sec) {
  if (!integral_X(S, sec).is_polynomial()) {
    Certificate c;
    c.method = CertMethod::IntegralityZt;
    c.multiple = 1;
    return c;
  }
  if (sec.Y.is_zero()) return std::nullopt;
  if (!integral_X(S, double_section(S, sec)).is_polynomial()) {
    Certificate c;
    c.method = CertMethod::IntegralityZt;
    c.multiple = 2;
    return c;
  }
  return std::nullopt;
}

Certificate certify_non_torsion(const Surface& S, const Section& sec, int budget) {
  require_certifiable(S, sec);
  if (S.kind() == SurfaceKind::Fx && !sec.Y.is_zero()) {
    Certificate c;
    c.method = CertMethod::YNonzeroFx;
    return c;
  }
  if (S.kind() == SurfaceKind::G6 && !sec.X.is_zero() && !sec.Y.is_zero()) {
    Certificate c;
    c.method = CertMethod::XYNonzeroG6;
    return c;
  }
  for (int i = 0; i < budget; ++i) {
    if (auto c = try_specialization(S, sec, i)) return *c;
  }
  throw BudgetExhausted("no infinite-order specialization in " + std::to_string(budget) + " attempts");
}

bool replay(const Surface& S, const Section& sec, const Certificate& cert) {
  if (!verify_section(S, sec) || is_split(S)) return false;
  switch (cert.method) {
    case CertMethod::YNonzeroFx:
      return S.kind() == SurfaceKind::Fx && !sec.Y.is_zero();
    case CertMethod::XYNonzeroG6:
      return S.kind() == SurfaceKind::G6 && !sec.X.is_zero() && !sec.Y.is_zero();
    case CertMethod::SpecializationMazur: {
      if (!cert.s0 || !cert.t0 || !cert.fiber || !cert.point) return false;
      auto sp = specialize(sec, *cert.s0);
      if (!sp || sp->t0 != *cert.t0 || !(sp->point == *cert.point)) return false;
      const CurveQ E = fiber(S, *cert.t0);
      if (!(E == *cert.fiber) || E.is_singular() || !on_curve(E, *cert.point)) return false;
      const OrderClass oc = order_classify(E, *cert.point);
      return oc.infinite() && oc.non_integral_multiple == cert.order.non_integral_multiple;
    }
    case CertMethod::IntegralityZt: {
      if (cert.multiple == 1) return !integral_X(S, sec).is_polynomial();
      if (cert.multiple == 2) return !sec.Y.is_zero() && !integral_X(S, double_section(S, sec)).is_polynomial();
      return false;
    }
  }
  return false;
}

std::string Surface::str() const {
  auto poly_text = [](const Poly& p) {
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
      const Rat& c = p.coeff(i);
      if (c.is_zero()) continue;
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      const Rat a = c.abs();
      if (i == 0) out += a.str();
      else {
        if (!a.is_one()) out += a.str() + "*";
        out += p.var();
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  switch (kind_) {
    case SurfaceKind::Fx: return "y^2 = x^3 + (" + poly_text(A_) + ")*x";
    case SurfaceKind::G6: return "y^2 = x^3 + " + poly_text(B_);
    case SurfaceKind::General: return "y^2 = x^3 + (" + poly_text(A_) + ")*x + (" + poly_text(B_) + ")";
  }
  return "";
}

}  // namespace ellsurf
