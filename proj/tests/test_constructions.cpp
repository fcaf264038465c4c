#include <gtest/gtest.h>

#include "ellsurf/constructions.hpp"
#include "ellsurf/errors.hpp"
#include "support/oracle.hpp"

using namespace ellsurf;
using oracle::ints;

namespace {

RatFn param(const ConstructionResult& r, const std::string& name) {
  const Param* p = r.parameter(name);
  if (p == nullptr) throw std::runtime_error("missing parameter " + name);
  if (const Rat* q = std::get_if<Rat>(p)) return RatFn(*q, r.section.parameter);
  return std::get<RatFn>(*p);
}

RatFn var(const std::string& v) { return RatFn(Poly::identity(v)); }
RatFn K(const Rat& c, const std::string& v) { return RatFn(c, v); }

void expect_sound(const ConstructionResult& r) {
  EXPECT_TRUE(verify_section(r.surface, r.section)) << r.tag;
  EXPECT_TRUE(oracle::section_holds_at_samples(r.surface.A(), r.surface.B(), r.section)) << r.tag;
  EXPECT_TRUE(replay(r.surface, r.section, r.certificate)) << r.tag;
}

}  // namespace

// ---- f-family, degree <= 3

TEST(Thm1Deg3, CubicExample) {
  const ConstructionResult r = thm1_deg3(ints({0, 0, 0, 1}));
  expect_sound(r);
  const auto sp = specialize(r.section, 0);
  ASSERT_TRUE(sp.has_value());
  EXPECT_EQ(sp->t0, Rat(-1, 2));
  EXPECT_EQ(sp->point, PointQ(Rat(1, 2), Rat(-1, 4)));
  // 1/16 = (1/2)^3 + (-1/2)^3 (1/2)
  EXPECT_EQ(Rat(1, 16), Rat(1, 8) + Rat(-1, 8) * Rat(1, 2));
  const std::string s = "s";
  const RatFn expected = -RatFn(ints({1, -4, 3, 2}, s), ints({2, -6, 3}, s));
  EXPECT_EQ(r.section.phi, expected);
  EXPECT_EQ(r.certificate.method, CertMethod::YNonzeroFx);
}

TEST(Thm1Deg3, ClosedFormWithSInsideBracketFails) {
  // phi1(1, s) with the term -4a(a^2 s + b)s, against the derived -4a(a^2 + b)s.
  const Rat a = 1, b = 0, c = 0, d = 0;
  const std::string s = "s";
  const RatFn S = var(s);
  const RatFn phi1_misprint = K(a.pow(4) + Rat(2) * a * a * b + b * b + d, s) -
                              K(Rat(4) * a, s) * (K(a * a, s) * S + K(b, s)) * S +
                              K(Rat(3) * a * a - b, s) * S * S + K(Rat(2) * a, s) * S.pow(3);
  const RatFn phi2 = K(Rat(2) * a.pow(3) + Rat(2) * a * b + c, s) - K(2, s) * K(Rat(3) * a * a + b, s) * S +
                     K(Rat(3) * a, s) * S * S;
  const ConstructionResult r = thm1_deg3(ints({0, 0, 0, 1}));
  EXPECT_EQ(param(r, "phi2"), phi2);
  Section bad = r.section;
  bad.phi = -(phi1_misprint / phi2);
  const RatFn p = param(r, "p"), q = param(r, "q");
  bad.X = p * bad.phi + q;
  bad.Y = bad.X * (bad.phi + S);
  EXPECT_FALSE(verify_section(r.surface, bad));
}

TEST(Thm1Deg3, QuadraticAndRejections) {
  expect_sound(thm1_deg3(ints({1, 0, 2})));
  expect_sound(thm1_deg3(ints({-3, 5, 0, 7}), Rat(2, 3)));
  EXPECT_THROW(thm1_deg3(ints({1, 1})), PreconditionError);
  EXPECT_THROW(thm1_deg3(ints({0, 0, 0, 0, 1})), PreconditionError);
  EXPECT_THROW(thm1_deg3(ints({1, 0, 1}), 0), PreconditionError);
}

// ---- f-family, degree 4 through a fiber point

TEST(Thm1Deg4, RootAdjacentExample) {
  const ConstructionResult r = thm1_deg4_from_point(ints({-2, 0, 1, 0, 1}), 1, 1, 1);
  expect_sound(r);
  EXPECT_EQ(r.section.parameter, "r");
}

TEST(Thm1Deg4, FamilyWithPointAtZero) {
  // f = t^4 + t^2 + u(v^2 - u) with u = 2, v = 3 has (u, uv) = (2, 6) over t = 0.
  const Poly f = ints({14, 0, 1, 0, 1});
  ASSERT_TRUE(on_curve(CurveQ(f(0), 0), PointQ(2, 6)));
  expect_sound(thm1_deg4_from_point(f, 0, 2, 6));
}

TEST(Thm1Deg4, TripleRootAtZero) {
  oracle::Gen gen(41);
  int checked = 0;
  while (checked < 25) {
    const Rat a = gen.nonzero(-9, 9), b = gen.integer(-9, 9), c = gen.integer(-9, 9);
    const Rat t0 = gen.integer(-2, 2), x0 = gen.nonzero(-9, 9), y0 = gen.integer(-9, 9);
    if (Rat(2) * x0.pow(3) == y0 * y0) continue;
    const Rat d = (y0 * y0 - x0.pow(3)) / x0 - (a * t0.pow(4) + b * t0 * t0 + c * t0);
    const Poly f({d, c, b, 0, a});
    std::optional<ConstructionResult> r;
    try {
      r.emplace(thm1_deg4_from_point(f, t0, x0, y0));
    } catch (const PreconditionError&) {
      continue;
    }
    expect_sound(*r);
    const RatFn p = param(*r, "p"), q = param(*r, "q");
    for (const Rat rv : {Rat(1), Rat(-2), Rat(3, 5)}) {
      const auto pv = p.eval(rv), qv = q.eval(rv);
      if (!pv || !qv) continue;
      // X(T) = p T^2 + q T + x0, slope line rT + y0/x0; X (line)^2 - X^2 - f(T + t0) in T
      const Poly T = Poly::identity("T");
      const Poly X = T * T * *pv + T * *qv + Poly::constant(x0, "T");
      const Poly L = T * rv + Poly::constant(y0 / x0, "T");
      const Poly F = X * L * L - X * X - f.with_var("T").shift(t0);
      ASSERT_FALSE(F.is_zero());
      EXPECT_TRUE(F.coeff(0).is_zero() && F.coeff(1).is_zero() && F.coeff(2).is_zero());
      ++checked;
    }
  }
}

TEST(Thm1Deg4, Rejections) {
  // (2, 4) on y^2 = x^3 + 4x: 2 x0^3 = y0^2
  EXPECT_THROW(thm1_deg4_from_point(ints({4, 0, 0, 0, 1}), 0, 2, 4), PreconditionError);
  EXPECT_THROW(thm1_deg4_from_point(ints({4, 0, 0, 0, 1}), 0, 0, 0), PreconditionError);
  EXPECT_THROW(thm1_deg4_from_point(ints({4, 0, 0, 0, 1}), 0, 1, 1), PreconditionError);
}

// ---- quartic f

TEST(Thm2, QuarticExample) {
  const ConstructionResult r = thm2_quartic(ints({1, 1, 0, 0, 1}));
  expect_sound(r);
  const std::string u = "u";
  EXPECT_EQ(r.section.phi, -RatFn(ints({1, 0, 0, 0, 1}, u)));
  const auto sp = specialize(r.section, 1);
  ASSERT_TRUE(sp.has_value());
  EXPECT_EQ(sp->t0, Rat(-2));
  EXPECT_EQ(sp->point, PointQ(1, -4));
  EXPECT_EQ(Rat(16), Rat(1) + Rat(15));
  EXPECT_EQ(r.certificate.method, CertMethod::YNonzeroFx);
}

TEST(Thm2, PrintedYIsMinusConstructedY) {
  oracle::Gen gen(42);
  for (int i = 0; i < 30; ++i) {
    const Rat a = gen.nonzero(-6, 6), b = gen.integer(-6, 6), c = gen.nonzero(-6, 6), d = gen.integer(-6, 6);
    const ConstructionResult r = thm2_quartic(Poly({d, c, b, 0, a}));
    const std::string u = r.section.parameter;
    const RatFn U = var(u);
    const RatFn printed = (K(-b.pow(4) - Rat(8) * a * b * c * c + Rat(8) * a * b * b * d - Rat(16) * a * a * d * d, u) * U +
                           K(Rat(8) * a.pow(3) * (b * b - Rat(4) * a * d), u) * U.pow(5) -
                           K(Rat(16) * a.pow(6), u) * U.pow(9)) /
                          K(Rat(16) * a * c * c, u);
    const RatFn constructed = K(a, u) * U * r.section.phi * r.section.phi + K(b / Rat(2), u) * U;
    EXPECT_EQ(r.section.Y, printed);
    EXPECT_EQ(printed, -constructed);
  }
}

TEST(Thm2, IntegerPointsForUnitCoefficients) {
  oracle::Gen gen(43);
  for (int i = 0; i < 20; ++i) {
    const Rat a = gen.integer(0, 1) == 0 ? -1 : 1, c = gen.integer(0, 1) == 0 ? -1 : 1;
    const Rat b = 2 * gen.integer(-5, 5), d = gen.integer(-9, 9);
    const ConstructionResult r = thm2_quartic(Poly({d, c, b, 0, a}));
    for (long u = -4; u <= 4; ++u) {
      const auto sp = specialize(r.section, u);
      ASSERT_TRUE(sp.has_value());
      EXPECT_TRUE(sp->t0.is_integer());
      EXPECT_TRUE(sp->point.x().is_integer());
      EXPECT_TRUE(sp->point.y().is_integer());
    }
  }
}

TEST(Thm2, ShiftedAndRejected) {
  expect_sound(thm2_quartic(ints({1, 1, 0, 0, 1}).shift(3)));
  EXPECT_THROW(thm2_quartic(ints({1, 0, 1, 0, 1})), PreconditionError);
  EXPECT_THROW(thm2_quartic(ints({1, 0, 1, 0, 1}).shift(2)), PreconditionError);
}

// ---- v^2 = u^4 + f(w)

TEST(Cor4, TransportSolvesQuarticEquation) {
  const Poly f = ints({1, 1, 0, 0, 1});
  const QuarticTransport tr = cor4_transport(f);
  EXPECT_TRUE(cor4_residual(f, tr).is_zero());
  for (long s = 1; s <= 5; ++s) {
    const auto u = tr.u.eval(s), v = tr.v.eval(s), w = tr.w.eval(s);
    ASSERT_TRUE(u && v && w);
    EXPECT_EQ(*v * *v, u->pow(4) + f(*w));
  }
  EXPECT_THROW(cor4_transport(ints({1, 0, 1, 0, 1})), PreconditionError);
}

TEST(Cor4, MapsAreMutualInversesAndPrintedInverseMissesCurve) {
  oracle::Gen gen(44);
  int misses = 0;
  for (int i = 0; i < 20; ++i) {
    const Rat x = gen.nonzero(-30, 30) * Rat(1, gen.integer(1, 5));
    const Rat y(gen.nonzero(-40, 40), gen.integer(1, 40));
    const Rat k = (x.pow(3) - y * y) / (Rat(4) * x);  // (x, y) on y^2 = x^3 - 4 k x
    const auto [u, v] = cor4_forward(x, y);
    EXPECT_EQ(v * v, u.pow(4) + k);
    EXPECT_EQ(cor4_backward(u, v), std::make_pair(x, y));
    const Rat px = Rat(-2) * (u * u - v), py = Rat(-4) * u * (u * u - v);
    if (py * py != px.pow(3) - Rat(4) * k * px) ++misses;
  }
  EXPECT_EQ(misses, 20);
  EXPECT_THROW(cor4_forward(0, 0), PreconditionError);
}

// ---- sextic g

TEST(Thm5, SexticExample) {
  const ConstructionResult r = thm5_sextic(ints({0, 0, 0, 1, 0, 0, 1}));
  expect_sound(r);
  const std::string u = "u";
  EXPECT_EQ(param(r, "chi2"), RatFn(ints({0, 0, 216, 0, 0, 0, 0, 0, 288}, u)));
  EXPECT_EQ(param(r, "chi1"), RatFn(ints({-27, 0, 0, 0, 0, 0, -72, 0, 0, 0, 0, 0, 16}, u)));
  EXPECT_EQ(param(r, "T")(Rat(1)), Rat(83, 504));
  EXPECT_EQ(r.certificate.method, CertMethod::XYNonzeroG6);
}

TEST(Thm5, LinearTermAndRejections) {
  expect_sound(thm5_sextic(ints({0, 1, 0, 0, 0, 0, 1})));
  expect_sound(thm5_sextic(ints({0, 1, 0, 0, 0, 0, 1}).shift(-1)));
  EXPECT_THROW(thm5_sextic(ints({1, 0, 1, 0, 0, 0, 1})), PreconditionError);
  EXPECT_THROW(thm5_sextic(ints({1, 0, 1, 0, 0, 0, 2})), PreconditionError);
}

// ---- moving between fibers of y^2 = x^3 + g(t), g even

TEST(Thm6, KnownStep) {
  const Poly g = ints({1, 0, 1, 0, 0, 0, 1});
  const Thm6Step st = thm6_step(g, 1, PointQ(1, 2));
  EXPECT_EQ(st.p, Rat(16, 13));
  EXPECT_EQ(st.q, Rat(-1, 13));
  EXPECT_EQ(st.T, Rat(-358, 169));
  EXPECT_EQ(st.t1, Rat(-189, 169));
  EXPECT_EQ(st.P1, PointQ(Rat(-3531, 2197), Rat(1137934, 4826809)));
  EXPECT_EQ(st.P1, negate(st.P1_model));
  const CurveQ E1(0, g(st.t1));
  EXPECT_TRUE(on_curve(E1, st.P1));
  EXPECT_TRUE(on_curve(E1, st.P1_model));
  // P1_model = (pT + x0, qT + y0 - t0^3 + t1^3)
  EXPECT_EQ(st.P1_model.x(), st.p * st.T + Rat(1));
  EXPECT_EQ(st.P1_model.y(), st.q * st.T + Rat(2) - Rat(1) + st.t1.pow(3));
}

TEST(Thm6, R5RouteHasQEqualHalfA) {
  oracle::Gen gen(45);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 40; ++i) {
    const Rat a = gen.nonzero(-9, 9), c = gen.integer(-9, 9);
    const Rat t0 = gen.integer(-3, 3), x0 = gen.nonzero(-6, 6), y0 = gen.nonzero(-9, 9);
    const Rat e = y0 * y0 - x0.pow(3) - (t0.pow(6) + a * t0.pow(4) + c * t0 * t0);
    const Poly g({e, 0, c, 0, a, 0, 1});
    try {
      const Thm6Step st = thm6_step(g, t0, PointQ(x0, y0), {}, Thm6Route::R5);
      EXPECT_EQ(st.q, a / Rat(2));
      EXPECT_TRUE(on_curve(CurveQ(0, g(st.t1)), st.P1));
      ++checked;
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Thm6, ChainKeepsFibersApart) {
  const Poly g = ints({1, 0, 1, 0, 0, 0, 1});
  const auto one = thm6_chain(g, 1, PointQ(1, 2), 1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].t, Rat(-189, 169));
  const auto links = thm6_chain(g, 1, PointQ(1, 2), 3);
  ASSERT_EQ(links.size(), 3U);
  std::vector<Rat> ts = {Rat(1)};
  for (const auto& l : links) ts.push_back(l.t);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      EXPECT_NE(ts[i], ts[j]);
      EXPECT_FALSE(kth_power_test(g(ts[i]) / g(ts[j]), 6).has_value());
    }
  }
  for (const auto& l : links) {
    const CurveQ E(0, g(l.t));
    EXPECT_TRUE(on_curve(E, l.P));
    EXPECT_TRUE(order_classify(E, l.P).infinite());
  }
}

TEST(Thm6, Rejections) {
  EXPECT_THROW(thm6_step(ints({1, 0, 0, 0, 0, 0, 1}), 1, PointQ(1, 2)), PreconditionError);
  EXPECT_THROW(thm6_step(ints({1, 0, 1, 0, 0, 0, 1}), 1, PointQ(1, 3)), PreconditionError);
}

TEST(Rem7, RootFiber) {
  const ConstructionResult r = rem7_curve(ints({-1, 0, 0, 0, 0, 0, 1}), 1);
  expect_sound(r);
  EXPECT_EQ(param(r, "q"), RatFn(Rat(0), r.section.parameter));
  const ConstructionResult r2 = rem7_curve(ints({-6, 0, 3, 0, 2, 0, 1}), 1);
  expect_sound(r2);
  EXPECT_EQ(param(r2, "q"), RatFn(Rat(1), r2.section.parameter));
  EXPECT_THROW(rem7_curve(ints({0, 0, 0, 0, 0, 0, 1}), 0), PreconditionError);
  EXPECT_THROW(rem7_curve(ints({-1, 0, 0, 0, 0, 0, 1}), 2), PreconditionError);
}

TEST(Cor8, QuinticThroughReversal) {
  const ConstructionResult r = cor8_deg5(ints({1, 0, 0, 0, 0, 1}));
  expect_sound(r);
  EXPECT_EQ(r.tag, "cor8/thm5");
  EXPECT_TRUE(r.surface.A().is_zero());
  EXPECT_EQ(r.surface.B(), ints({1, 0, 0, 0, 0, 1}));
  const Poly h = ints({1, 0, 0, 0, 1, 1});
  const Poly g = h.reversed(6);
  for (int i = 1; i <= 10; ++i) {
    const Rat x(i, 2);
    EXPECT_EQ(g(x), x.pow(6) * h(x.inverse()));
  }
  expect_sound(cor8_deg5(h));
  EXPECT_THROW(cor8_deg5(ints({2, 0, 0, 0, 0, 1})), PreconditionError);
  EXPECT_THROW(cor8_deg5(ints({1, 0, 0, 0, 1})), PreconditionError);
}

// ---- y^2 = x^3 + f4 x + g4

TEST(Thm16Cubic, Examples) {
  const ConstructionResult r = thm16_cubic(ints({0, 0, 0, 1}), ints({0, 1}));
  expect_sound(r);
  const std::string s = r.section.parameter;
  EXPECT_EQ(param(r, "p"), RatFn(Rat(1), s));
  EXPECT_EQ(param(r, "q"), RatFn(ints({-1, 2}, s)));
  EXPECT_EQ(param(r, "u"), RatFn(ints({-3, 6, -1}, s)) * RatFn(Rat(1, 2), s));
  EXPECT_EQ(r.certificate.method, CertMethod::SpecializationMazur);
  expect_sound(thm16_cubic(ints({0, 1, 0, 1}), ints({1, 0, 1})));
  EXPECT_THROW(thm16_cubic(ints({0, 0, 0, 1}), Poly()), PreconditionError);
}

TEST(Thm16Quartic, Examples) {
  const ConstructionResult r = thm16_quartic(ints({0, 1, 0, 0, 1}), ints({0, 0, 0, 0, 1}));
  expect_sound(r);
  EXPECT_EQ(param(r, "p"), RatFn(Rat(0), r.section.parameter));
  const ConstructionResult r2 = thm16_quartic(ints({0, 0, 0, 0, 1}), ints({0, 0, 0, 1}));
  expect_sound(r2);
  const std::string u = r2.section.parameter;
  EXPECT_EQ(param(r2, "p"), RatFn(Rat(1, 2), u) / var(u));
  EXPECT_THROW(thm16_quartic(ints({0, 0, 1, 0, 1}), ints({1, 0, 0, 0, 1})), PreconditionError);
}
