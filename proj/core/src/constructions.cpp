#include "ellsurf/constructions.hpp"

#include <algorithm>

#include "ellsurf/errors.hpp"

namespace ellsurf {

const Param* ConstructionResult::parameter(const std::string& name) const {
  for (const auto& [key, value] : parameters)
    if (key == name) return &value;
  return nullptr;
}

namespace {

RatFn K(const Rat& c, const std::string& v) { return RatFn(c, v); }
RatFn var(const std::string& v) { return RatFn(Poly::identity(v)); }

// k with p(t - k) free of the subleading term.
Rat depression_shift(const Poly& p) {
  const int n = p.degree();
  return p.coeff(n - 1) / (Rat(n) * p.leading());
}

// t = phi(s) - k, i.e. moving a base change from depressed coordinates back.
RatFn unshift(const RatFn& phi, const Rat& k) { return k.is_zero() ? phi : phi - K(k, phi.var()); }

ConstructionResult finish(Surface S, Section sec, std::vector<std::pair<std::string, Param>> params,
                          std::string tag) {
  if (sec.phi.is_constant()) throw PreconditionError("base change nonconstant", tag);
  if (!verify_section(S, sec)) throw std::logic_error(tag + ": constructed section fails the surface equation");
  Certificate cert = certify_non_torsion(S, sec);
  return ConstructionResult{std::move(S), std::move(sec), std::move(params), std::move(cert), std::move(tag)};
}

}  // namespace

ConstructionResult thm1_deg3(const Poly& f, const Rat& r) {
  if (f.degree() > 3) throw PreconditionError("deg f <= 3", "degree " + std::to_string(f.degree()));
  const Rat a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  if (a.is_zero() && b.is_zero())
    throw PreconditionError("a != 0 or b != 0", "deg f <= 1: the surface splits after t = (s^4 - d)/c");
  if (r.is_zero()) throw PreconditionError("r != 0");
  const std::string v = "s";
  const RatFn s = var(v);
  const Rat r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r6 = r3 * r3;
  const Rat p = a / r2;
  const RatFn q = K((a * a + b * r4) / r6, v) - s * K(Rat(2) * a / r3, v);
  // F(pT + q, rT + s, T) = a0 + a1 T once a2 = a3 = 0
  const RatFn a0 = K(-d, v) - q * q + q * s * s;
  const RatFn a1 = K(-c, v) - K(Rat(2) * p, v) * q + K(Rat(2) * r, v) * q * s + K(p, v) * s * s;
  if (a1.is_zero()) throw PreconditionError("phi_2 != 0", "the linear coefficient vanishes identically");
  const RatFn phi = -(a0 / a1);
  const Rat r7 = r6 * r, r8 = r4 * r4, r9 = r8 * r, r10 = r9 * r, r12 = r6 * r6;
  const Poly phi1({a.pow(4) + Rat(2) * a * a * b * r4 + b * b * r8 + d * r12, Rat(-4) * a.pow(3) * r3 - Rat(4) * a * b * r7,
                   Rat(3) * a * a * r6 - b * r10, Rat(2) * a * r9},
                  v);
  const Poly phi2({r4 * (Rat(2) * a.pow(3) + Rat(2) * a * b * r4 + c * r8), Rat(-2) * r7 * (Rat(3) * a * a + b * r4),
                   Rat(3) * a * r10},
                  v);
  const RatFn X = K(p, v) * phi + q;
  const RatFn Y = X * (K(r, v) * phi + s);
  return finish(Surface::fx(f), Section{v, phi, X, Y},
                {{"r", r}, {"p", p}, {"q", q}, {"phi1", RatFn(phi1)}, {"phi2", RatFn(phi2)}, {"phi", phi}}, "thm1-3");
}

ConstructionResult thm1_deg4_from_point(const Poly& f, const Rat& t0, const Rat& x0, const Rat& y0) {
  if (f.degree() != 4) throw PreconditionError("deg f = 4", "degree " + std::to_string(f.degree()));
  if (y0 * y0 != x0 * x0 * x0 + f(t0) * x0) throw PreconditionError("(x0, y0) on E_t0");
  if (x0.is_zero()) throw PreconditionError("x0 != 0");
  const Rat w = Rat(2) * x0 * x0 * x0 - y0 * y0;
  if (w.is_zero()) throw PreconditionError("2*x0^3 - y0^2 != 0");
  const Rat k = depression_shift(f);
  const Poly fd = f.shift(-k);
  const Rat a = fd.coeff(4), b = fd.coeff(2), c = fd.coeff(1);
  const Rat tau0 = t0 + k;
  const std::string v = "r";
  const RatFn r = var(v);
  const RatFn X0 = K(x0, v), Y0 = K(y0, v);
  const RatFn q = -(X0 * X0 * (K(c + Rat(2) * b * tau0 + Rat(4) * a * tau0.pow(3), v) - K(2, v) * r * Y0)) / K(w, v);
  const RatFn p = -(X0 * (K(b * x0, v) + q * q * X0 + K(Rat(6) * a * tau0 * tau0 * x0, v) - r * r * X0 * X0 -
                          K(2, v) * q * r * Y0)) /
                  K(w, v);
  const RatFn den = (K(a, v) + p * p - p * r * r) * X0;
  if (den.is_zero()) throw PreconditionError("a + p^2 - p*r^2 != 0", "denominator vanishes identically");
  const RatFn T =
      -((K(2, v) * p * q * X0 - q * r * r * X0 + K(Rat(4) * a * tau0 * x0, v) - K(2, v) * p * r * Y0) / den);
  const RatFn X = p * T * T + q * T + X0;
  const RatFn Y = X * (r * T + K(y0 / x0, v));
  const RatFn psi = T + K(t0, v);
  return finish(Surface::fx(f), Section{v, psi, X, Y}, {{"p", p}, {"q", q}, {"T", T}, {"psi", psi}}, "thm1-4");
}

ConstructionResult thm2_quartic(const Poly& f) {
  if (f.degree() != 4) throw PreconditionError("deg f = 4", "degree " + std::to_string(f.degree()));
  const Rat k = depression_shift(f);
  const Poly fd = f.shift(-k);
  const Rat a = fd.coeff(4), b = fd.coeff(2), c = fd.coeff(1), d = fd.coeff(0);
  if (c.is_zero()) {
    throw PreconditionError("a*c != 0 after removing the cubic term",
                            f.is_even() ? "f is even" : "f(t) != f(-t) but the shifted quartic is even");
  }
  const std::string v = "u";
  const RatFn u = var(v);
  const RatFn u4 = u.pow(4);
  const RatFn phid = -(K(-b * b + Rat(4) * a * d, v) + K(Rat(4) * a.pow(3), v) * u4) / K(Rat(4) * a * c, v);
  const RatFn X = K(a, v) * u * u;
  const RatFn Y = (K(-b.pow(4) - Rat(8) * a * b * c * c + Rat(8) * a * b * b * d - Rat(16) * a * a * d * d, v) * u +
                   K(Rat(8) * a.pow(3) * (b * b - Rat(4) * a * d), v) * u.pow(5) - K(Rat(16) * a.pow(6), v) * u.pow(9)) /
                  K(Rat(16) * a * c * c, v);
  const RatFn phi = unshift(phid, k);
  return finish(Surface::fx(f), Section{v, phi, X, Y},
                {{"shift", k}, {"p", Rat(0)}, {"q", K(b / Rat(2), v) * u}, {"phi", phi}}, "thm2");
}

std::pair<Rat, Rat> cor4_forward(const Rat& x, const Rat& y) {
  if (x.is_zero()) throw PreconditionError("x != 0", "the map to v^2 = u^4 + f is undefined at x = 0");
  return {y / (Rat(2) * x), (y * y - Rat(2) * x * x * x) / (Rat(4) * x * x)};
}

std::pair<Rat, Rat> cor4_backward(const Rat& u, const Rat& v) {
  const Rat m = u * u - v;
  return {Rat(2) * m, Rat(4) * u * m};
}

QuarticTransport cor4_transport(const Poly& f) {
  if (f.degree() != 4) throw PreconditionError("deg f = 4", "degree " + std::to_string(f.degree()));
  if (f.is_even()) throw PreconditionError("f not even");
  if (squarefree_part(f).degree() < 2) throw PreconditionError("f has at least two distinct roots");
  ConstructionResult src = thm2_quartic(f * Rat(-4));
  const RatFn& x = src.section.X;
  const RatFn& y = src.section.Y;
  if (x.is_zero()) throw PreconditionError("x != 0 on the section");
  const std::string& v = src.section.parameter;
  RatFn uu = y / (K(2, v) * x);
  RatFn vv = (y * y - K(2, v) * x * x * x) / (K(4, v) * x * x);
  RatFn ww = src.section.phi;
  return QuarticTransport{std::move(uu), std::move(vv), std::move(ww), std::move(src)};
}

RatFn cor4_residual(const Poly& f, const QuarticTransport& tr) {
  return tr.v * tr.v - tr.u.pow(4) - compose(f, tr.w);
}

ConstructionResult thm5_sextic(const Poly& g) {
  if (g.degree() != 6 || !g.leading().is_one()) throw PreconditionError("g monic of degree 6");
  const Rat k = depression_shift(g);
  const Poly gd = g.shift(-k);
  const Rat a = gd.coeff(4), b = gd.coeff(3), c = gd.coeff(2), d = gd.coeff(1), e = gd.coeff(0);
  if (b.is_zero() && d.is_zero()) {
    throw PreconditionError("b != 0 or d != 0 after removing the t^5 term",
                            g.is_even() ? "g is even" : "g is not even but the shifted sextic is");
  }
  const std::string v = "u";
  const RatFn u = var(v);
  const RatFn u2 = u * u;
  const RatFn p = K(b / Rat(2), v) / u;
  const RatFn q = (K(Rat(-3) * b * b, v) + K(Rat(-4) * a * a + Rat(12) * c, v) * u2 + K(Rat(8) * a, v) * u2 * u2 -
                   K(4, v) * u2.pow(3)) /
                  (K(24, v) * u2 * u);
  const Rat s = a * a - Rat(3) * c;
  const RatFn chi1 = K(Rat(-27) * b.pow(4), v) - K(Rat(72) * b * b * s, v) * u2 -
                     K(Rat(48) * (a.pow(4) - Rat(3) * a * b * b - Rat(6) * a * a * c + Rat(9) * c * c), v) * u2.pow(2) +
                     K(Rat(8) * (Rat(16) * a.pow(3) - Rat(9) * b * b - Rat(72) * a * c + Rat(216) * e), v) * u2.pow(3) -
                     K(Rat(96) * s, v) * u2.pow(4) + K(16, v) * u2.pow(6);
  const RatFn chi2 = K(72, v) * u2 *
                     (K(Rat(3) * b.pow(3), v) + K(Rat(4) * b * s, v) * u2 - K(Rat(8) * (a * b - Rat(3) * d), v) * u2 * u2 +
                      K(Rat(4) * b, v) * u2.pow(3));
  if (chi2.is_zero()) throw PreconditionError("chi_2 != 0");
  const RatFn T = -(chi1 / chi2);
  const RatFn X = (u2 - K(a, v) - K(3, v) * T * T) / K(3, v);
  const RatFn Y = u * T * T + p * T + q;
  const RatFn chi = unshift(T, k);
  return finish(Surface::g6(g), Section{v, chi, X, Y},
                {{"shift", k}, {"p", p}, {"q", q}, {"chi1", chi1}, {"chi2", chi2}, {"T", T}, {"chi", chi}}, "thm5");
}

namespace {

struct EvenSextic {
  Rat a, c, e;
};

EvenSextic even_sextic(const Poly& g) {
  if (g.degree() != 6 || !g.leading().is_one()) throw PreconditionError("g monic of degree 6");
  if (!g.is_even()) throw PreconditionError("g even");
  return {g.coeff(4), g.coeff(2), g.coeff(0)};
}

struct Candidate {
  Rat p, q, T;
  Thm6Route route;
};

bool sixth_power_ratio(const Rat& num, const Rat& den) {
  const Rat ratio = num / den;
  return ratio.sign() > 0 && kth_power_test(ratio, 6).has_value();
}

}  // namespace

Thm6Step thm6_step(const Poly& g, const Rat& t0, const PointQ& P0, const std::vector<Rat>& history, Thm6Route route) {
  const EvenSextic gs = even_sextic(g);
  const Rat &a = gs.a, &c = gs.c;
  if (a.is_zero() && c.is_zero()) throw PreconditionError("a != 0 or c != 0");
  if (P0.is_infinity()) throw PreconditionError("P0 affine");
  const Rat &x0 = P0.x(), &y0 = P0.y();
  if (y0 * y0 != x0 * x0 * x0 + g(t0)) throw PreconditionError("P0 on E^t0");
  if (x0.is_zero() || y0.is_zero()) throw PreconditionError("x0*y0 != 0");
  if (g(t0).is_zero()) throw PreconditionError("g(t0) != 0", "singular starting fiber");
  for (const Rat& ti : history)
    if (g(ti).is_zero()) throw PreconditionError("g(t_i) != 0 for earlier fibers");

  const Rat t02 = t0 * t0, t03 = t02 * t0, t04 = t03 * t0, t05 = t04 * t0;
  const Rat x02 = x0 * x0;
  // a1 = 0 gives p = alpha q + beta
  const Rat alpha = Rat(2) * y0 / (Rat(3) * x02);
  const Rat beta = (Rat(-2) * c * t0 - Rat(4) * a * t03 - Rat(6) * t05 + Rat(6) * t02 * y0) / (Rat(3) * x02);
  const Rat rest = -c - Rat(6) * a * t02 - Rat(6) * t04 + Rat(6) * t0 * y0;
  auto a2 = [&](const Rat& p, const Rat& q) { return q * q + Rat(6) * q * t02 - Rat(3) * p * p * x0 + rest; };
  auto a3 = [&](const Rat& p, const Rat& q) {
    return -p * p * p + Rat(6) * q * t0 - Rat(4) * a * t0 - Rat(2) * t03 + Rat(2) * y0;
  };

  std::vector<Candidate> cands;
  if (route != Thm6Route::R5) {
    // a2(alpha q + beta, q) = A q^2 + B q + C
    const Rat A = Rat(1) - Rat(3) * alpha * alpha * x0;
    const Rat B = Rat(6) * t02 - Rat(6) * alpha * beta * x0;
    const Rat C = Rat(-3) * beta * beta * x0 + rest;
    std::vector<Rat> qs;
    if (!A.is_zero()) {
      const Rat disc = B * B - Rat(4) * A * C;
      if (disc.sign() >= 0) {
        if (auto sq = kth_power_test(disc, 2)) {
          qs.push_back((-B - *sq) / (Rat(2) * A));
          if (!sq->is_zero()) qs.push_back((-B + *sq) / (Rat(2) * A));
        }
      }
    } else if (!B.is_zero()) {
      qs.push_back(-C / B);
    }
    std::sort(qs.begin(), qs.end());
    for (const Rat& q : qs) {
      const Rat p = alpha * q + beta;
      const Rat a4 = Rat(2) * q - a;
      if (a4.is_zero()) continue;
      cands.push_back({p, q, -a3(p, q) / a4, Thm6Route::TripleRoot});
    }
  }
  if (route != Thm6Route::TripleRoot) {
    const Rat q = a / Rat(2);
    const Rat p = alpha * q + beta;
    const Rat d3 = a3(p, q);
    if (!d3.is_zero()) cands.push_back({p, q, -a2(p, q) / d3, Thm6Route::R5});
  }

  std::vector<Rat> earlier{t0};
  earlier.insert(earlier.end(), history.begin(), history.end());
  std::string why = "no admissible candidate";
  for (const Candidate& cd : cands) {
    if (cd.T.is_zero()) {
      why = "T = 0";
      continue;
    }
    const Rat t1 = t0 + cd.T;
    const Rat k1 = g(t1);
    const FiberTorsion tors = fiber_torsion_g6(k1);
    if (tors.tag == TorsionTag::Singular || tors.tag == TorsionTag::Z3_432) {
      why = "g(t1) in {0, -432}";
      continue;
    }
    const PointQ P1(cd.p * cd.T + x0, cd.q * cd.T + y0 - t03 + t1 * t1 * t1);
    if (P1.x().is_zero() || P1.y().is_zero()) {
      why = "P1 has a zero coordinate";
      continue;
    }
    if (std::any_of(earlier.begin(), earlier.end(), [&](const Rat& ti) { return sixth_power_ratio(k1, g(ti)); })) {
      why = "g(t1)/g(t_i) is a sixth power";
      continue;
    }
    if (std::find(tors.witnesses.begin(), tors.witnesses.end(), P1) != tors.witnesses.end()) {
      why = "P1 is a torsion point";
      continue;
    }
    if (!on_curve(CurveQ(0, k1), P1)) throw std::logic_error("thm6_step: P1 off the fiber");
    return Thm6Step{cd.p, cd.q, cd.T, t1, negate(P1), P1, cd.route};
  }
  throw PreconditionError("admissible fiber step", why);
}

std::vector<ChainLink> thm6_chain(const Poly& g, const Rat& t0, const PointQ& P0, int n, Thm6Route route) {
  CurveQ E0(0, g(t0));
  if (E0.is_singular()) throw PreconditionError("g(t0) != 0");
  if (!order_classify(E0, P0).infinite()) throw PreconditionError("P0 of infinite order");
  std::vector<ChainLink> links;
  std::vector<Rat> history;
  Rat t = t0;
  PointQ P = P0;
  constexpr int kMultiples = 25;
  for (int step = 0; step < n; ++step) {
    const CurveQ E(0, g(t));
    bool found = false;
    PointQ Q;
    for (int m = 1; m <= kMultiples && !found; ++m) {
      Q = m == 1 ? P : add(E, Q, P);
      if (Q.is_infinity() || Q.x().is_zero() || Q.y().is_zero()) continue;
      try {
        const Thm6Step st = thm6_step(g, t, Q, history, route);
        if (!order_classify(CurveQ(0, g(st.t1)), st.P1).infinite()) continue;
        history.push_back(t);
        links.push_back(ChainLink{st.t1, st.P1, st.p, st.q, st.T, m});
        t = st.t1;
        P = st.P1;
        found = true;
      } catch (const PreconditionError&) {
      }
    }
    if (!found) throw BudgetExhausted("fiber chain: no admissible multiple up to " + std::to_string(kMultiples) + "P");
  }
  return links;
}

ConstructionResult rem7_curve(const Poly& g, const Rat& t0) {
  const EvenSextic gs = even_sextic(g);
  if (!g(t0).is_zero()) throw PreconditionError("g(t0) = 0");
  if (squarefree_part(g).degree() < 2) throw PreconditionError("g != t^6", "split surface");
  const Rat &a = gs.a, &c = gs.c;
  const std::string v = "u";
  const RatFn u = var(v);
  const RatFn x0 = u * u, y0 = x0 * u;
  const Rat t02 = t0 * t0, t03 = t02 * t0, t04 = t03 * t0, t05 = t04 * t0;
  const RatFn q = K(a / Rat(2), v);
  const RatFn p = -(K(Rat(2) * c * t0 + Rat(4) * a * t03 + Rat(6) * t05, v) - K(a + Rat(6) * t02, v) * y0) /
                  (K(3, v) * x0 * x0);
  const RatFn a2 = q * q + K(Rat(6) * t02, v) * q - K(3, v) * p * p * x0 - K(c + Rat(6) * a * t02 + Rat(6) * t04, v) +
                   K(Rat(6) * t0, v) * y0;
  const RatFn a3 = -(p * p * p) + K(Rat(6) * t0, v) * q - K(Rat(4) * a * t0 + Rat(2) * t03, v) + K(2, v) * y0;
  if (a3.is_zero()) throw PreconditionError("a3 != 0", "denominator vanishes identically");
  const RatFn T = -(a2 / a3);
  const RatFn t1 = T + K(t0, v);
  const RatFn X = p * T + x0;
  const RatFn Y = q * T + y0 - K(t03, v) + t1.pow(3);
  return finish(Surface::g6(g), Section{v, t1, X, Y}, {{"p", p}, {"q", q}, {"T", T}}, "rem7");
}

ConstructionResult cor8_deg5(const Poly& h) {
  if (h.degree() != 5) throw PreconditionError("deg h = 5", "degree " + std::to_string(h.degree()));
  if (!h(0).is_one()) throw PreconditionError("h(0) = 1");
  const Poly g = h.reversed(6);
  const Rat k = depression_shift(g);
  const Poly gd = g.shift(-k);
  ConstructionResult inner = [&] {
    if (!gd.is_even()) return thm5_sextic(g);
    // g(0) = 0, so the shifted sextic has the root k.
    ConstructionResult r = rem7_curve(gd, k);
    const Section& s = r.section;
    r.section.phi = unshift(s.phi, k);
    r.surface = Surface::g6(g);
    return r;
  }();
  const Section& s = inner.section;
  const std::string& v = s.parameter;
  // (X, Y, tau) on y^2 = x^3 + g(tau)  ->  (X/tau^2, Y/tau^3, 1/tau) on y^2 = x^3 + h(t)
  const RatFn tau = s.phi;
  Section out{v, tau.inverse(), s.X / (tau * tau), s.Y / tau.pow(3)};
  auto params = inner.parameters;
  params.emplace_back("gamma", out.phi);
  return finish(Surface::general(Poly(h.var()), h), std::move(out), std::move(params),
                "cor8/" + inner.tag);
}

ConstructionResult thm16_cubic(const Poly& f4, const Poly& g4, const Rat& r) {
  if (f4.degree() != 3) throw PreconditionError("deg f4 = 3", "degree " + std::to_string(f4.degree()));
  if (g4.degree() > 4) throw PreconditionError("deg g4 <= 4", "degree " + std::to_string(g4.degree()));
  if (g4.is_zero()) throw PreconditionError("g4 != 0", "y^2 = x^3 + f4 x is handled by the f-family construction");
  if (r.is_zero()) throw PreconditionError("r != 0");
  const Rat k = depression_shift(f4);
  const Poly fd = f4.shift(-k), gd = g4.shift(-k);
  const Rat a = fd.coeff(3), b = fd.coeff(1), c = fd.coeff(0);
  const Rat d = gd.coeff(4), e = gd.coeff(3), f = gd.coeff(2), g = gd.coeff(1), h = gd.coeff(0);
  const std::string v = "s";
  const RatFn s = var(v);
  const Rat r2 = r * r;
  const Rat p = (r2 - d) / a;
  const RatFn q = -(K(-d.pow(3) + a.pow(3) * e + Rat(3) * d * d * r2 - Rat(3) * d * r2 * r2 + r2.pow(3), v) -
                    K(Rat(2) * a.pow(3) * r, v) * s) /
                  K(a.pow(4), v);
  const RatFn P = K(p, v);
  const RatFn u = -(K(-f - b * p, v) - K(Rat(3) * p * p, v) * q + s * s) / K(Rat(2) * r, v);
  const RatFn num = K(h, v) + K(c, v) * q + q.pow(3) - u * u;
  const RatFn den = K(g + c * p, v) + K(b, v) * q + K(Rat(3) * p, v) * q * q - K(2, v) * s * u;
  if (den.is_zero()) throw PreconditionError("psi denominator != 0", "vanishes identically");
  const RatFn T = -(num / den);
  const RatFn X = P * T + q;
  const RatFn Y = K(r, v) * T * T + s * T + u;
  const RatFn psi = unshift(T, k);
  return finish(Surface::general(f4, g4), Section{v, psi, X, Y},
                {{"shift", k}, {"r", r}, {"p", p}, {"q", q}, {"u", u}, {"psi", psi}}, "thm16-3");
}

ConstructionResult thm16_quartic(const Poly& f4, const Poly& g4) {
  if (f4.degree() != 4) throw PreconditionError("deg f4 = 4", "degree " + std::to_string(f4.degree()));
  if (g4.degree() > 4) throw PreconditionError("deg g4 <= 4", "degree " + std::to_string(g4.degree()));
  const Rat k = depression_shift(f4);
  const Poly fd = f4.shift(-k), gd = g4.shift(-k);
  const Rat a = fd.coeff(4), b = fd.coeff(2), c = fd.coeff(1), d = fd.coeff(0);
  const Rat e = gd.coeff(4), f = gd.coeff(3), g = gd.coeff(2), h = gd.coeff(1), i = gd.coeff(0);
  if (c.is_zero() && f.is_zero() && h.is_zero())
    throw PreconditionError("c, f or h nonzero", "both polynomials are even after removing the cubic term of f4");
  const std::string v = "u";
  const RatFn u = var(v);
  const RatFn u2 = u * u;
  const RatFn x = (u2 - K(e, v)) / K(a, v);
  const RatFn p = K(f / Rat(2), v) / u;
  const RatFn q = (K(-a * f * f, v) + K(Rat(4) * (a * g - b * e), v) * u2 + K(Rat(4) * b, v) * u2 * u2) /
                  (K(Rat(8) * a, v) * u2 * u);
  // V(t) = x^3 + f4(t) x + g4(t); its t^4, t^3, t^2 terms are matched by (u T^2 + p T + q)^2
  const RatFn V1 = K(c, v) * x + K(h, v);
  const RatFn V0 = x.pow(3) + K(d, v) * x + K(i, v);
  const RatFn a1 = K(2, v) * p * q - V1;
  const RatFn a0 = q * q - V0;
  if (a1.is_zero()) throw PreconditionError("psi_1 denominator != 0", "vanishes identically");
  const RatFn T = -(a0 / a1);
  const RatFn Y = u * T * T + p * T + q;
  const RatFn psi = unshift(T, k);
  return finish(Surface::general(f4, g4), Section{v, psi, x, Y},
                {{"shift", k}, {"p", p}, {"q", q}, {"psi1", psi}}, "thm16-4");
}

}  // namespace ellsurf
