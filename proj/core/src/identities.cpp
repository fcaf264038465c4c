#include "ellsurf/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ellsurf/errors.hpp"

namespace ellsurf {

Poly triple_residual(const Poly& g, const Poly& x, const Poly& y, const Poly& z) {
  return x * x - y * y * y - g.compose(z);
}

PolyTriple make_triple(const Poly& g, Poly x, Poly y, Poly z) {
  Poly res = triple_residual(g, x, y, z);
  return PolyTriple{std::move(x), std::move(y), std::move(z), std::move(res)};
}

Poly SexticCoeffs::poly(const std::string& var) const { return Poly({e, d, c, b, a, 0, 1}, var); }

QuarticCurve thm10_curve_C(const Rat& a, const Rat& b, const Rat& c) {
  return QuarticCurve{Poly({Rat(6) * (a * a - Rat(12) * c), Rat(48) * b, Rat(-12) * a, 0, 1}, "s")};
}

Rat thm10_D(const Rat& a, const Rat& b, const Rat& c) {
  return Rat(25) * a.pow(6) - Rat(144) * a.pow(3) * b * b - Rat(2592) * b.pow(4) - Rat(180) * a.pow(4) * c +
         Rat(5184) * a * b * b * c - Rat(1296) * a * a * c * c - Rat(1728) * c.pow(3);
}

PointQ Thm10Model::to_E(const Rat& s, const Rat& v) const {
  return PointQ(Rat(2) * (Rat(-2) * a + s * s + v), Rat(4) * (Rat(12) * b - Rat(6) * a * s + s * s * s + s * v));
}

std::pair<Rat, Rat> Thm10Model::to_C(const PointQ& P) const {
  if (P.is_infinity()) throw PreconditionError("affine point", "the map to C is undefined at infinity");
  const Rat den = Rat(16) * a - Rat(2) * P.x();
  if (den.is_zero()) throw PreconditionError("X != 8a", "exceptional point of the map to C");
  const Rat s = (Rat(48) * b - P.y()) / den;
  return {s, Rat(2) * a + P.x() / Rat(2) - s * s};
}

Thm10Model thm10_weierstrass(const Rat& a, const Rat& b, const Rat& c) {
  CurveQ E(Rat(-72) * (a * a - Rat(4) * c), Rat(64) * (a.pow(3) + Rat(36) * b * b - Rat(36) * a * c));
  return Thm10Model{a, b, c, std::move(E)};
}

std::pair<Rat, Rat> thm10_printed_double(const Rat& a, const Rat& b, const Rat& c) {
  const Rat x1 = (Rat(25) * a.pow(4) - Rat(256) * a * b * b + Rat(120) * a * a * c + Rat(144) * c) / (Rat(16) * b * b);
  const Rat y1 = Rat(48) * b + (Rat(5) * a * a + Rat(12) * c) *
                                   (Rat(25) * a.pow(4) - Rat(384) * a * b * b + Rat(120) * a * a * c + Rat(144) * c * c) /
                                   (Rat(64) * b.pow(3));
  return {x1, y1};
}

Thm10Ansatz thm10_ansatz(const SexticCoeffs& g, const Rat& s, const Rat& v) {
  Thm10Ansatz A;
  A.s = s;
  A.v = v;
  A.u = (Rat(3) * s * s + Rat(2) * g.a + v) / Rat(12);
  A.p = Rat(2) * s;
  A.q = (g.a + Rat(2) * s * s + Rat(12) * A.u) / Rat(6);
  A.r = (Rat(3) * g.b - Rat(2) * g.a * s - s.pow(3) + Rat(12) * s * A.u) / Rat(18);
  A.x = Poly({A.r, A.q, A.p, 3}, "T");
  A.y = Poly({A.u, s, 2}, "T");
  A.z = Poly::identity("T");
  const Poly res = triple_residual(g.poly("T"), A.x, A.y, A.z);
  if (res.degree() > 1) throw std::logic_error("thm10 ansatz: residual of degree " + std::to_string(res.degree()));
  A.a0 = res.coeff(0);
  A.a1 = res.coeff(1);
  return A;
}

const char* source_name(PointSource s) {
  switch (s) {
    case PointSource::SeedMultiple: return "seed-multiple";
    case PointSource::WeierstrassSearch: return "weierstrass-search";
    case PointSource::QuarticSearch: return "quartic-search";
    case PointSource::RationalC: return "rational-C";
  }
  return "?";
}

namespace {

struct Depressed {
  SexticCoeffs coeffs;
  Rat shift;
};

Depressed depress_sextic(const Poly& g) {
  if (g.degree() != 6 || !g.leading().is_one()) throw PreconditionError("g monic of degree 6");
  const Rat k = g.coeff(5) / Rat(6);
  const Poly gd = g.shift(-k);
  return {SexticCoeffs{gd.coeff(4), gd.coeff(3), gd.coeff(2), gd.coeff(1), gd.coeff(0)}, k};
}

using Visit = std::function<bool(PointSource, const Rat&, const Rat&)>;

// Points (s, v) on C in search order; stops when visit returns false.
void enumerate_points(const SexticCoeffs& g, const Thm10Budget& budget, const Visit& visit) {
  std::set<std::pair<Rat, Rat>> seen;
  auto emit = [&](PointSource src, const Rat& s, const Rat& v) {
    if (!seen.insert({s, v}).second) return true;
    return visit(src, s, v);
  };
  if (g.a.is_zero() && g.b.is_zero() && g.c.is_zero()) {
    // U = s^4: every s gives v = +-s^2.
    for (int i = 0; i < 2 * budget.seed_multiples; ++i) {
      const Rat s = specialization_value(i);
      if (!emit(PointSource::RationalC, s, s * s) || !emit(PointSource::RationalC, s, -(s * s))) return;
    }
    return;
  }
  const QuarticCurve C = thm10_curve_C(g.a, g.b, g.c);
  const Thm10Model M = thm10_weierstrass(g.a, g.b, g.c);
  auto from_E = [&](PointSource src, const PointQ& Q) {
    if (Q.is_infinity() || Q.x() == Rat(8) * g.a) return true;
    const auto [s, v] = M.to_C(Q);
    if (!C.contains(s, v)) throw std::logic_error("thm10: map to C left the curve");
    return emit(src, s, v);
  };
  if (!M.E.is_singular()) {
    if (!g.b.is_zero()) {
      const PointQ P = M.seed();
      PointQ Q = P;
      for (int m = 2; m <= budget.seed_multiples; ++m) {
        Q = add(M.E, Q, P);
        if (Q.is_infinity()) break;
        if (!from_E(PointSource::SeedMultiple, Q)) return;
      }
    }
    const IntegralModel im = integral_model(M.E);
    bool go = true;
    for_each_point(im.curve, budget.weierstrass_height, [&](const PointQ& Q) {
      go = from_E(PointSource::WeierstrassSearch, im.from_model(Q));
      return go;
    });
    if (!go) return;
  }
  for (long den = 1; den <= budget.quartic_height; ++den) {
    for (long num = -budget.quartic_height; num <= budget.quartic_height; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const Rat s(num, den);
      const Rat val = C.U(s);
      if (val.sign() < 0) continue;
      auto v = kth_power_test(val, 2);
      if (!v) continue;
      if (!emit(PointSource::QuarticSearch, s, *v)) return;
      if (!v->is_zero() && !emit(PointSource::QuarticSearch, s, -*v)) return;
    }
  }
}

Thm10Solution solve_with(const Poly& g, const Poly& h, const Thm10Budget& budget) {
  const Depressed dg = depress_sextic(g);
  std::optional<Thm10Solution> out;
  int degenerate = 0;
  enumerate_points(dg.coeffs, budget, [&](PointSource src, const Rat& s, const Rat& v) {
    Thm10Ansatz A = thm10_ansatz(dg.coeffs, s, v);
    if (A.a1.is_zero()) {
      ++degenerate;
      return true;
    }
    const Poly T = (h.with_var(h.is_constant() ? "t" : h.var()) - Poly::constant(A.a0, h.var())) * A.a1.inverse();
    Poly x = A.x.compose(T);
    Poly y = A.y.compose(T);
    Poly z = A.z.compose(T) - Poly::constant(dg.shift, T.var());
    PolyTriple tr = make_triple(g.with_var(T.var()), std::move(x), std::move(y), std::move(z));
    if (!(tr.residual == h)) throw std::logic_error("thm10: residual differs from the target");
    out = Thm10Solution{std::move(tr), std::move(A), src, dg.shift};
    return false;
  });
  if (!out) {
    throw BudgetExhausted("no point on C with a1 != 0 within the search budget (" + std::to_string(degenerate) +
                          " points gave a1 = 0)");
  }
  return std::move(*out);
}

}  // namespace

std::vector<std::pair<PointSource, Thm10Ansatz>> thm10_candidates(const Poly& g, const Thm10Budget& budget) {
  const Depressed dg = depress_sextic(g);
  std::vector<std::pair<PointSource, Thm10Ansatz>> out;
  enumerate_points(dg.coeffs, budget, [&](PointSource src, const Rat& s, const Rat& v) {
    out.emplace_back(src, thm10_ansatz(dg.coeffs, s, v));
    return true;
  });
  return out;
}

Thm10Solution thm10_solve(const Poly& g, const Thm10Budget& budget) {
  return solve_with(g, Poly::identity("t"), budget);
}

Thm10Solution cor12_represent(const Poly& g, const Poly& h, const Thm10Budget& budget) {
  return solve_with(g, h, budget);
}

ConstructionResult cor13_section(const Rat& e) {
  if (e.is_zero()) throw PreconditionError("e != 0", "g = t^6 gives a split surface");
  const std::string v = "s";
  const RatFn s(Poly::identity(v));
  auto K = [&](const Rat& c) { return RatFn(c, v); };
  const RatFn s6 = s.pow(6);
  const RatFn chi1 = -(K(Rat(648) * e) + s6) / (K(6) * s.pow(5));
  const RatFn X = (K(Rat(419904) * e * e) - K(Rat(648) * e) * s6 + s6 * s6) / (K(18) * s.pow(10));
  const RatFn Y = -(K(Rat(272097792) * e.pow(3)) - K(Rat(419904) * e * e) * s6 + K(Rat(1944) * e) * s6 * s6 + s6.pow(3)) /
                  (K(72) * s.pow(15));
  Surface S = Surface::g6(Poly({e, 0, 0, 0, 0, 0, 1}, "t"));
  Section sec{v, chi1, X, Y};
  if (!verify_section(S, sec)) throw std::logic_error("cor13: section fails the surface equation");
  Certificate cert = certify_non_torsion(S, sec);
  return ConstructionResult{std::move(S), std::move(sec), {{"chi1", chi1}}, std::move(cert), "cor13"};
}

namespace {

Poly sextic_dT(const Rat& d, const Rat& e) { return Poly({e, d, 0, 0, 0, 0, 1}, "T"); }

}  // namespace

Poly r10_difference(const Rat& s, const Rat& d, const Rat& e) {
  const Poly x({s.pow(3) / Rat(18), Rat(2) * s * s / Rat(3), Rat(2) * s, 3}, "T");
  const Poly y({s * s / Rat(6), s, 2}, "T");
  const Poly lhs = x * x - y * y * y - sextic_dT(d, e);
  const Poly rhs({-(Rat(648) * e + s.pow(6)) / Rat(648), -(Rat(648) * d + Rat(6) * s.pow(5)) / Rat(648)}, "T");
  return lhs - rhs;
}

namespace {

Poly r11_with(const Rat& s, const Rat& d, const Rat& e, const Rat& xcoef) {
  const Poly x({s.pow(3) / Rat(6), xcoef, Rat(2) * s, 3}, "T");
  const Poly y({s * s / Rat(3), s, 2}, "T");
  const Poly lhs = x * x - y * y * y - sextic_dT(d, e);
  const Poly rhs({-(Rat(108) * e + s.pow(6)) / Rat(108), -d}, "T");
  return lhs - rhs;
}

bool verify_sampled(const std::function<Poly(const Rat&, const Rat&, const Rat&)>& diff, int samples) {
  const std::pair<Rat, Rat> de[] = {{0, 0}, {1, 0}, {0, 1}};
  for (const auto& [d, e] : de) {
    if (!identity_holds_by_sampling([&](const Rat& s) { return diff(s, d, e); }, samples)) return false;
  }
  return true;
}

}  // namespace

Poly r11_difference(const Rat& s, const Rat& d, const Rat& e) { return r11_with(s, d, e, s * s); }
Poly r11_printed_difference(const Rat& s, const Rat& d, const Rat& e) { return r11_with(s, d, e, Rat(2) * s * s); }

bool verify_r10(int samples) { return verify_sampled(r10_difference, samples); }
bool verify_r11(int samples) { return verify_sampled(r11_difference, samples); }

RatTriple cor14_triple(long n) {
  const Rat N(n);
  const Rat x = -(N.pow(3) - Rat(72) * N * N + Rat(15552) * N + Rat(373248)) / Rat(kCor14Denominator);
  const Rat y = (N * N - Rat(72) * N + Rat(5184)) / Rat(2592);
  const Rat z = -(N + Rat(72)) / Rat(72);
  return {x, y, z};
}

RatTriple cor14_printed(long n) {
  const Rat N(n);
  const Rat x = (N.pow(3) - Rat(72) * N * N + Rat(15552) * N + Rat(373248)) / Rat(24416);
  const Rat y = (N * N - Rat(72) * N + Rat(5184)) / Rat(2592);
  const Rat z = (N + Rat(72)) / Rat(72);
  return {x, y, z};
}

PolyTriple cor15_family(Cor15Case which, const Rat& t, bool literal) {
  const std::string v = "n";
  const Rat t2 = t * t, t3 = t2 * t, t5 = t3 * t2, t6 = t5 * t, t10 = t5 * t5, t15 = t10 * t5;
  Poly x, y, z;
  if (which == Cor15Case::First) {
    x = Poly({Rat(36) * t3 * (Rat(-1) + Rat(432) * t5 - Rat(62208) * t10 + Rat(6718464) * t15),
              Rat(36) * t2 * (Rat(1) - Rat(288) * t5 + Rat(46656) * t10), Rat(12) * t * (Rat(-1) + Rat(324) * t5), 3},
             v);
    y = Poly({Rat(12) * t2 * (Rat(1) - Rat(216) * t5 + Rat(31104) * t10), Rat(6) * t * (Rat(-1) + Rat(288) * t5), 2}, v);
    z = Poly({Rat(-432) * t6, -1}, v);
  } else {
    const Rat mid = literal ? Rat(72).pow(5) : Rat(72) * t5;
    x = Poly({Rat(12) * t3 * (Rat(-1) + Rat(144) * t5 - Rat(5184) * t10 + Rat(93312) * t15),
              Rat(24) * t2 * (Rat(1) - mid + Rat(1944) * t10), Rat(12) * t * (Rat(-1) + Rat(54) * t5), 3},
             v);
    y = Poly({Rat(6) * t2 * (Rat(1) - Rat(72) * t5 + Rat(1728) * t10), Rat(6) * t * (Rat(-1) + Rat(48) * t5), 2}, v);
    z = Poly({Rat(-72) * t6, -1}, v);
  }
  // residual against g = z^6 (the d z term is added by the caller)
  return make_triple(Poly::monomial(1, 6, v), std::move(x), std::move(y), std::move(z));
}

Poly cor15_select_d(Cor15Case which, bool literal) {
  std::vector<Poly> cands;
  if (which == Cor15Case::First) {
    cands = {Poly::constant(1), Poly::constant(-1)};
  } else {
    for (int sgn5 : {-1, 1})
      for (int sgn0 : {1, -1}) cands.push_back(Poly({Rat(sgn0), 0, 0, 0, 0, Rat(72 * sgn5)}, "t"));
  }
  const Poly n = Poly::identity("n");
  for (const Poly& d : cands) {
    const bool closes = identity_holds_by_sampling(
        [&](const Rat& t) {
          const PolyTriple tr = cor15_family(which, t, literal);
          return tr.residual - tr.z * d(t) - n;
        },
        64);
    if (closes) return d;
  }
  throw PreconditionError("a closing sign for d", literal ? "literal family does not close" : "no candidate closes");
}

IntTriple cor15_triple(Cor15Case which, long n, long t) {
  static const Poly d1 = cor15_select_d(Cor15Case::First);
  static const Poly d2 = cor15_select_d(Cor15Case::Second);
  const PolyTriple tr = cor15_family(which, Rat(t));
  const Rat d = (which == Cor15Case::First ? d1 : d2)(Rat(t));
  const Rat N(n);
  return {tr.x(N).num(), tr.y(N).num(), tr.z(N).num(), d.num()};
}

Poly rem11_residual() {
  const Poly g({0, -150, 9, 6, 6, 0, 1}, "T");
  return triple_residual(g, Poly({25, 33, 12, 3}, "T"), Poly({10, 6, 2}, "T"), Poly::identity("T"));
}

bool rem11_check() { return rem11_residual() == Poly::constant(-375, "T"); }

Order3Instance rem11_order3(const Rat& p, const Rat& b) {
  Order3Instance o;
  o.a = Rat(6) * p * p;
  o.b = b;
  o.c = p * (Rat(4) * b - Rat(15) * p.pow(3));
  o.model = thm10_weierstrass(o.a, o.b, o.c);
  o.delta = o.model.E.discriminant();
  o.delta_formula = Rat(-764411904) * b.pow(3) * (Rat(3) * b - Rat(16) * p.pow(3));
  o.point = o.model.seed();
  if (!o.model.E.is_singular() && on_curve(o.model.E, o.point)) o.order = order_classify(o.model.E, o.point);
  o.alternate_on_curve = on_curve(o.model.E, PointQ(Rat(6) * p * p, Rat(48) * b));
  return o;
}

}  // namespace ellsurf
