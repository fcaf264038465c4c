#include "ellsurf/ratfn.hpp"

#include <stdexcept>

namespace ellsurf {

RatFn::RatFn(Poly p) : num_(std::move(p)), den_(Poly::constant(1, num_.var())) {}

RatFn::RatFn(const Rat& c, std::string var) : num_(Poly::constant(c, var)), den_(Poly::constant(1, std::move(var))) {}

RatFn::RatFn(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly(den.var());
    den_ = Poly::constant(1, den.var());
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  const Rat lead = den.leading();
  if (!lead.is_one()) {
    const Rat inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFn RatFn::with_var(const std::string& var) const {
  return RatFn(num_.with_var(var), den_.with_var(var), Canonical{});
}

std::optional<Rat> RatFn::eval(const Rat& x) const {
  const Rat d = den_(x);
  if (d.is_zero()) return std::nullopt;
  return num_(x) / d;
}

Rat RatFn::operator()(const Rat& x) const {
  auto v = eval(x);
  if (!v) throw std::domain_error("rational function evaluated at a pole: " + x.str());
  return *v;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  const Rat lead = num_.leading();
  const Rat inv = lead.inverse();
  return RatFn(den_ * inv, num_ * inv, Canonical{});
}

RatFn RatFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  const auto e = static_cast<unsigned>(k);
  return RatFn(num_.pow(e), den_.pow(e), Canonical{});
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Canonical{}); }

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ + b.num_);
  if (b.is_polynomial()) return RatFn(a.num_ + b.num_ * a.den_, a.den_, RatFn::Canonical{});
  if (a.is_polynomial()) return RatFn(a.num_ * b.den_ + b.num_, b.den_, RatFn::Canonical{});
  // Henrici: with g = gcd(b1, b2), a1/b1 + a2/b2 = (a1 b2' + a2 b1') / (b1' b2' g)
  const Poly g = gcd(a.den_, b.den_);
  if (g.degree() <= 0) return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFn::Canonical{});
  const Poly ad = Poly::exact_div(a.den_, g);
  const Poly bd = Poly::exact_div(b.den_, g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RatFn(Poly(a.var()));
  const Poly h = gcd(n, g);
  if (h.degree() <= 0) return RatFn(std::move(n), ad * bd * g, RatFn::Canonical{});
  return RatFn(Poly::exact_div(n, h), ad * bd * Poly::exact_div(g, h), RatFn::Canonical{}).with_var(a.var());
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn(Poly(a.var()));
  if (a.is_constant()) return RatFn(b.num_ * a.num_.leading(), b.den_, RatFn::Canonical{});
  if (b.is_constant()) return RatFn(a.num_ * b.num_.leading(), a.den_, RatFn::Canonical{});
  // Cross-cancel before multiplying.
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!ad.is_constant() && !bn.is_constant()) {
    const Poly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = Poly::exact_div(bn, g);
      ad = Poly::exact_div(ad, g);
    }
  }
  if (!bd.is_constant() && !an.is_constant()) {
    const Poly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = Poly::exact_div(an, g);
      bd = Poly::exact_div(bd, g);
    }
  }
  Poly n = an * bn;
  Poly d = ad * bd;
  const Rat lead = d.leading();
  if (!lead.is_one()) {
    const Rat inv = lead.inverse();
    n *= inv;
    d *= inv;
  }
  return RatFn(std::move(n), std::move(d), RatFn::Canonical{});
}

RatFn compose(const Poly& p, const RatFn& r) {
  const std::string& var = r.var();
  if (p.is_constant()) return RatFn(p.coeff(0), var);
  if (r.is_polynomial()) {
    // r = n / c with c a nonzero constant (monic, so c = 1).
    return RatFn(p.compose(r.num()));
  }
  // p(n/d) = sum c_i n^i d^(k-i) / d^k; gcd(n, d) = 1 and c_k != 0 make it reduced.
  const int k = p.degree();
  const Poly& n = r.num();
  const Poly& d = r.den();
  std::vector<Poly> dpow(static_cast<std::size_t>(k) + 1);
  dpow[0] = Poly::constant(1, var);
  for (int i = 1; i <= k; ++i) dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i) - 1] * d;
  Poly acc = Poly::constant(p.coeff(k), var);
  for (int j = k - 1; j >= 0; --j) {
    acc = acc * n;
    if (!p.coeff(j).is_zero()) acc += dpow[static_cast<std::size_t>(k - j)] * p.coeff(j);
  }
  return RatFn(std::move(acc), std::move(dpow[static_cast<std::size_t>(k)]), RatFn::Canonical{}).with_var(var);
}

RatFn compose(const RatFn& f, const RatFn& r) { return compose(f.num(), r) / compose(f.den(), r); }

}  // namespace ellsurf
