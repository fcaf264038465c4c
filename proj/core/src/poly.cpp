#include "ellsurf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ellsurf {

namespace {

const Rat& zero_rat() {
  static const Rat z;
  return z;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

Poly Poly::constant(const Rat& c, std::string var) {
  Poly p(std::move(var));
  if (!c.is_zero()) p.coeffs_.push_back(c);
  return p;
}

Poly Poly::monomial(const Rat& c, int degree, std::string var) {
  Poly p(std::move(var));
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat());
  p.coeffs_.back() = c;
  return p;
}

Poly Poly::identity(std::string var) { return monomial(1, 1, std::move(var)); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const std::string& Poly::merge_var(const Poly& a, const Poly& b) {
  if (a.var_ == b.var_ || b.is_constant()) return a.var_;
  if (a.is_constant()) return b.var_;
  throw std::invalid_argument("polynomials in different variables: " + a.var_ + ", " + b.var_);
}

bool Poly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rat();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const { return is_zero() ? zero_rat() : coeffs_.back(); }

Poly Poly::with_var(std::string var) const {
  Poly p = *this;
  p.var_ = std::move(var);
  return p;
}

Rat Poly::operator()(const Rat& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x.value() + it->value();
  return Rat(std::move(acc));
}

Poly Poly::derivative() const {
  Poly d(var_);
  if (coeffs_.size() <= 1) return d;
  d.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.coeffs_.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
  d.trim();
  return d;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rat inv = leading().inverse();
  Poly m = *this;
  for (auto& c : m.coeffs_) c *= inv;
  return m;
}

Poly Poly::shift(const Rat& k) const {
  // Taylor shift by repeated synthetic division.
  std::vector<mpq_class> a;
  a.reserve(coeffs_.size());
  for (const auto& c : coeffs_) a.push_back(c.value());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += k.value() * a[j];
  std::vector<Rat> out;
  out.reserve(n);
  for (auto& c : a) out.emplace_back(std::move(c));
  return Poly(std::move(out), var_);
}

Poly Poly::compose(const Poly& q) const {
  Poly acc(q.var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q;
    acc += Poly::constant(*it, q.var_);
  }
  return acc;
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(1, var_);
  Poly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::reversed(int deg) const {
  if (degree() > deg) throw std::invalid_argument("reversed: degree exceeds target");
  std::vector<Rat> out(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(deg - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Poly(std::move(out), var_);
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = merge_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = merge_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const std::string& var = Poly::merge_var(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(var);
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
  }
  std::vector<Rat> r;
  r.reserve(out.size());
  for (auto& c : out) r.emplace_back(std::move(c));
  return Poly(std::move(r), var);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || a.var_ == b.var_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::string& var = merge_var(a, b);
  if (a.degree() < b.degree()) return {Poly(var), a.with_var(var)};
  std::vector<mpq_class> r;
  r.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) r.push_back(c.value());
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Rat> q(a.coeffs_.size() - db);
  const mpq_class lead_inv = 1 / b.leading().value();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class f = r[k + db] * lead_inv;
    if (f != 0) {
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs_[j].value();
    }
    q[k] = Rat(std::move(f));
  }
  r.resize(db);
  std::vector<Rat> rem;
  rem.reserve(r.size());
  for (auto& c : r) rem.emplace_back(std::move(c));
  return {Poly(std::move(q), var), Poly(std::move(rem), var)};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

std::vector<mpz_class> primitive_integer_coefficients(const Poly& p) {
  std::vector<mpz_class> out;
  if (p.is_zero()) return out;
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  out.reserve(static_cast<std::size_t>(p.degree()) + 1);
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
  if (a.empty()) return;
  mpz_class g = 0;
  for (const auto& v : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    a.pop_back();
    ztrim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  std::string var = a.is_constant() ? b.var() : a.var();
  if (a.is_zero()) return b.monic().with_var(var);
  if (b.is_zero()) return a.monic().with_var(var);
  ZPoly x = primitive_integer_coefficients(a);
  ZPoly y = primitive_integer_coefficients(b);
  if (x.size() < y.size()) std::swap(x, y);
  // Primitive remainder sequence.
  while (!y.empty()) {
    ZPoly r = pseudo_rem(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> c;
  c.reserve(x.size());
  for (auto& v : x) c.emplace_back(v, x.back());
  return Poly(std::move(c), std::move(var));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  return Poly::exact_div(p, gcd(p, p.derivative())).monic();
}

Rat sample_point(int i) {
  // Walk the Calkin-Wilf-like grid num/den by increasing num+den, both signs.
  int k = 0;
  for (long sum = 2;; ++sum) {
    for (long n = 1; n < sum; ++n) {
      const long d = sum - n;
      if (std::gcd(n, d) != 1) continue;
      if (k == i) return Rat(mpz_class(n), mpz_class(d));
      if (k + 1 == i) return Rat(mpz_class(-n), mpz_class(d));
      k += 2;
    }
  }
}

bool identity_holds_by_sampling(const std::function<Poly(const Rat&)>& residual, int samples) {
  for (int i = 0; i < samples; ++i)
    if (!residual(sample_point(i)).is_zero()) return false;
  return true;
}

}  // namespace ellsurf
