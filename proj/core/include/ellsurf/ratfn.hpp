#pragma once

#include <optional>
#include <string>

#include "ellsurf/poly.hpp"

namespace ellsurf {

/// Element of Q(var) in canonical form: coprime numerator and denominator,
/// denominator monic. Equality is structural.
class RatFn {
 public:
  RatFn() : den_(Poly::constant(1)) {}
  RatFn(Poly p);                    // NOLINT(google-explicit-constructor)
  RatFn(const Rat& c, std::string var = "t");
  RatFn(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const std::string& var() const noexcept { return num_.is_constant() ? den_.var() : num_.var(); }
  RatFn with_var(const std::string& var) const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// max(deg num, deg den)
  int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

  /// Value at x, or nullopt at a pole.
  std::optional<Rat> eval(const Rat& x) const;
  /// Value at x; throws std::domain_error at a pole.
  Rat operator()(const Rat& x) const;

  RatFn inverse() const;
  RatFn pow(int k) const;

  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  RatFn operator-() const;

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend RatFn compose(const Poly& p, const RatFn& r);

 private:
  struct Canonical {};
  RatFn(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// p(r), reduced.
RatFn compose(const Poly& p, const RatFn& r);
/// f(r), reduced.
RatFn compose(const RatFn& f, const RatFn& r);

inline RatFn poly_compose_ratfn(const Poly& p, const RatFn& r) { return compose(p, r); }

}  // namespace ellsurf
