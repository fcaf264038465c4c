#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellsurf/rat.hpp"

namespace ellsurf {

/// Dense univariate polynomial over Q. Coefficient i multiplies var^i; the
/// zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::string var) : var_(std::move(var)) {}
  Poly(std::vector<Rat> coeffs, std::string var = "t");

  static Poly constant(const Rat& c, std::string var = "t");
  static Poly monomial(const Rat& c, int degree, std::string var = "t");
  /// The polynomial `var` itself.
  static Poly identity(std::string var = "t");

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_even() const;

  /// Coefficient of var^i, zero outside the stored range.
  const Rat& coeff(int i) const;
  const Rat& leading() const;
  std::span<const Rat> coefficients() const noexcept { return coeffs_; }
  const std::string& var() const noexcept { return var_; }
  Poly with_var(std::string var) const;

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(var + k)
  Poly shift(const Rat& k) const;
  /// p(q(var)), in q's variable.
  Poly compose(const Poly& q) const;
  Poly pow(unsigned k) const;
  /// var^deg * p(1/var)
  Poly reversed(int deg) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient a / b; throws std::domain_error if the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  void trim();
  static const std::string& merge_var(const Poly& a, const Poly& b);

  std::vector<Rat> coeffs_;
  std::string var_ = "t";
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), monic. Its degree counts the distinct complex roots of p.
Poly squarefree_part(const Poly& p);

/// Multiplies out to the lcm of the coefficient denominators and removes the
/// content: the primitive integer polynomial with positive leading coefficient.
std::vector<mpz_class> primitive_integer_coefficients(const Poly& p);

/// poly_eval
inline Rat poly_eval(const Poly& p, const Rat& x) { return p(x); }

/// Checks a polynomial identity with a second free parameter by exact
/// evaluation: `residual(s_i)` must be the zero polynomial for `samples`
/// distinct rationals s_i. Sound whenever `samples` exceeds the degree of
/// every coefficient of the residual in s.
bool identity_holds_by_sampling(const std::function<Poly(const Rat&)>& residual, int samples = 64);

/// The i-th sample point used by identity_holds_by_sampling: 1, -1, 2, -2, 1/2, ...
/// (pairwise distinct, deterministic).
Rat sample_point(int i);

}  // namespace ellsurf
