#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ellsurf {

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num);               // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  /// Parses "n" or "n/d" (optional leading '-'); throws ParseError.
  static Rat parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// max(|num|, den)
  mpz_class height() const;

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat inverse() const;
  Rat pow(long k) const;

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;
  /// Always "n/d"; the form used at every structured text boundary.
  std::string fraction() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Returns r with r^k = x when such a rational exists (the non-negative
/// root for even k), otherwise nullopt.
std::optional<Rat> kth_power_test(const Rat& x, unsigned k);

/// Exact integer k-th root of n when n is a perfect k-th power.
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k);

}  // namespace ellsurf
