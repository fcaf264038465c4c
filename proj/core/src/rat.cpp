#include "ellsurf/rat.hpp"

#include <cctype>

#include "ellsurf/errors.hpp"

namespace ellsurf {

Rat::Rat(const mpz_class& num) : q_(num) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view n = body.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(n)) throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  if (!all_digits(d)) throw ParseError("invalid rational '" + std::string(text) + "'", slash + 1);
  mpz_class num(std::string(n), 10);
  mpz_class den(std::string(d), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  if (negative) num = -num;
  return Rat(num, den);
}

mpz_class Rat::height() const {
  mpz_class n = ::abs(q_.get_num());
  return n > q_.get_den() ? n : mpz_class(q_.get_den());
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
  mpq_class r;
  r.get_num() = n;
  r.get_den() = d;  // already coprime
  return Rat(std::move(r));
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::fraction() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("exact_root: k must be positive");
  if (k == 1) return n;
  if (n < 0 && k % 2 == 0) return std::nullopt;
  mpz_class a = ::abs(n), r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (n < 0) r = -r;
  return r;
}

std::optional<Rat> kth_power_test(const Rat& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("kth_power_test: k must be positive");
  auto n = exact_root(x.num(), k);
  if (!n) return std::nullopt;
  auto d = exact_root(x.den(), k);
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace ellsurf
