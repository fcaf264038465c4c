#pragma once

// Test-side oracles. These recompute results by routes that do not go
// through the library's own algorithms: plain mpq arithmetic, evaluation at
// sample points, brute-force loops.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ellsurf/poly.hpp"
#include "ellsurf/ratfn.hpp"
#include "ellsurf/surface.hpp"

namespace oracle {

using Q = mpq_class;

Q to_q(const ellsurf::Rat& r);
ellsurf::Rat from_q(const Q& q);

Q horner(std::span<const ellsurf::Rat> coeffs, const Q& x);
/// nullopt at a pole.
std::optional<Q> eval(const ellsurf::RatFn& r, const Q& x);

/// Coefficient-list product, written out as a convolution.
std::vector<Q> convolve(const std::vector<Q>& a, const std::vector<Q>& b);

struct Pt {
  bool inf = true;
  Q x, y;
  static Pt at(Q x, Q y) { return Pt{false, std::move(x), std::move(y)}; }
};
bool operator==(const Pt& a, const Pt& b);

/// Chord and tangent on y^2 = x^3 + A x + B, in mpq.
Pt ec_add(const Q& A, const Q& B, const Pt& P, const Pt& R);
Pt ec_mul(const Q& A, const Q& B, long n, const Pt& P);
bool ec_on(const Q& A, const Q& B, const Pt& P);
/// Smallest n in 1..12 with nP = O, or 0.
int small_order(const Q& A, const Q& B, const Pt& P);

/// Y^2 = X^3 + A(phi) X + B(phi) at `samples` values of the parameter away
/// from poles. Returns false on the first mismatch.
bool section_holds_at_samples(const ellsurf::Poly& A, const ellsurf::Poly& B, const ellsurf::Section& s,
                              int samples = 12);

/// Polynomial from integer coefficients, constant term first.
ellsurf::Poly ints(std::initializer_list<long> c, const std::string& var = "t");

/// Deterministic instance generator.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  long nonzero(long lo, long hi) {
    for (;;)
      if (long v = integer(lo, hi); v != 0) return v;
  }
  ellsurf::Rat rat(long h) {
    const long d = integer(1, h);
    return ellsurf::Rat(integer(-h, h), d);
  }
  ellsurf::Poly poly(int degree, long lo, long hi, const std::string& var = "t");

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
