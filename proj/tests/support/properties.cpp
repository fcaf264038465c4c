#include "properties.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "ellsurf/constructions.hpp"
#include "ellsurf/errors.hpp"
#include "oracle.hpp"

namespace oracle {

using namespace ellsurf;

namespace {

using Builder = std::function<std::optional<ConstructionResult>(Gen&)>;

bool two_distinct_roots(const Poly& p) { return squarefree_part(p).degree() >= 2; }

// f = a t^3 + b t^2 + c t + d with a or b nonzero and at least two distinct roots.
std::optional<ConstructionResult> build_thm1_deg3(Gen& g) {
  Poly f;
  do {
    f = ints({g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20)});
  } while (f.degree() < 2 || !two_distinct_roots(f));
  return thm1_deg3(f);
}

// Depressed quartic a t^4 + b t^2 + c t + d with a point on the fiber over
// t0: choose a, b, c, t0, x0, y0, then d so that f(t0) = (y0^2 - x0^3)/x0.
std::optional<ConstructionResult> build_thm1_deg4(Gen& g) {
  for (;;) {
    const Rat a = g.nonzero(-20, 20), b = g.integer(-20, 20), c = g.integer(-20, 20);
    const Rat t0 = g.integer(-3, 3), x0 = g.nonzero(-20, 20), y0 = g.integer(-20, 20);
    if (Rat(2) * x0 * x0 * x0 == y0 * y0) continue;
    const Rat k = (y0 * y0 - x0 * x0 * x0) / x0;
    const Rat d = k - (a * t0.pow(4) + b * t0 * t0 + c * t0);
    const Poly f({d, c, b, 0, a});
    if (!two_distinct_roots(f)) continue;
    return thm1_deg4_from_point(f, t0, x0, y0);
  }
}

// Quartic with a c != 0 after removing the cubic term.
std::optional<ConstructionResult> build_thm2(Gen& g) {
  for (;;) {
    const Poly f = g.poly(4, -20, 20);
    const Poly fd = f.shift(-f.coeff(3) / (Rat(4) * f.coeff(4)));
    if (fd.coeff(1).is_zero() || !two_distinct_roots(f)) continue;
    return thm2_quartic(f);
  }
}

// Monic sextic with b or d nonzero after removing the t^5 term.
std::optional<ConstructionResult> build_thm5(Gen& g) {
  for (;;) {
    std::vector<Rat> c;
    for (int i = 0; i < 6; ++i) c.emplace_back(g.integer(-20, 20));
    c.emplace_back(1);
    const Poly p(c);
    const Poly pd = p.shift(-p.coeff(5) / Rat(6));
    if (pd.coeff(3).is_zero() && pd.coeff(1).is_zero()) continue;
    if (!two_distinct_roots(p)) continue;
    return thm5_sextic(p);
  }
}

// f4 = a t^3 + b t + c, a != 0; g4 nonzero of degree <= 4.
std::optional<ConstructionResult> build_thm16_cubic(Gen& g) {
  const Poly f4 = ints({g.integer(-20, 20), g.integer(-20, 20), 0, g.nonzero(-20, 20)});
  Poly g4;
  do {
    g4 = ints({g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20)});
  } while (g4.is_zero());
  return thm16_cubic(f4, g4);
}

// f4 = a t^4 + b t^2 + c t + d, g4 = e t^4 + f t^3 + g t^2 + h t + i with
// one of c, f, h nonzero.
std::optional<ConstructionResult> build_thm16_quartic(Gen& g) {
  for (;;) {
    const Poly f4 = ints({g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), 0, g.nonzero(-20, 20)});
    const Poly g4 = ints({g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20)});
    if (f4.coeff(1).is_zero() && g4.coeff(3).is_zero() && g4.coeff(1).is_zero()) continue;
    return thm16_quartic(f4, g4);
  }
}

// Even sextic t^6 + a t^4 + c t^2 + e with a rational root t0: e is chosen
// to make g(t0) = 0.
std::optional<ConstructionResult> build_rem7(Gen& g) {
  for (;;) {
    const Rat a = g.integer(-20, 20), c = g.integer(-20, 20);
    if (a.is_zero() && c.is_zero()) continue;
    const Rat t0 = g.integer(-3, 3);
    const Rat e = -(t0.pow(6) + a * t0.pow(4) + c * t0 * t0);
    const Poly p({e, 0, c, 0, a, 0, 1});
    if (!two_distinct_roots(p)) continue;
    return rem7_curve(p, t0);
  }
}

// h of degree 5 with h(0) = 1.
std::optional<ConstructionResult> build_cor8(Gen& g) {
  return cor8_deg5(ints({1, g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20), g.integer(-20, 20),
                         g.nonzero(-20, 20)}));
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> m = {
      {"thm1_deg3", build_thm1_deg3},           {"thm1_deg4_from_point", build_thm1_deg4},
      {"thm2_quartic", build_thm2},             {"thm5_sextic", build_thm5},
      {"thm16_cubic", build_thm16_cubic},       {"thm16_quartic", build_thm16_quartic},
      {"rem7_curve", build_rem7},               {"cor8_deg5", build_cor8},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm1_deg3",   "thm1_deg4_from_point", "thm2_quartic", "thm5_sextic",
                                                 "thm16_cubic", "thm16_quartic",        "rem7_curve",   "cor8_deg5"};
  return names;
}

SuiteResult run_suite(const std::string& name, int count, std::uint64_t seed) {
  const Builder& build = builders().at(name);
  SuiteResult res;
  res.name = name;
  Gen gen(seed);
  const auto start = std::chrono::steady_clock::now();
  const int max_attempts = 20 * count;
  for (int attempt = 0; res.passed + res.failed < count && attempt < max_attempts; ++attempt) {
    auto fail = [&](const std::string& why) {
      ++res.failed;
      if (res.first_failure.empty()) res.first_failure = why;
    };
    try {
      const std::optional<ConstructionResult> r = build(gen);
      if (!r) continue;
      const Surface& S = r->surface;
      if (!verify_section(S, r->section)) {
        fail("verify_section false on " + S.str());
      } else if (!section_holds_at_samples(S.A(), S.B(), r->section)) {
        fail("sampled evaluation disagrees on " + S.str());
      } else if (!replay(S, r->section, r->certificate)) {
        fail("certificate replay failed on " + S.str());
      } else {
        ++res.passed;
      }
    } catch (const PreconditionError&) {
      ++res.rejected;
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }
  if (res.passed + res.failed < count && res.first_failure.empty())
    res.first_failure = "only " + std::to_string(res.passed) + " instances accepted";
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace oracle
