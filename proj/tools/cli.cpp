#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>

#include "ellsurf/constructions.hpp"
#include "ellsurf/curve.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/identities.hpp"
#include "ellsurf/polyparse.hpp"
#include "ellsurf/scanner.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf::cli {

namespace {

using json = nlohmann::ordered_json;

// A result that failed its own re-verification: always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct Out {
  std::ostream& os;
  bool structured;
  void emit(const json& j) const { os << j.dump() << '\n'; }
};

Poly need_poly(const std::string& flag, const std::optional<std::string>& text, const std::string& var = "t") {
  if (!text) throw PreconditionError(flag + " given", "this command needs " + flag);
  return parse_poly(*text, var);
}

Rat need_rat(const std::string& flag, const std::optional<std::string>& text) {
  if (!text) throw PreconditionError(flag + " given", "this command needs " + flag);
  return Rat::parse(*text);
}

std::string point_str(const PointQ& P) { return P.str(); }

json point_json(const PointQ& P) {
  if (P.is_infinity()) return "O";
  return json{{"x", P.x().fraction()}, {"y", P.y().fraction()}};
}

std::string param_str(const Param& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rat>)
          return v.str();
        else
          return render_ratfn(v);
      },
      p);
}

json param_json(const Param& p) {
  return std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rat>)
          return v.fraction();
        else
          return render_ratfn(v);
      },
      p);
}

std::string order_str(const OrderClass& oc) {
  if (!oc.infinite()) return "order " + std::to_string(oc.order);
  if (oc.non_integral_multiple > 0)
    return "infinite order (" + std::to_string(oc.non_integral_multiple) + "P non-integral)";
  return "infinite order (no multiple up to 12 vanishes)";
}

json order_json(const OrderClass& oc) {
  if (!oc.infinite()) return json{{"order", oc.order}};
  return json{{"order", "infinite"}, {"non_integral_multiple", oc.non_integral_multiple}};
}

std::string certificate_str(const Certificate& c) {
  std::string s = method_name(c.method);
  if (c.method == CertMethod::SpecializationMazur) {
    s += ": s = " + c.s0->str() + ", t = " + c.t0->str() + ", point " + c.point->str() + " of " +
         order_str(c.order) + " on " + c.fiber->str();
  } else if (c.method == CertMethod::IntegralityZt) {
    s += ": X of " + std::to_string(c.multiple) + "P is not a polynomial on the integral model";
  }
  return s;
}

json certificate_json(const Certificate& c) {
  json j{{"method", method_name(c.method)}};
  if (c.method == CertMethod::SpecializationMazur) {
    j["s0"] = c.s0->fraction();
    j["t0"] = c.t0->fraction();
    j["fiber"] = {{"A", c.fiber->A().fraction()}, {"B", c.fiber->B().fraction()}};
    j["point"] = point_json(*c.point);
    j["order"] = order_json(c.order);
  } else if (c.method == CertMethod::IntegralityZt) {
    j["multiple"] = c.multiple;
  }
  j["attempts"] = c.attempts;
  return j;
}

void reverify(const ConstructionResult& r) {
  if (!verify_section(r.surface, r.section))
    throw VerificationFailure("re-verification failed: section is not on the surface");
  if (!replay(r.surface, r.section, r.certificate))
    throw VerificationFailure("re-verification failed: certificate does not replay");
}

void print_construction(const Out& o, const ConstructionResult& r) {
  const Section& s = r.section;
  if (o.structured) {
    json params = json::object();
    for (const auto& [name, v] : r.parameters) params[name] = param_json(v);
    o.emit(json{{"theorem", r.tag},
                {"surface", {{"A", render_poly(r.surface.A())}, {"B", render_poly(r.surface.B())}}},
                {"parameter", s.parameter},
                {"base_change", render_ratfn(s.phi)},
                {"X", render_ratfn(s.X)},
                {"Y", render_ratfn(s.Y)},
                {"parameters", params},
                {"certificate", certificate_json(r.certificate)},
                {"verified", true}});
    return;
  }
  o.os << "[" << r.tag << "] " << r.surface.str() << "\n";
  o.os << "base change: t = " << render_ratfn(s.phi) << "\n";
  o.os << "X(" << s.parameter << ") = " << render_ratfn(s.X) << "\n";
  o.os << "Y(" << s.parameter << ") = " << render_ratfn(s.Y) << "\n";
  for (const auto& [name, v] : r.parameters) o.os << "  " << name << " = " << param_str(v) << "\n";
  o.os << "certificate: " << certificate_str(r.certificate) << "\n";
  o.os << "re-verified: section lies on the surface, certificate replays\n";
}

struct SurfaceArgs {
  std::optional<std::string> f, g, A, B;
};

int cmd_surface_info(const Out& o, const SurfaceArgs& a) {
  const int given = (a.f ? 1 : 0) + (a.g ? 1 : 0) + ((a.A || a.B) ? 1 : 0);
  if (given != 1) throw PreconditionError("exactly one of --f, --g, --A/--B");
  std::optional<Surface> S;
  if (a.f)
    S = Surface::fx(parse_poly(*a.f));
  else if (a.g)
    S = Surface::g6(parse_poly(*a.g));
  else
    S = Surface::general(a.A ? parse_poly(*a.A) : Poly("t"), a.B ? parse_poly(*a.B) : Poly("t"));
  const Poly disc = discriminant(*S);
  const bool iso = is_isotrivial(*S);
  const bool nonsplit = nonsplit_check(*S);
  const bool heuristic = nonsplit_is_heuristic(*S);
  std::string j;
  try {
    j = render_ratfn(j_invariant(*S));
  } catch (const Error&) {
    j = "undefined";
  }
  if (o.structured) {
    o.emit(json{{"kind", kind_name(S->kind())},
                {"A", render_poly(S->A())},
                {"B", render_poly(S->B())},
                {"discriminant", render_poly(disc)},
                {"j", j},
                {"isotrivial", iso},
                {"nonsplit", nonsplit},
                {"nonsplit_heuristic", heuristic}});
    return kOk;
  }
  o.os << "[" << kind_name(S->kind()) << "] " << S->str() << "\n";
  o.os << "discriminant: " << render_poly(disc) << "\n";
  o.os << "j: " << j << "\n";
  o.os << "isotrivial: " << (iso ? "yes" : "no") << "\n";
  o.os << "nonsplit: " << (nonsplit ? "yes" : "no") << (heuristic ? " (heuristic for general A, B)" : "") << "\n";
  return kOk;
}

struct ConstructArgs {
  std::string theorem;
  std::optional<std::string> f, g, h, r, t0, x0, y0, e;
};

int cmd_cor4(const Out& o, const Poly& f) {
  const QuarticTransport tr = cor4_transport(f);
  reverify(tr.source);
  if (!cor4_residual(f, tr).is_zero()) throw VerificationFailure("re-verification failed: v^2 - u^4 - f(w) != 0");
  const std::string& v = tr.source.section.parameter;
  if (o.structured) {
    o.emit(json{{"theorem", "cor4"},
                {"f", render_poly(f)},
                {"parameter", v},
                {"u", render_ratfn(tr.u)},
                {"v", render_ratfn(tr.v)},
                {"w", render_ratfn(tr.w)},
                {"verified", true}});
    return kOk;
  }
  o.os << "[cor4] v^2 = u^4 + f(w), f = " << render_poly(f) << "\n";
  o.os << "parameter: " << v << "\n";
  o.os << "u = " << render_ratfn(tr.u) << "\n";
  o.os << "v = " << render_ratfn(tr.v) << "\n";
  o.os << "w = " << render_ratfn(tr.w) << "\n";
  o.os << "re-verified: v^2 - u^4 - f(w) = 0\n";
  return kOk;
}

int cmd_construct(const Out& o, const ConstructArgs& a) {
  const std::string& th = a.theorem;
  std::optional<ConstructionResult> r;
  if (th == "thm1-3") {
    r = thm1_deg3(need_poly("--f", a.f), a.r ? Rat::parse(*a.r) : Rat(1));
  } else if (th == "thm1-4") {
    r = thm1_deg4_from_point(need_poly("--f", a.f), need_rat("--t0", a.t0), need_rat("--x0", a.x0),
                             need_rat("--y0", a.y0));
  } else if (th == "thm2") {
    r = thm2_quartic(need_poly("--f", a.f));
  } else if (th == "thm5") {
    r = thm5_sextic(need_poly("--g", a.g));
  } else if (th == "thm16-3") {
    r = thm16_cubic(need_poly("--f", a.f), need_poly("--g", a.g), a.r ? Rat::parse(*a.r) : Rat(1));
  } else if (th == "thm16-4") {
    r = thm16_quartic(need_poly("--f", a.f), need_poly("--g", a.g));
  } else if (th == "cor8") {
    r = cor8_deg5(need_poly("--h", a.h));
  } else if (th == "cor13") {
    r = cor13_section(need_rat("--e", a.e));
  } else if (th == "rem7") {
    r = rem7_curve(need_poly("--g", a.g), need_rat("--t0", a.t0));
  } else if (th == "cor4") {
    return cmd_cor4(o, need_poly("--f", a.f));
  } else {
    throw PreconditionError("known theorem", th);
  }
  reverify(*r);
  print_construction(o, *r);
  return kOk;
}

struct ChainArgs {
  std::optional<std::string> g, t0, x0, y0;
  int steps = 1;
  std::string route = "auto";
};

int cmd_fiber_chain(const Out& o, const ChainArgs& a) {
  const Poly g = need_poly("--g", a.g);
  const Rat t0 = need_rat("--t0", a.t0);
  const PointQ P0(need_rat("--x0", a.x0), need_rat("--y0", a.y0));
  if (g.degree() != 6 || !g.leading().is_one()) throw PreconditionError("g monic of degree 6");
  if (!on_curve(CurveQ(0, g(t0)), P0)) throw PreconditionError("P0 on y^2 = x^3 + g(t0)");
  const Thm6Route route =
      a.route == "triple" ? Thm6Route::TripleRoot : (a.route == "r5" ? Thm6Route::R5 : Thm6Route::Auto);
  const std::vector<ChainLink> links = thm6_chain(g, t0, P0, a.steps, route);
  for (const ChainLink& l : links) {
    const CurveQ E(0, g(l.t));
    if (E.is_singular() || !on_curve(E, l.P) || !order_classify(E, l.P).infinite())
      throw VerificationFailure("re-verification failed at t = " + l.t.str());
  }
  if (o.structured) {
    json arr = json::array();
    for (const ChainLink& l : links)
      arr.push_back(json{{"t", l.t.fraction()},
                         {"P", point_json(l.P)},
                         {"p", l.p.fraction()},
                         {"q", l.q.fraction()},
                         {"T", l.T.fraction()},
                         {"multiple", l.multiple},
                         {"g_t", g(l.t).fraction()}});
    o.emit(json{{"theorem", "thm6"},
                {"g", render_poly(g)},
                {"t0", t0.fraction()},
                {"P0", point_json(P0)},
                {"links", arr},
                {"verified", true}});
    return kOk;
  }
  o.os << "[thm6] y^2 = x^3 + g(t), g = " << render_poly(g) << "\n";
  o.os << "t0 = " << t0 << ", P0 = " << point_str(P0) << "\n";
  int i = 1;
  for (const ChainLink& l : links) {
    o.os << "step " << i << ": from " << l.multiple << "P, p = " << l.p << ", q = " << l.q << ", T = " << l.T << "\n";
    o.os << "  t" << i << " = " << l.t << "\n";
    o.os << "  P" << i << " = " << point_str(l.P) << "\n";
    o.os << "  g(t" << i << ") = " << g(l.t) << "\n";
    ++i;
  }
  o.os << "re-verified: every point lies on its fiber and has infinite order\n";
  return kOk;
}

struct SolveArgs {
  std::optional<std::string> g, h;
};

int cmd_solve(const Out& o, const SolveArgs& a) {
  // g may be written in z or in t.
  const bool in_t = a.g && a.g->find('z') == std::string::npos;
  const Poly g = need_poly("--g", a.g, in_t ? "t" : "z").with_var("z");
  const Poly gt = g.with_var("t");
  std::optional<Poly> h;
  if (a.h) h = parse_poly(*a.h);
  const Thm10Solution sol = h ? cor12_represent(gt, *h) : thm10_solve(gt);
  const Poly target = h ? *h : Poly::identity("t");
  if (!(triple_residual(gt, sol.triple.x, sol.triple.y, sol.triple.z) == target))
    throw VerificationFailure("re-verification failed: x^2 - y^3 - g(z) differs from the target");
  const char* tag = h ? "cor12" : "thm10";
  if (o.structured) {
    o.emit(json{{"theorem", tag},
                {"g", render_poly(g)},
                {"target", render_poly(target)},
                {"x", render_poly(sol.triple.x)},
                {"y", render_poly(sol.triple.y)},
                {"z", render_poly(sol.triple.z)},
                {"source", source_name(sol.source)},
                {"s", sol.ansatz.s.fraction()},
                {"v", sol.ansatz.v.fraction()},
                {"verified", true}});
    return kOk;
  }
  o.os << "[" << tag << "] x^2 - y^3 - g(z) = " << render_poly(target) << ", g(z) = " << render_poly(g) << "\n";
  o.os << "x = " << render_poly(sol.triple.x) << "\n";
  o.os << "y = " << render_poly(sol.triple.y) << "\n";
  o.os << "z = " << render_poly(sol.triple.z) << "\n";
  o.os << "point (s, v) = (" << sol.ansatz.s << ", " << sol.ansatz.v << ") from " << source_name(sol.source) << "\n";
  o.os << "re-verified: residual equals the target exactly\n";
  return kOk;
}

struct IdentityArgs {
  long n = 0;
  long t = 1;
  std::string which_case = "1";
};

int report(const Out& o, const std::string& name, bool ok, const std::string& detail, json extra = json::object()) {
  if (o.structured) {
    json j{{"identity", name}, {"ok", ok}, {"detail", detail}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    o.emit(j);
  } else {
    o.os << (ok ? "OK: " : "FAIL: ") << detail << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_identity(const Out& o, const std::string& which, const IdentityArgs& a) {
  if (which == "r10") return report(o, "r10", verify_r10(64), "R10 holds for 64 values of s");
  if (which == "r11") return report(o, "r11", verify_r11(64), "R11 holds for 64 values of s");
  if (which == "rem11") {
    const Poly r = rem11_residual();
    const bool ok = r.is_constant() && r.coeff(0) == Rat(-375);
    return report(o, "rem11", ok, "residual = " + render_poly(r), json{{"residual", render_poly(r)}});
  }
  if (which == "cor14") {
    const RatTriple tr = cor14_triple(a.n);
    const Rat lhs = tr.x * tr.x - tr.y.pow(3) - tr.z.pow(6);
    const bool ok = lhs == Rat(a.n);
    const std::string d = "x^2 - y^3 - z^6 = " + lhs.str() + " with x = " + tr.x.str() + ", y = " + tr.y.str() +
                          ", z = " + tr.z.str();
    return report(o, "cor14", ok, d,
                  json{{"n", a.n}, {"x", tr.x.fraction()}, {"y", tr.y.fraction()}, {"z", tr.z.fraction()}});
  }
  if (which == "cor15") {
    Cor15Case c;
    if (a.which_case == "1" || a.which_case == "first")
      c = Cor15Case::First;
    else if (a.which_case == "2" || a.which_case == "second")
      c = Cor15Case::Second;
    else
      throw PreconditionError("--case is 1 or 2", a.which_case);
    const IntTriple tr = cor15_triple(c, a.n, a.t);
    const mpz_class z3 = tr.z * tr.z * tr.z;
    const mpz_class lhs = tr.x * tr.x - tr.y * tr.y * tr.y - z3 * z3 - tr.d * tr.z;
    const bool ok = lhs == a.n;
    const std::string d = "x^2 - y^3 - z^6 - d*z = " + lhs.get_str() + " with d = " + tr.d.get_str() +
                          ", x = " + tr.x.get_str() + ", y = " + tr.y.get_str() + ", z = " + tr.z.get_str();
    return report(o, "cor15", ok, d,
                  json{{"n", a.n},
                       {"t", a.t},
                       {"d", tr.d.get_str()},
                       {"x", tr.x.get_str()},
                       {"y", tr.y.get_str()},
                       {"z", tr.z.get_str()}});
  }
  throw PreconditionError("known identity", which);
}

struct ScanArgs {
  std::string family;
  long box = 2;
  long theight = 6;
  long pheight = 300;
  unsigned threads = 0;
  std::optional<std::string> out;
};

int cmd_scan(const Out& o, const ScanArgs& a, std::stop_token stop) {
  const Family fam = a.family == "fx" ? Family::Fx : Family::G6;
  if (a.box < 0) throw PreconditionError("--box >= 0");
  if (a.theight < 1 || a.pheight < 1) throw PreconditionError("--theight >= 1 and --pheight >= 1");
  ScanConfig cfg;
  cfg.box = a.box;
  cfg.theight = a.theight;
  cfg.pheight = a.pheight;
  cfg.threads = a.threads;
  const std::vector<ScanRecord> recs = a.out ? scan_to_file(fam, cfg, *a.out, stop) : scan(fam, cfg, stop);
  long ok = 0, exhausted = 0;
  for (const ScanRecord& r : recs) {
    if (!replay(r)) throw VerificationFailure("re-verification failed for " + r.key());
    (r.ok ? ok : exhausted)++;
    if (a.out) continue;
    if (o.structured) {
      o.os << to_json_line(r) << '\n';
    } else if (r.ok) {
      o.os << r.key() << ": t0 = " << *r.t0 << ", P = " << r.point->str() << " (" << r.method << ")\n";
    } else {
      o.os << r.key() << ": exhausted after " << r.t_tried << " fibers\n";
    }
  }
  if (o.structured) {
    o.emit(json{{"family", family_name(fam)}, {"ok", ok}, {"exhausted", exhausted}, {"interrupted", stop.stop_requested()}});
  } else {
    o.os << "[scan " << family_name(fam) << "] " << ok << " certified, " << exhausted << " exhausted";
    if (a.out) o.os << ", records appended to " << *a.out;
    o.os << "\n";
  }
  if (stop.stop_requested()) return kBudgetExhausted;
  return exhausted > 0 ? kBudgetExhausted : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop) {
  CLI::App app{"Sections of elliptic surfaces over Q, diophantine identities, and fiber scans."};
  app.name("ellsurf");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

  SurfaceArgs sa;
  auto* surface = app.add_subcommand("surface", "Surface invariants");
  surface->require_subcommand(1);
  auto* info = surface->add_subcommand("info", "Discriminant, j-invariant, isotriviality, nonsplit check");
  info->add_option("--f", sa.f, "f(t) for y^2 = x^3 + f(t) x");
  info->add_option("--g", sa.g, "monic sextic g(t) for y^2 = x^3 + g(t)");
  info->add_option("--A", sa.A, "A(t) for y^2 = x^3 + A(t) x + B(t)");
  info->add_option("--B", sa.B, "B(t)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a section and its non-torsion certificate");
  construct
      ->add_option("--theorem", ca.theorem, "Construction")
      ->required()
      ->check(CLI::IsMember({"thm1-3", "thm1-4", "thm2", "thm5", "thm16-3", "thm16-4", "cor8", "cor13", "rem7", "cor4"}));
  construct->add_option("--f", ca.f, "f(t), or f4(t) for thm16-*");
  construct->add_option("--g", ca.g, "g(t), or g4(t) for thm16-*");
  // "--h" is a polynomial here, so help is long-form only.
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("--h", ca.h, "quintic h(t) with h(0) = 1 (cor8)");
  construct->add_option("--r", ca.r, "free rational r (thm1-3, thm16-3), default 1");
  construct->add_option("--t0", ca.t0, "base point t0 (thm1-4, rem7)");
  construct->add_option("--x0", ca.x0, "x of the fiber point (thm1-4)");
  construct->add_option("--y0", ca.y0, "y of the fiber point (thm1-4)");
  construct->add_option("--e", ca.e, "constant e of t^6 + e (cor13)");

  ChainArgs ch;
  auto* chain = app.add_subcommand("fiber-chain", "Move a point of infinite order from fiber to fiber");
  chain->add_option("--g", ch.g, "g(t) = t^6 + a t^4 + c t^2 + e")->required();
  chain->add_option("--t0", ch.t0, "starting fiber")->required();
  chain->add_option("--x0", ch.x0, "x of P0")->required();
  chain->add_option("--y0", ch.y0, "y of P0")->required();
  chain->add_option("--steps", ch.steps, "number of new fibers")->check(CLI::Range(1, 64));
  chain->add_option("--route", ch.route, "candidate order")->check(CLI::IsMember({"auto", "triple", "r5"}));

  SolveArgs so;
  auto* solve = app.add_subcommand("solve-xyz", "Polynomials with x^2 - y^3 - g(z) = t (or = h(t))");
  solve->add_option("--g", so.g, "monic sextic g(z) (or written in t)")->required();
  solve->set_help_flag("--help", "Print this help message and exit");
  solve->add_option("--h", so.h, "right-hand side h(t)");

  IdentityArgs ia;
  std::string identity_name;
  auto* identity = app.add_subcommand("identity", "Check a closed-form identity");
  identity->require_subcommand(1);
  for (const char* name : {"r10", "r11", "rem11"}) identity->add_subcommand(name, std::string("check ") + name);
  auto* cor14 = identity->add_subcommand("cor14", "x^2 - y^3 - z^6 = n");
  cor14->add_option("--n", ia.n, "n")->required();
  auto* cor15 = identity->add_subcommand("cor15", "integer families of x^2 - y^3 - z^6 - d z = n");
  cor15->add_option("--case", ia.which_case, "1 or 2")->required();
  cor15->add_option("--n", ia.n, "n")->required();
  cor15->add_option("--t", ia.t, "integer parameter t")->required();

  ScanArgs sc;
  auto* scan_cmd = app.add_subcommand("scan", "Search fibers of a coefficient box for points of infinite order");
  scan_cmd->add_option("family", sc.family, "fx: a t^4 + b t^2 + d;  g6: t^6 + a t^4 + c t^2 + e")
      ->required()
      ->check(CLI::IsMember({"fx", "g6"}));
  scan_cmd->add_option("--box", sc.box, "coefficient bound")->capture_default_str();
  scan_cmd->add_option("--theight", sc.theight, "height bound for t0 = m/n: max(|m|, n)")->capture_default_str();
  scan_cmd->add_option("--pheight", sc.pheight,
                       "point search height on the integral model: x = m/d^2 with |m| <= H d^2 and d <= ceil(sqrt H)")
      ->capture_default_str();
  scan_cmd->add_option("--threads", sc.threads, "worker threads, 0 = all cores");
  scan_cmd->add_option("--out", sc.out, "append JSON-lines records here; existing records are skipped");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kPrecondition;
  }

  const Out o{out, format == "json"};
  try {
    if (info->parsed()) return cmd_surface_info(o, sa);
    if (construct->parsed()) return cmd_construct(o, ca);
    if (chain->parsed()) return cmd_fiber_chain(o, ch);
    if (solve->parsed()) return cmd_solve(o, so);
    if (scan_cmd->parsed()) return cmd_scan(o, sc, stop);
    if (identity->parsed()) {
      for (auto* sub : identity->get_subcommands()) return cmd_identity(o, sub->get_name(), ia);
    }
    err << "error: no command\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kPrecondition;
  } catch (const VerificationFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace ellsurf::cli
