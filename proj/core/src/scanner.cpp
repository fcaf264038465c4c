#include "ellsurf/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "ellsurf/errors.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf {

std::optional<FiberCertificate> certify_fiber(const CurveQ& C, long height) {
  if (C.is_singular()) throw SingularCurveError(C.str());
  const IntegralModel im = integral_model(C);
  std::optional<FiberCertificate> out;
  const long examined = for_each_point(im.curve, height, [&](const PointQ& Q) {
    if (Q.y().is_zero()) return true;
    const PointQ P = im.from_model(Q);
    const OrderClass oc = order_classify(C, P);
    if (!oc.infinite()) return true;
    out = FiberCertificate{P, oc, 0};
    return false;
  });
  if (out) out->candidates_examined = examined;
  return out;
}

std::vector<Rat> t_candidates(long height) {
  struct Key {
    long h, absnum;
    int neg;
    long den;
    Rat value;
  };
  std::vector<Key> keys;
  for (long den = 1; den <= height; ++den) {
    for (long num = -height; num <= height; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const long an = num < 0 ? -num : num;
      keys.push_back({std::max(an, den), an, num < 0 ? 1 : 0, den, Rat(num, den)});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    return std::tie(x.h, x.absnum, x.neg, x.den) < std::tie(y.h, y.absnum, y.neg, y.den);
  });
  std::vector<Rat> out;
  out.reserve(keys.size());
  for (auto& k : keys) out.push_back(std::move(k.value));
  return out;
}

const char* family_name(Family f) { return f == Family::Fx ? "fx" : "g6"; }

std::string ScanRecord::key() const {
  std::string k = family_name(family);
  for (const Rat& c : coefficients) k += " " + c.fraction();
  return k;
}

Poly family_poly(Family fam, const std::vector<Rat>& c) {
  if (c.size() != 3) throw PreconditionError("three coefficients");
  if (fam == Family::Fx) return Poly({c[2], 0, c[1], 0, c[0]}, "t");
  return Poly({c[2], 0, c[1], 0, c[0], 0, 1}, "t");
}

namespace {

bool member_is_split(Family fam, const Poly& p) {
  if (fam == Family::Fx) return p.is_constant() || !nonsplit_check(Surface::fx(p));
  return !nonsplit_check(Surface::g6(p));
}

CurveQ member_fiber(Family fam, const Poly& p, const Rat& t0) {
  const Rat k = p(t0);
  return fam == Family::Fx ? CurveQ(k, 0) : CurveQ(0, k);
}

}  // namespace

std::vector<std::vector<Rat>> scan_members(Family fam, long box) {
  std::vector<std::vector<Rat>> out;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long z = -box; z <= box; ++z) {
        std::vector<Rat> c{Rat(x), Rat(y), Rat(z)};
        if (member_is_split(fam, family_poly(fam, c))) continue;
        out.push_back(std::move(c));
      }
  return out;
}

std::vector<long> height_ladder(long pheight) {
  std::vector<long> out;
  for (long h = 12; h < pheight; h *= 5) out.push_back(h);
  out.push_back(pheight);
  return out;
}

ScanRecord scan_member(Family fam, const std::vector<Rat>& coeffs, const std::vector<Rat>& tcands, long pheight,
                       long theight, std::stop_token stop) {
  ScanRecord rec;
  rec.family = fam;
  rec.coefficients = coeffs;
  rec.theight = theight;
  rec.pheight = pheight;
  const Poly p = family_poly(fam, coeffs);
  // Cheap searches on every fiber before expensive ones on any.
  for (const long h : height_ladder(pheight)) {
    for (const Rat& t0 : tcands) {
      if (stop.stop_requested()) return rec;
      ++rec.t_tried;
      const CurveQ E = member_fiber(fam, p, t0);
      if (E.is_singular()) continue;
      auto cert = certify_fiber(E, h);
      if (!cert) {
        const IntegralModel im = integral_model(E);
        rec.points_examined += for_each_point(im.curve, h, [](const PointQ&) { return true; });
        continue;
      }
      rec.points_examined += cert->candidates_examined;
      rec.ok = true;
      rec.t0 = t0;
      rec.point = cert->point;
      rec.method = cert->method();
      rec.non_integral_multiple = cert->order.non_integral_multiple;
      return rec;
    }
  }
  return rec;
}

std::vector<ScanRecord> scan(Family fam, const ScanConfig& cfg, std::stop_token stop) {
  const std::set<std::string> skip(cfg.skip_keys.begin(), cfg.skip_keys.end());
  std::vector<std::vector<Rat>> members;
  for (auto& m : scan_members(fam, cfg.box)) {
    ScanRecord probe;
    probe.family = fam;
    probe.coefficients = m;
    if (!skip.count(probe.key())) members.push_back(std::move(m));
  }
  const std::vector<Rat> tc = t_candidates(cfg.theight);
  std::vector<std::optional<ScanRecord>> slots(members.size());
  std::atomic<std::size_t> next{0};
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(members.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        while (!stop.stop_requested()) {
          const std::size_t i = next.fetch_add(1);
          if (i >= members.size()) return;
          ScanRecord r = scan_member(fam, members[i], tc, cfg.pheight, cfg.theight, stop);
          if (!stop.stop_requested()) slots[i] = std::move(r);
        }
      });
    }
  }
  std::vector<ScanRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

bool replay(const ScanRecord& rec) {
  if (!rec.ok) return true;
  if (!rec.t0 || !rec.point) return false;
  const Poly p = family_poly(rec.family, rec.coefficients);
  const CurveQ E = member_fiber(rec.family, p, *rec.t0);
  if (E.is_singular() || !on_curve(E, *rec.point)) return false;
  const OrderClass oc = order_classify(E, *rec.point);
  return oc.infinite() && oc.non_integral_multiple == rec.non_integral_multiple;
}

std::string to_json_line(const ScanRecord& rec) {
  nlohmann::ordered_json j;
  j["family"] = family_name(rec.family);
  const char* names[2][3] = {{"a", "b", "d"}, {"a", "c", "e"}};
  nlohmann::ordered_json co;
  for (std::size_t i = 0; i < rec.coefficients.size() && i < 3; ++i)
    co[names[rec.family == Family::Fx ? 0 : 1][i]] = rec.coefficients[i].fraction();
  j["coefficients"] = co;
  j["status"] = rec.ok ? "ok" : "exhausted";
  if (rec.ok) {
    j["t0"] = rec.t0->fraction();
    j["point"] = {{"x", rec.point->x().fraction()}, {"y", rec.point->y().fraction()}};
    j["certificate"] = {{"method", rec.method}, {"non_integral_multiple", rec.non_integral_multiple}};
  } else {
    j["t0"] = nullptr;
    j["point"] = nullptr;
    j["certificate"] = nullptr;
  }
  j["budget"] = {{"theight", rec.theight},
                 {"pheight", rec.pheight},
                 {"t_tried", rec.t_tried},
                 {"points_examined", rec.points_examined}};
  return j.dump();
}

ScanRecord parse_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), e.byte);
  }
  try {
    ScanRecord r;
    const std::string fam = j.at("family").get<std::string>();
    if (fam != "fx" && fam != "g6") throw ParseError("unknown family " + fam, 0);
    r.family = fam == "fx" ? Family::Fx : Family::G6;
    const char* names[2][3] = {{"a", "b", "d"}, {"a", "c", "e"}};
    for (const char* n : names[r.family == Family::Fx ? 0 : 1])
      r.coefficients.push_back(Rat::parse(j.at("coefficients").at(n).get<std::string>()));
    r.ok = j.at("status").get<std::string>() == "ok";
    if (r.ok) {
      r.t0 = Rat::parse(j.at("t0").get<std::string>());
      r.point = PointQ(Rat::parse(j.at("point").at("x").get<std::string>()),
                       Rat::parse(j.at("point").at("y").get<std::string>()));
      r.method = j.at("certificate").at("method").get<std::string>();
      r.non_integral_multiple = j.at("certificate").at("non_integral_multiple").get<int>();
    }
    const auto& b = j.at("budget");
    r.theight = b.at("theight").get<long>();
    r.pheight = b.at("pheight").get<long>();
    r.t_tried = b.at("t_tried").get<long>();
    r.points_examined = b.at("points_examined").get<long>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), 0);
  }
}

std::vector<std::string> existing_keys(const std::string& path) {
  std::vector<std::string> keys;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    keys.push_back(parse_json_line(line).key());
  }
  return keys;
}

std::vector<ScanRecord> scan_to_file(Family fam, ScanConfig cfg, const std::string& path, std::stop_token stop) {
  const auto keys = existing_keys(path);
  cfg.skip_keys.insert(cfg.skip_keys.end(), keys.begin(), keys.end());
  std::vector<ScanRecord> recs = scan(fam, cfg, stop);
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open " + path + " for writing");
  for (const auto& r : recs) out << to_json_line(r) << '\n';
  return recs;
}

}  // namespace ellsurf
