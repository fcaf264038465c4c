#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "ellsurf/curve.hpp"
#include "ellsurf/poly.hpp"

namespace ellsurf {

/// A fiber point of infinite order with its order evidence.
struct FiberCertificate {
  PointQ point;
  OrderClass order;
  long candidates_examined = 0;
  /// "NagellLutz" when a multiple is non-integral on the integral model,
  /// "MazurBound" otherwise.
  std::string method() const { return order.non_integral_multiple > 0 ? "NagellLutz" : "MazurBound"; }
};

/// First point (in naive search order on the integral model, mapped back to
/// C) of infinite order, or nullopt. Throws SingularCurveError.
std::optional<FiberCertificate> certify_fiber(const CurveQ& C, long height);

/// All rationals of height <= h, ordered by height, then |numerator|, then
/// sign (positive first), then denominator.
std::vector<Rat> t_candidates(long height);

enum class Family { Fx, G6 };
const char* family_name(Family f);

struct ScanRecord {
  Family family = Family::Fx;
  /// (a, b, d) for f = a t^4 + b t^2 + d; (a, c, e) for g = t^6 + a t^4 + c t^2 + e.
  std::vector<Rat> coefficients;
  bool ok = false;  // false: budget exhausted, no claim either way
  std::optional<Rat> t0;
  std::optional<PointQ> point;
  std::string method;
  int non_integral_multiple = 0;
  long t_tried = 0;
  long points_examined = 0;
  long theight = 0;
  long pheight = 0;

  std::string key() const;
};

struct ScanConfig {
  long box = 1;
  long theight = 6;
  long pheight = 300;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Records whose key is listed are skipped (resume).
  std::vector<std::string> skip_keys;
};

/// Polynomial of a family member.
Poly family_poly(Family fam, const std::vector<Rat>& coeffs);
/// Members of the box in canonical order, split members removed.
std::vector<std::vector<Rat>> scan_members(Family fam, long box);

/// Point-search heights tried in turn: 12, 60, 300, ... capped at pheight.
std::vector<long> height_ladder(long pheight);

/// One member: for each height of the ladder, t candidates in order until a
/// fiber is certified. t_tried counts (height, t) pairs.
ScanRecord scan_member(Family fam, const std::vector<Rat>& coeffs, const std::vector<Rat>& tcands, long pheight,
                       long theight = 0, std::stop_token stop = {});

/// Whole box, in parallel; records in canonical member order. When `stop`
/// is triggered, members not yet finished are omitted.
std::vector<ScanRecord> scan(Family fam, const ScanConfig& cfg, std::stop_token stop = {});
inline std::vector<ScanRecord> scan_fx(const ScanConfig& cfg, std::stop_token stop = {}) {
  return scan(Family::Fx, cfg, stop);
}
inline std::vector<ScanRecord> scan_g6(const ScanConfig& cfg, std::stop_token stop = {}) {
  return scan(Family::G6, cfg, stop);
}

/// Success records: point on the fiber and of infinite order.
bool replay(const ScanRecord& rec);

/// One JSON object per line; rationals as "num/den".
std::string to_json_line(const ScanRecord& rec);
/// Throws ParseError on malformed input.
ScanRecord parse_json_line(const std::string& line);

/// Keys of the records in an existing output file (missing file: empty).
std::vector<std::string> existing_keys(const std::string& path);
/// Runs the scan skipping records already in `path` and appends new ones.
/// Returns the newly written records.
std::vector<ScanRecord> scan_to_file(Family fam, ScanConfig cfg, const std::string& path, std::stop_token stop = {});

}  // namespace ellsurf
