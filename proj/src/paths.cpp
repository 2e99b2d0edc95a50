#include "vcactus/paths.hpp"

#include <algorithm>

#include "vcactus/errors.hpp"

namespace vcactus {

namespace {

RatVec lerp(const Breakpoint& a, const Breakpoint& b, const Rat& t) {
  const Rat s = (t - a.t) / (b.t - a.t);
  RatVec out(a.point.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.point[k] + s * (b.point[k] - a.point[k]);
  return out;
}

bool same_velocity(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  const Rat dt1 = b.t - a.t;
  const Rat dt2 = c.t - b.t;
  for (std::size_t k = 0; k < a.point.size(); ++k) {
    if ((b.point[k] - a.point[k]) * dt2 != (c.point[k] - b.point[k]) * dt1) return false;
  }
  return true;
}

void shift(RatVec& p, const WeightVec& alpha, const Rat& c) {
  for (std::size_t k = 0; k < p.size(); ++k) p[k] -= c * alpha[k];
}

Rat require_integral_min(const std::vector<Breakpoint>& bps, int i) {
  const auto idx = static_cast<std::size_t>(i - 1);
  Rat m = bps.front().point[idx];
  for (const auto& bp : bps) m = std::min(m, bp.point[idx]);
  if (!is_integer(m)) {
    throw ModelIntegrityError("minimum of H_" + std::to_string(i) + " is not integral: " + to_string(m));
  }
  return m;
}

nlohmann::ordered_json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer in path JSON");
}

Rat rat_from_pair(const nlohmann::json& num, const nlohmann::json& den) {
  Rat r(big_from_json(num), big_from_json(den));
  if (r.get_den() == 0) throw DomainError("zero denominator in path JSON");
  r.canonicalize();
  return r;
}

}  // namespace

PLPath::PLPath(DynkinType type, std::vector<Breakpoint> breakpoints) : type_(type) {
  const auto n = static_cast<std::size_t>(type.rank);
  if (breakpoints.size() < 2) throw DomainError("a path needs at least two breakpoints");
  if (breakpoints.front().t != 0 || breakpoints.back().t != 1) {
    throw DomainError("path breakpoints must start at t=0 and end at t=1");
  }
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    if (breakpoints[k].point.size() != n) throw DomainError("breakpoint dimension does not match rank");
    if (k > 0 && !(breakpoints[k - 1].t < breakpoints[k].t)) {
      throw DomainError("breakpoint times must be strictly increasing");
    }
  }
  for (const Rat& x : breakpoints.front().point) {
    if (x != 0) throw DomainError("paths start at the origin");
  }
  bps_ = canonicalize(std::move(breakpoints));
}

RatVec PLPath::at(const Rat& t) const {
  if (t < 0 || t > 1) throw DomainError("path evaluated outside [0,1]");
  for (std::size_t k = 1; k < bps_.size(); ++k) {
    if (t <= bps_[k].t) return lerp(bps_[k - 1], bps_[k], t);
  }
  return bps_.back().point;
}

Rat PiecewiseLinear::operator()(const Rat& t) const {
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    const auto& [t0, v0] = knots_[k - 1];
    const auto& [t1, v1] = knots_[k];
    if (t <= t1) return v0 + (t - t0) / (t1 - t0) * (v1 - v0);
  }
  return knots_.back().second;
}

Rat PiecewiseLinear::min() const {
  Rat m = knots_.front().second;
  for (const auto& kv : knots_) m = std::min(m, kv.second);
  return m;
}

std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> bps) {
  std::vector<Breakpoint> out;
  out.reserve(bps.size());
  for (auto& bp : bps) {
    while (out.size() >= 2 && same_velocity(out[out.size() - 2], out.back(), bp)) out.pop_back();
    out.push_back(std::move(bp));
  }
  return out;
}

PLPath canonicalize(const PLPath& path) { return PLPath(path.type(), path.breakpoints()); }

bool paths_equal(const PLPath& a, const PLPath& b) { return a == b; }

PLPath straight_path(const RootSystem& rs, const WeightVec& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank() || !is_dominant(lambda)) {
    throw DomainError("straight_path needs a dominant weight of length " + std::to_string(rs.rank()));
  }
  RatVec end(lambda.begin(), lambda.end());
  return PLPath(rs.type(), {{Rat(0), RatVec(lambda.size(), Rat(0))}, {Rat(1), end}});
}

PiecewiseLinear h_function(const PLPath& path, int i) {
  std::vector<std::pair<Rat, Rat>> knots;
  for (const auto& bp : path.breakpoints()) knots.emplace_back(bp.t, bp.point.at(static_cast<std::size_t>(i - 1)));
  return PiecewiseLinear(std::move(knots));
}

WeightVec weight(const PLPath& path) {
  WeightVec w;
  for (const Rat& x : path.endpoint()) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) {
      throw ModelIntegrityError("path endpoint is not an integral weight");
    }
    w.push_back(x.get_num().get_si());
  }
  return w;
}

long epsilon(const PLPath& path, int i) {
  const Rat m = require_integral_min(path.breakpoints(), i);
  return -m.get_num().get_si();
}

long phi(const PLPath& path, int i) {
  const Rat m = require_integral_min(path.breakpoints(), i);
  const Rat end = path.endpoint().at(static_cast<std::size_t>(i - 1));
  const Rat p = end - m;
  if (!is_integer(p)) throw ModelIntegrityError("H_" + std::to_string(i) + "(1) is not integral");
  return p.get_num().get_si();
}

std::optional<PLPath> root_f(const RootSystem& rs, const PLPath& path, int i) {
  const auto& bps = path.breakpoints();
  const auto idx = static_cast<std::size_t>(i - 1);
  const Rat m = require_integral_min(bps, i);
  if (bps.back().point[idx] - m < 1) return std::nullopt;

  // t_a: last time H = m (the minimum is attained at breakpoints).
  std::size_t ka = 0;
  for (std::size_t k = 0; k < bps.size(); ++k)
    if (bps[k].point[idx] == m) ka = k;
  // t_b: first time after t_a that H reaches m + 1.
  const Rat target = m + 1;
  std::size_t kb = ka + 1;
  while (bps[kb].point[idx] < target) ++kb;

  const WeightVec alpha = rs.simple_root(i);
  std::vector<Breakpoint> out(bps.begin(), bps.begin() + static_cast<std::ptrdiff_t>(ka + 1));
  for (std::size_t k = ka + 1; k < kb; ++k) {
    Breakpoint bp = bps[k];
    shift(bp.point, alpha, bp.point[idx] - m);
    out.push_back(std::move(bp));
  }
  if (bps[kb].point[idx] != target) {
    const Breakpoint& a = bps[kb - 1];
    const Breakpoint& b = bps[kb];
    const Rat tb = a.t + (target - a.point[idx]) / (b.point[idx] - a.point[idx]) * (b.t - a.t);
    Breakpoint cross{tb, lerp(a, b, tb)};
    shift(cross.point, alpha, Rat(1));
    out.push_back(std::move(cross));
  }
  for (std::size_t k = kb; k < bps.size(); ++k) {
    Breakpoint bp = bps[k];
    shift(bp.point, alpha, Rat(1));
    out.push_back(std::move(bp));
  }
  return PLPath(path.type(), std::move(out));
}

std::optional<PLPath> root_e(const RootSystem& rs, const PLPath& path, int i) {
  const auto& bps = path.breakpoints();
  const auto idx = static_cast<std::size_t>(i - 1);
  const Rat m = require_integral_min(bps, i);
  if (m > -1) return std::nullopt;

  // t_b: first time H = m.
  std::size_t kb = 0;
  while (bps[kb].point[idx] != m) ++kb;
  // t_a: last time before t_b that H equals m + 1.
  const Rat target = m + 1;
  std::size_t ka = kb - 1;
  while (bps[ka].point[idx] < target) --ka;

  const WeightVec alpha = rs.simple_root(i);
  std::vector<Breakpoint> out(bps.begin(), bps.begin() + static_cast<std::ptrdiff_t>(ka + 1));
  if (bps[ka].point[idx] != target) {
    const Breakpoint& a = bps[ka];
    const Breakpoint& b = bps[ka + 1];
    const Rat ta = a.t + (target - a.point[idx]) / (b.point[idx] - a.point[idx]) * (b.t - a.t);
    out.push_back({ta, lerp(a, b, ta)});
  }
  for (std::size_t k = ka + 1; k <= kb; ++k) {
    Breakpoint bp = bps[k];
    shift(bp.point, alpha, bp.point[idx] - target);
    out.push_back(std::move(bp));
  }
  for (std::size_t k = kb + 1; k < bps.size(); ++k) {
    Breakpoint bp = bps[k];
    shift(bp.point, alpha, Rat(-1));
    out.push_back(std::move(bp));
  }
  return PLPath(path.type(), std::move(out));
}

std::string path_key(const PLPath& path) {
  std::string key;
  for (const auto& bp : path.breakpoints()) {
    key += bp.t.get_str();
    key += ':';
    for (const Rat& x : bp.point) {
      key += x.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

nlohmann::ordered_json path_to_json(const PLPath& path) {
  auto bps = nlohmann::ordered_json::array();
  for (const auto& bp : path.breakpoints()) {
    auto coords = nlohmann::ordered_json::array();
    for (const Rat& x : bp.point) coords.push_back({big_to_json(x.get_num()), big_to_json(x.get_den())});
    bps.push_back({big_to_json(bp.t.get_num()), big_to_json(bp.t.get_den()), coords});
  }
  nlohmann::ordered_json j;
  j["breakpoints"] = std::move(bps);
  return j;
}

PLPath path_from_json(DynkinType type, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    throw DomainError("path JSON must be an object with a 'breakpoints' array");
  }
  std::vector<Breakpoint> bps;
  for (const auto& entry : j["breakpoints"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) {
      throw DomainError("each breakpoint must be [t_num, t_den, [coords]]");
    }
    Breakpoint bp{rat_from_pair(entry[0], entry[1]), {}};
    for (const auto& c : entry[2]) {
      if (!c.is_array() || c.size() != 2) throw DomainError("coordinates must be [num, den] pairs");
      bp.point.push_back(rat_from_pair(c[0], c[1]));
    }
    bps.push_back(std::move(bp));
  }
  return PLPath(type, std::move(bps));
}

}  // namespace vcactus
