#pragma once

// Exact piecewise-linear Littelmann paths pi : [0,1] -> Lambda_R and the root
// operators e_i, f_i acting on them.
//
// A path is stored as breakpoints (t_k, pi(t_k)) with t_0 = 0, pi(0) = 0,
// t_m = 1 and linear interpolation in between.  Coordinates are in the
// fundamental-weight basis, so coordinate i of pi(t) is H_i(t) = <pi(t), alpha_i^vee>.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcactus/cartan.hpp"
#include "vcactus/rational.hpp"

namespace vcactus {

struct Breakpoint {
  Rat t;
  RatVec point;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

class PLPath {
 public:
  // Validates the breakpoint layout and canonicalizes.  Throws DomainError on
  // a malformed sequence.
  PLPath(DynkinType type, std::vector<Breakpoint> breakpoints);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<Breakpoint>& breakpoints() const { return bps_; }

  RatVec at(const Rat& t) const;
  const RatVec& endpoint() const { return bps_.back().point; }

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  DynkinType type_;
  std::vector<Breakpoint> bps_;
};

// Linear interpolation through (t_k, value_k).
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::pair<Rat, Rat>> knots) : knots_(std::move(knots)) {}

  Rat operator()(const Rat& t) const;
  Rat min() const;
  const std::vector<std::pair<Rat, Rat>>& knots() const { return knots_; }

 private:
  std::vector<std::pair<Rat, Rat>> knots_;
};

PLPath straight_path(const RootSystem& rs, const WeightVec& lambda);

PiecewiseLinear h_function(const PLPath& path, int i);

// pi(1); throws ModelIntegrityError if the endpoint is not integral.
WeightVec weight(const PLPath& path);

long epsilon(const PLPath& path, int i);
long phi(const PLPath& path, int i);

std::optional<PLPath> root_f(const RootSystem& rs, const PLPath& path, int i);
std::optional<PLPath> root_e(const RootSystem& rs, const PLPath& path, int i);

// Minimal breakpoint representation: an interior breakpoint survives only
// where the velocity actually changes.
std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> bps);
PLPath canonicalize(const PLPath& path);
bool paths_equal(const PLPath& a, const PLPath& b);

// Exact serialization used as a deduplication key.
std::string path_key(const PLPath& path);

// {"breakpoints": [[t_num, t_den, [[num, den], ...]], ...]}
nlohmann::ordered_json path_to_json(const PLPath& path);
PLPath path_from_json(DynkinType type, const nlohmann::json& j);

}  // namespace vcactus
