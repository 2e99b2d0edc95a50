#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcactus/cartan.hpp"

namespace vcactus {

// One failed check.  Fields that do not apply to a given check stay unset.
struct Violation {
  std::string kind;
  int relation = 0;
  std::optional<NodeSet> I;
  std::optional<NodeSet> J;
  int vertex = -1;
  int color = 0;
  std::string detail;
};

struct Report {
  std::string check;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void add(Violation v) { violations.push_back(std::move(v)); }
  void merge(const Report& other);

  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json to_json(const Violation& v);
nlohmann::ordered_json nodeset_json(NodeSet s);

}  // namespace vcactus
