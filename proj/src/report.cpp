#include "vcactus/report.hpp"

namespace vcactus {

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::ordered_json nodeset_json(NodeSet s) {
  auto a = nlohmann::ordered_json::array();
  for (int n : s.nodes()) a.push_back(n);
  return a;
}

nlohmann::ordered_json to_json(const Violation& v) {
  nlohmann::ordered_json j;
  j["kind"] = v.kind;
  if (v.relation != 0) j["relation"] = v.relation;
  if (v.I) j["I"] = nodeset_json(*v.I);
  if (v.J) j["J"] = nodeset_json(*v.J);
  if (v.vertex >= 0) j["witness_vertex"] = v.vertex;
  if (v.color != 0) j["color"] = v.color;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = pass() ? "pass" : "fail";
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : violations) arr.push_back(vcactus::to_json(v));
  j["violations"] = std::move(arr);
  return j;
}

}  // namespace vcactus
