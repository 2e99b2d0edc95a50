#include "vcactus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "vcactus/cactus.hpp"
#include "vcactus/crystal.hpp"
#include "vcactus/errors.hpp"
#include "vcactus/folding.hpp"

namespace vcactus::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

long parse_long(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("cannot parse " + what + " entry '" + s + "'");
  }
  if (s.size() > 9) throw DomainError(what + " entry '" + s + "' is too large");
  return std::stol(s);
}

struct Options {
  std::string type;
  std::string weight;
  std::string nodes;
  std::string kind;
  std::string export_format = "json";
  std::string levi_nodes;
  std::string output;
  bool json = false;
  unsigned threads = 1;
  std::size_t max_size = 20000;
};

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

int finish(const Report& report, const Options& opt, double elapsed_ms, const std::string& label, std::ostream& out) {
  if (opt.json) {
    auto j = report.to_json();
    j["subject"] = label;
    j["elapsed_ms"] = elapsed_ms;
    emit(out, j);
  } else {
    out << (report.pass() ? "PASS " : "FAIL ") << report.check << " " << label << " (" << report.violations.size()
        << " violations)\n";
    for (const auto& v : report.violations) out << "  " << to_json(v).dump() << "\n";
  }
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_info(const Options& opt, std::ostream& out) {
  const RootSystem rs(DynkinType::parse(opt.type));
  const auto full = rs.all_nodes();
  const NodePerm theta = rs.theta(full);
  const auto subs = rs.connected_subdiagrams();
  if (opt.json) {
    nlohmann::ordered_json j;
    j["type"] = rs.type().name();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= rs.rank(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 1; k <= rs.rank(); ++k) row.push_back(rs.cartan()(i, k));
      rows.push_back(std::move(row));
    }
    j["cartan"] = std::move(rows);
    j["positive_roots"] = rs.positive_roots(full).size();
    auto th = nlohmann::ordered_json::array();
    for (int i = 1; i <= rs.rank(); ++i) th.push_back(theta(i));
    j["theta"] = std::move(th);
    j["connected_subdiagrams"] = subs.size();
    emit(out, j);
    return kExitPass;
  }
  out << "type " << rs.type().name() << "\n";
  out << "cartan\n";
  for (int i = 1; i <= rs.rank(); ++i) {
    out << " ";
    for (int k = 1; k <= rs.rank(); ++k) out << " " << rs.cartan()(i, k);
    out << "\n";
  }
  out << "positive roots " << rs.positive_roots(full).size() << "\n";
  out << "theta";
  for (int i = 1; i <= rs.rank(); ++i) out << " " << i << "->" << theta(i);
  out << "\n";
  out << "connected subdiagrams " << subs.size() << "\n";
  return kExitPass;
}

int cmd_crystal(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type);
  const CrystalGraph g = generate(t, parse_weight(opt.weight, t.rank), opt.max_size);
  std::ostringstream body;
  if (!opt.levi_nodes.empty()) {
    const LeviView view(g, parse_nodes(opt.levi_nodes, t.rank));
    nlohmann::ordered_json j;
    j["type"] = t.name();
    j["highest_weight"] = g.highest_weight();
    j["levi"] = nodeset_json(view.colors());
    auto comps = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < view.component_count(); ++c) {
      nlohmann::ordered_json cj;
      cj["vertices"] = view.component(c);
      cj["highest"] = view.highest(c);
      cj["lowest"] = view.lowest(c);
      comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    body << j.dump(2) << "\n";
  } else if (opt.export_format == "dot") {
    body << crystal_to_dot(g);
  } else {
    body << crystal_to_json(g).dump(2) << "\n";
  }
  if (opt.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw ConfigError("cannot open " + opt.output);
    file << body.str();
  }
  return kExitPass;
}

int cmd_xi(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type);
  const CrystalGraph g = generate(t, parse_weight(opt.weight, t.rank), opt.max_size);
  const NodeSet J = parse_nodes(opt.nodes, t.rank);
  const VertexPerm perm = xi_perm(g, J);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["type"] = t.name();
    j["highest_weight"] = g.highest_weight();
    j["J"] = nodeset_json(J);
    j["xi"] = perm.image();
    emit(out, j);
  } else {
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
      out << b << " " << weight_str(g.weight(b)) << " -> " << perm(b) << " " << weight_str(g.weight(perm(b))) << "\n";
    }
  }
  return kExitPass;
}

int cmd_fold_info(const Options& opt, std::ostream& out) {
  const FoldingPair F = folding_pair(DynkinType::parse(opt.type));
  emit(out, fold_info_json(F));
  return kExitPass;
}

int cmd_virtualize(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type);
  const FoldingPair F = folding_pair(t);
  const VirtualModel m = VirtualModel::build(F, parse_weight(opt.weight, t.rank), opt.max_size);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["X"] = F.X.name();
    j["Y"] = F.Y.name();
    j["highest_weight"] = m.x->highest_weight();
    j["virtual_highest_weight"] = m.y->highest_weight();
    j["x_size"] = m.x->size();
    j["y_size"] = m.y->size();
    j["image"] = m.image;
    emit(out, j);
  } else {
    out << F.X.name() << " " << weight_str(m.x->highest_weight()) << " -> " << F.Y.name() << " "
        << weight_str(m.y->highest_weight()) << "\n";
    out << "sizes " << m.x->size() << " -> " << m.y->size() << "\n";
    for (std::size_t b = 0; b < m.image.size(); ++b) out << b << " -> " << m.image[b] << "\n";
  }
  const bool all_in = std::none_of(m.image.begin(), m.image.end(), [](Vertex v) { return v == kNoVertex; });
  return all_in ? kExitPass : kExitFail;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const DynkinType t = DynkinType::parse(opt.type);
  auto need_weight = [&] {
    if (opt.weight.empty()) throw DomainError("verify " + opt.kind + " needs a highest weight");
    return parse_weight(opt.weight, t.rank);
  };
  Report report;
  std::string label = t.name();
  if (opt.kind == "component-identity") {
    report = verify_component_identity(folding_pair(t));
  } else {
    const WeightVec lambda = need_weight();
    label += " " + weight_str(lambda);
    if (opt.kind == "seminormal") {
      report = verify_seminormal(generate(t, lambda, opt.max_size));
    } else if (opt.kind == "cactus") {
      report = verify_cactus_relations(generate(t, lambda, opt.max_size), opt.threads);
    } else if (opt.kind == "xi") {
      report = verify_xi(generate(t, lambda, opt.max_size), opt.threads);
    } else if (opt.kind == "virtual-relations") {
      const FoldingPair F = folding_pair(t);
      const CrystalGraph y = generate(F.Y, psi_weight(F, lambda), opt.max_size);
      report = verify_virtual_relations(F, y, [&](NodeSet I) { return s_tilde(F, I); }, opt.threads);
    } else if (opt.kind == "virtualization") {
      report = verify_virtualization(VirtualModel::build(folding_pair(t), lambda, opt.max_size));
    } else if (opt.kind == "diagram") {
      report = verify_commutative_diagram(VirtualModel::build(folding_pair(t), lambda, opt.max_size), opt.threads);
    } else {
      throw DomainError("unknown verification kind '" + opt.kind + "'");
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish(report, opt, ms, label, out);
}

}  // namespace

WeightVec parse_weight(const std::string& text, int rank) {
  WeightVec w;
  for (const auto& part : split_commas(text)) w.push_back(parse_long(part, "weight"));
  if (static_cast<int>(w.size()) != rank) {
    throw DomainError("weight '" + text + "' must have " + std::to_string(rank) + " entries");
  }
  return w;
}

NodeSet parse_nodes(const std::string& text, int rank) {
  NodeSet s;
  for (const auto& part : split_commas(text)) {
    const long n = parse_long(part, "node");
    if (n < 1 || n > rank) throw DomainError("node " + part + " is out of range 1.." + std::to_string(rank));
    s.insert(static_cast<int>(n));
  }
  if (s.empty()) throw DomainError("empty node set");
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Littelmann path crystals, cactus group actions and their folding virtualization", "vcactus"};
  app.require_subcommand(1);
  app.add_option("--threads", opt.threads, "Worker threads for verification")->check(CLI::Range(1u, 256u));
  app.add_option("--max-size", opt.max_size, "Refuse crystals with more vertices than this");
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto* info = app.add_subcommand("info", "Cartan data of a Dynkin type");
  info->add_option("type", opt.type, "Dynkin type, e.g. C2")->required();

  auto* crystal = app.add_subcommand("crystal", "Generate and export a path crystal");
  crystal->add_option("type", opt.type)->required();
  crystal->add_option("weight", opt.weight, "Highest weight, comma separated")->required();
  crystal->add_option("--export", opt.export_format)->check(CLI::IsMember({"json", "dot"}));
  crystal->add_option("--levi", opt.levi_nodes, "Restrict to these colours and list components");
  crystal->add_option("-o,--output", opt.output, "Write to a file instead of stdout");

  auto* xi_cmd = app.add_subcommand("xi", "Partial Schutzenberger-Lusztig involution");
  xi_cmd->add_option("type", opt.type)->required();
  xi_cmd->add_option("weight", opt.weight)->required();
  xi_cmd->add_option("--nodes", opt.nodes, "Connected node set J")->required();

  auto* cactus = app.add_subcommand("cactus-verify", "Check the cactus relations (same as verify cactus)");
  cactus->add_option("type", opt.type)->required();
  cactus->add_option("weight", opt.weight)->required();

  auto* fold = app.add_subcommand("fold-info", "Folding data for X = B_n, C_n, F_4, G_2");
  fold->add_option("type", opt.type)->required();

  auto* virt = app.add_subcommand("virtualize", "Map P(lambda) into P(psi(lambda))");
  virt->add_option("type", opt.type)->required();
  virt->add_option("weight", opt.weight)->required();

  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->add_option("kind", opt.kind)
      ->required()
      ->check(CLI::IsMember(
          {"seminormal", "cactus", "xi", "virtual-relations", "virtualization", "diagram", "component-identity"}));
  verify->add_option("type", opt.type)->required();
  verify->add_option("weight", opt.weight);

  for (auto* sub : {info, crystal, xi_cmd, cactus, fold, virt, verify}) {
    sub->add_option("--threads", opt.threads)->check(CLI::Range(1u, 256u));
    sub->add_option("--max-size", opt.max_size);
    sub->add_flag("--json", opt.json);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(opt, out);
    if (crystal->parsed()) return cmd_crystal(opt, out);
    if (xi_cmd->parsed()) return cmd_xi(opt, out);
    if (cactus->parsed()) {
      opt.kind = "cactus";
      return cmd_verify(opt, out);
    }
    if (fold->parsed()) return cmd_fold_info(opt, out);
    if (virt->parsed()) return cmd_virtualize(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace vcactus::cli
