#include "srreal/json_io.hpp"

#include <limits>
#include <map>
#include <set>

#include "overloaded.hpp"
#include "srreal/error.hpp"

namespace srreal {

using detail::Overloaded;
using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where, where + ": " + what);
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) parse_error(where, "unknown key '" + key + "'");
  }
}

const json& required(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, "missing key '" + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    parse_error(where, "integer out of range");
  }
  return static_cast<int>(v);
}

std::size_t as_size(const json& j, const std::string& where) {
  const int v = as_int(j, where);
  if (v < 0) parse_error(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) parse_error(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return json(static_cast<std::uint64_t>(x));
  }
  return json(x.str());
}

json factor_to_json(const FactorLabel& f) {
  return std::visit(Overloaded{
                        [](const CPInfPower& c) { return json{{"kind", "CPInfPower"}, {"k", c.k}}; },
                        [](const BSp& b) { return json{{"kind", "BSp"}, {"n", b.n}}; },
                        [](const BSU& b) { return json{{"kind", "BSU"}, {"n", b.n}}; },
                        [](const Point&) { return json{{"kind", "Point"}}; },
                    },
                    f);
}

FactorLabel factor_from_json(const json& j) {
  const std::string where = "factor";
  if (!j.is_object()) parse_error(where, "expected an object");
  const std::string kind = required(j, "kind", where).get<std::string>();
  if (kind == "Point") {
    reject_unknown_keys(j, {"kind"}, where);
    return Point{};
  }
  if (kind == "CPInfPower") {
    reject_unknown_keys(j, {"kind", "k"}, where);
    const int k = as_int(required(j, "k", where), where);
    if (k < 1) parse_error(where, "CPInfPower needs k >= 1");
    return CPInfPower{k};
  }
  reject_unknown_keys(j, {"kind", "n"}, where);
  const int n = as_int(required(j, "n", where), where);
  if (kind == "BSp") {
    if (n < 1) parse_error(where, "BSp needs n >= 1");
    return BSp{n};
  }
  if (kind == "BSU") {
    if (n < 2) parse_error(where, "BSU needs n >= 2");
    return BSU{n};
  }
  parse_error(where, "unknown factor kind '" + kind + "'");
}

json lie_map_to_json(const LieMap& m) {
  return std::visit(Overloaded{
                        [](const NoLieFactor&) { return json{{"kind", "NoLieFactor"}}; },
                        [](const FromPoint&) { return json{{"kind", "FromPoint"}}; },
                        [](const Iota1Power& i) {
                          return json{{"kind", "Iota1Power"},
                                      {"power", i.power},
                                      {"afterIota3", i.after_iota3}};
                        },
                        [](const Iota2Power& i) {
                          return json{{"kind", "Iota2Power"}, {"power", i.power}};
                        },
                    },
                    m);
}

LieMap lie_map_from_json(const json& j) {
  const std::string where = "lie map";
  if (!j.is_object()) parse_error(where, "expected an object");
  const std::string kind = required(j, "kind", where).get<std::string>();
  if (kind == "NoLieFactor") return NoLieFactor{};
  if (kind == "FromPoint") return FromPoint{};
  if (kind == "Iota2Power") {
    reject_unknown_keys(j, {"kind", "power"}, where);
    return Iota2Power{as_int(required(j, "power", where), where)};
  }
  if (kind == "Iota1Power") {
    reject_unknown_keys(j, {"kind", "power", "afterIota3"}, where);
    const json& after = required(j, "afterIota3", where);
    if (!after.is_boolean()) parse_error(where, "afterIota3 must be a boolean");
    return Iota1Power{as_int(required(j, "power", where), where), after.get<bool>()};
  }
  parse_error(where, "unknown map kind '" + kind + "'");
}

json reason_json(const FailureReason& reason) {
  return std::visit(Overloaded{
                        [](const ObstructionReason& r) { return to_json(r); },
                        [](const FamilyMismatch& m) {
                          return json{{"kind", "FamilyMismatch"}, {"found", to_json(m.found)}};
                        },
                    },
                    reason);
}

}  // namespace

ComplexWithDegrees complex_from_json(const json& j) {
  reject_unknown_keys(j, {"vertices", "facets"}, "input");
  const json& vertices = required(j, "vertices", "input");
  const json& facets = required(j, "facets", "input");
  if (!vertices.is_array()) parse_error("vertices", "expected an array");
  if (!facets.is_array()) parse_error("facets", "expected an array");
  std::vector<VertexDecl> decls;
  for (const auto& v : vertices) {
    reject_unknown_keys(v, {"id", "degree"}, "vertex");
    const json& id = required(v, "id", "vertex");
    if (!id.is_string()) parse_error("vertex", "id must be a string");
    decls.push_back({id.get<std::string>(),
                     as_int(required(v, "degree", "vertex"), "vertex '" + id.get<std::string>() + "' degree")});
  }
  std::vector<Simplex> simplices;
  for (const auto& f : facets) simplices.emplace_back(as_strings(f, "facet"));
  return ComplexWithDegrees(std::move(decls), std::move(simplices));
}

ComplexWithDegrees parse_complex(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_error("input", e.what());
  }
  return complex_from_json(j);
}

json to_json(const ComplexWithDegrees& complex) {
  json vertices = json::array();
  for (const auto& v : complex.vertices()) vertices.push_back({{"id", v.id}, {"degree", v.degree}});
  json facets = json::array();
  for (const auto& f : complex.facets()) facets.push_back(to_json(f));
  return json{{"vertices", vertices}, {"facets", facets}};
}

json to_json(const Simplex& s) { return json(s.ids()); }

json to_json(const DegreeMultiset& ms) {
  return json(std::vector<int>(ms.values().begin(), ms.values().end()));
}

json to_json(const HilbertFunction& h) {
  json dims = json::object();
  for (int d = 0; d <= h.max_degree(); d += 2) dims[std::to_string(d)] = big_to_json(h.at(d));
  return json{{"D", h.max_degree()}, {"dims", dims}};
}

json to_json(const ObstructionReason& reason) {
  return std::visit(Overloaded{
                        [](const ThomasRank& t) {
                          return json{{"kind", "ThomasRank"},
                                      {"target", t.target_degree},
                                      {"i", t.i},
                                      {"source", t.source_degree},
                                      {"dimSource", t.dim_source},
                                      {"dimTarget", t.dim_target},
                                      {"scope", "rank inequality only"}};
                        },
                        [](const AdemP3&) { return json{{"kind", "AdemP3"}}; },
                        [](const TableMiss& m) {
                          return json{{"kind", "TableMiss"}, {"inTable", m.in_table}};
                        },
                        [](const MultipleDegree4&) { return json{{"kind", "MultipleDegree4"}}; },
                    },
                    reason);
}

json to_json(const AdmissibleClass& c) {
  return std::visit(
      Overloaded{
          [](const Torus& t) { return json{{"kind", "Torus"}, {"k2", t.k2}}; },
          [](const SUType& t) { return json{{"kind", "SUType"}, {"n", t.n}, {"k2", t.k2}}; },
          [](const SpType& t) { return json{{"kind", "SpType"}, {"n", t.n}, {"k2", t.k2}}; },
          [](const Exceptional& t) {
            return json{{"kind", "Exceptional"}, {"n", t.n}, {"k2", t.k2}};
          },
          [](const Inadmissible& t) {
            return json{{"kind", "Inadmissible"}, {"reason", to_json(t.reason)}};
          },
      },
      c);
}

json to_json(const Partition& p) { return json(p.blocks); }

json to_json(const Verdict& v) {
  json out = std::visit(
      Overloaded{
          [](const Realizable& r) {
            json per_sigma = json::array();
            for (const auto& sc : r.per_sigma) {
              per_sigma.push_back({{"simplex", to_json(sc.simplex)},
                                   {"multiset", to_json(multiset_of(sc.cls))},
                                   {"class", to_json(sc.cls)}});
            }
            return json{{"partition", to_json(r.partition)}, {"perSigma", per_sigma}};
          },
          [](const NotRealizable& n) {
            return json{{"witness", to_json(n.witness)},
                        {"multiset", to_json(n.multiset)},
                        {"reason", reason_json(n.reason)}};
          },
          [](const HypothesisViolated& h) {
            return json{{"pair", {h.x, h.y}}, {"degree", h.degree()}, {"exponent", h.exponent}};
          },
          [](const SufficientOnly& s) { return json{{"partition", to_json(s.partition)}}; },
          [](const Unknown& u) { return json{{"note", u.note}}; },
      },
      v);
  out["verdict"] = verdict_kind(v);
  return out;
}

json to_json(const ColimitDiagram& diagram) {
  json nodes = json::array();
  for (const auto& node : diagram.nodes) {
    json factors = json::array();
    for (std::size_t b = 0; b < node.label.blocks.size(); ++b) {
      const BlockSpace& block = node.label.blocks[b];
      json space = json::array();
      for (const auto& f : block.factors) space.push_back(factor_to_json(f));
      factors.push_back({{"block", b},
                         {"space", space},
                         {"lieVertices", block.lie_vertices},
                         {"cpVertices", block.cp_vertices}});
    }
    nodes.push_back({{"name", node.name},
                     {"simplex", to_json(node.simplex)},
                     {"label", node.label.render()},
                     {"factors", factors}});
  }
  json edges = json::array();
  for (const auto& e : diagram.edges) {
    const DiagramNode& from = diagram.nodes.at(e.from);
    const DiagramNode& to = diagram.nodes.at(e.to);
    json maps = json::array();
    for (std::size_t b = 0; b < e.map.blocks.size(); ++b) {
      const BlockMap& m = e.map.blocks[b];
      maps.push_back({{"block", b},
                      {"lie", lie_map_to_json(m.lie)},
                      {"cp", {{"targets", m.cp.targets}, {"targetCount", m.cp.target_count}}}});
    }
    json generators = json::object();
    try {
      for (const auto& [v, image] : induced_generator_map(from.label, to.label, e.map)) {
        generators[v] = image ? json(*image) : json(nullptr);
      }
    } catch (const Error&) {
      generators = nullptr;
    }
    edges.push_back({{"from", to_json(from.simplex)},
                     {"to", to_json(to.simplex)},
                     {"label", e.map.render()},
                     {"maps", maps},
                     {"generatorMap", generators}});
  }
  return json{{"partition", to_json(diagram.partition)}, {"nodes", nodes}, {"edges", edges}};
}

ColimitDiagram diagram_from_json(const json& j) {
  try {
    reject_unknown_keys(j, {"partition", "nodes", "edges"}, "diagram");
    ColimitDiagram diagram;
    const json& partition = required(j, "partition", "diagram");
    if (!partition.is_array()) parse_error("partition", "expected an array of blocks");
    for (const auto& block : partition) diagram.partition.blocks.push_back(as_strings(block, "partition"));

    std::map<Simplex, std::size_t> index;
    for (const auto& n : required(j, "nodes", "diagram")) {
      reject_unknown_keys(n, {"name", "simplex", "label", "factors"}, "node");
      DiagramNode node;
      node.simplex = Simplex(as_strings(required(n, "simplex", "node"), "node simplex"));
      node.name = required(n, "name", "node").get<std::string>();
      for (const auto& f : required(n, "factors", "node")) {
        reject_unknown_keys(f, {"block", "space", "lieVertices", "cpVertices"}, "node factors");
        BlockSpace block;
        for (const auto& s : required(f, "space", "node factors")) {
          block.factors.push_back(factor_from_json(s));
        }
        block.lie_vertices = as_strings(required(f, "lieVertices", "node factors"), "lieVertices");
        block.cp_vertices = as_strings(required(f, "cpVertices", "node factors"), "cpVertices");
        node.label.blocks.push_back(std::move(block));
      }
      if (!index.emplace(node.simplex, diagram.nodes.size()).second) {
        parse_error("node", "duplicate node " + node.simplex.to_string());
      }
      diagram.nodes.push_back(std::move(node));
    }

    for (const auto& e : required(j, "edges", "diagram")) {
      reject_unknown_keys(e, {"from", "to", "label", "maps", "generatorMap"}, "edge");
      auto lookup = [&](const char* key) {
        Simplex s(as_strings(required(e, key, "edge"), "edge endpoint"));
        auto it = index.find(s);
        if (it == index.end()) parse_error("edge", "endpoint " + s.to_string() + " is not a node");
        return it->second;
      };
      DiagramEdge edge;
      edge.from = lookup("from");
      edge.to = lookup("to");
      for (const auto& m : required(e, "maps", "edge")) {
        reject_unknown_keys(m, {"block", "lie", "cp"}, "edge map");
        BlockMap block;
        block.lie = lie_map_from_json(required(m, "lie", "edge map"));
        const json& cp = required(m, "cp", "edge map");
        reject_unknown_keys(cp, {"targets", "targetCount"}, "cp inclusion");
        for (const auto& t : required(cp, "targets", "cp inclusion")) {
          block.cp.targets.push_back(as_size(t, "cp target"));
        }
        block.cp.target_count = as_size(required(cp, "targetCount", "cp inclusion"), "targetCount");
        edge.map.blocks.push_back(std::move(block));
      }
      diagram.edges.push_back(std::move(edge));
    }
    return diagram;
  } catch (const json::exception& e) {
    parse_error("diagram", e.what());
  }
}

ColimitDiagram parse_diagram_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_error("diagram", e.what());
  }
  return diagram_from_json(j);
}

json to_json(const VerificationReport& report) {
  json steps = json::array();
  for (const auto& step : report.steps) {
    json entries = json::array();
    for (const auto& e : step.entries) {
      entries.push_back({{"degree", e.degree},
                         {"union", big_to_json(e.union_dim)},
                         {"previous", big_to_json(e.previous_dim)},
                         {"facet", big_to_json(e.facet_dim)},
                         {"piecesSum", big_to_json(e.pieces_dim())},
                         {"intersection", big_to_json(e.intersection_dim)},
                         {"holds", e.holds()}});
    }
    steps.push_back({{"step", step.step}, {"facet", to_json(step.facet)}, {"degrees", entries}});
  }
  json labels = json::array();
  for (const auto& l : report.labels) {
    labels.push_back({{"simplex", to_json(l.simplex)}, {"ok", l.ok}, {"detail", l.detail}});
  }
  json edges = json::array();
  for (const auto& e : report.edges) {
    edges.push_back({{"from", to_json(e.from)},
                     {"to", to_json(e.to)},
                     {"ok", e.ok},
                     {"detail", e.detail}});
  }
  return json{{"D", report.max_degree},
              {"structureOk", report.structure_ok},
              {"structureDetail", report.structure_detail},
              {"steps", steps},
              {"labels", labels},
              {"edges", edges},
              {"functorialityViolations", report.functoriality_violations},
              {"passed", report.passed},
              {"firstDiscrepancy", report.first_discrepancy ? json(*report.first_discrepancy)
                                                            : json(nullptr)}};
}

}  // namespace srreal
