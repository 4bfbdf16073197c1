#include "srreal/diagram.hpp"

#include <algorithm>
#include <functional>

#include "overloaded.hpp"
#include "srreal/error.hpp"
#include "srreal/json_io.hpp"

namespace srreal {

using detail::Overloaded;

namespace {

Simplex block_part(const Simplex& s, const std::vector<std::string>& block) {
  std::vector<std::string> ids;
  for (const auto& id : s.ids()) {
    if (std::binary_search(block.begin(), block.end(), id)) ids.push_back(id);
  }
  return Simplex(std::move(ids));
}

[[noreturn]] void no_map(const std::string& what) {
  throw Error(ErrorKind::NoCanonicalMap, what, "no canonical map: " + what);
}

std::string power_name(const char* base, int power) {
  std::string s = base;
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

// Lie-factor cohomology on generator positions: target position -> source position.
std::vector<std::optional<std::size_t>> lie_positions(const std::optional<FactorLabel>& source,
                                                      const std::optional<FactorLabel>& target,
                                                      const LieMap& map) {
  const std::size_t target_rank = target ? generator_degrees(*target).size() : 0;
  std::vector<std::optional<std::size_t>> out(target_rank);
  std::visit(
      Overloaded{
          [&](const NoLieFactor&) {
            if (source || target) no_map("NoLieFactor between Lie factors");
          },
          [&](const FromPoint&) {
            if (source || !target) no_map("FromPoint needs a Lie target and no Lie source");
          },
          [&](const Iota2Power& m) {
            const auto* s = source ? std::get_if<BSp>(&*source) : nullptr;
            const auto* t = target ? std::get_if<BSp>(&*target) : nullptr;
            if (!s || !t || t->n - s->n != m.power || m.power < 0) {
              no_map("iota2 power does not match BSp ranks");
            }
            // q_j -> q_j for j <= m
            for (std::size_t j = 0; j < static_cast<std::size_t>(s->n); ++j) out[j] = j;
          },
          [&](const Iota1Power& m) {
            const auto* t = target ? std::get_if<BSU>(&*target) : nullptr;
            if (!t || m.power < 0) no_map("iota1 needs a BSU target");
            if (m.after_iota3) {
              const auto* s = source ? std::get_if<BSp>(&*source) : nullptr;
              if (!s || t->n - 2 * s->n != m.power) no_map("iota1 . iota3 ranks do not match");
              // c_i -> q_{i/2} for even i <= 2m, else 0; c_i sits at position i - 2.
              for (int i = 2; i <= 2 * s->n; i += 2) {
                out[static_cast<std::size_t>(i - 2)] = static_cast<std::size_t>(i / 2 - 1);
              }
            } else {
              const auto* s = source ? std::get_if<BSU>(&*source) : nullptr;
              if (!s || t->n - s->n != m.power) no_map("iota1 power does not match BSU ranks");
              for (int i = 2; i <= s->n; ++i) {
                out[static_cast<std::size_t>(i - 2)] = static_cast<std::size_t>(i - 2);
              }
            }
          },
      },
      map);
  return out;
}

LieMap compose_lie(const LieMap& outer, const LieMap& inner) {
  return std::visit(
      Overloaded{
          [](const NoLieFactor&, const NoLieFactor&) -> LieMap { return NoLieFactor{}; },
          [](const FromPoint&, const NoLieFactor&) -> LieMap { return FromPoint{}; },
          [](const Iota1Power&, const FromPoint&) -> LieMap { return FromPoint{}; },
          [](const Iota2Power&, const FromPoint&) -> LieMap { return FromPoint{}; },
          [](const Iota2Power& o, const Iota2Power& i) -> LieMap {
            return Iota2Power{o.power + i.power};
          },
          [](const Iota1Power& o, const Iota2Power& i) -> LieMap {
            if (!o.after_iota3) no_map("iota1 after iota2");
            return Iota1Power{o.power + 2 * i.power, true};
          },
          [](const Iota1Power& o, const Iota1Power& i) -> LieMap {
            if (o.after_iota3) no_map("iota3 after a BSU map");
            return Iota1Power{o.power + i.power, i.after_iota3};
          },
          [](const auto&, const auto&) -> LieMap { no_map("incompatible composite"); },
      },
      outer, inner);
}

}  // namespace

std::string render(const FactorLabel& f) {
  return std::visit(Overloaded{
                        [](const CPInfPower& c) {
                          return c.k == 1 ? std::string("CP^inf")
                                          : "CP^inf^" + std::to_string(c.k);
                        },
                        [](const BSp& b) { return "BSp(" + std::to_string(b.n) + ")"; },
                        [](const BSU& b) { return "BSU(" + std::to_string(b.n) + ")"; },
                        [](const Point&) { return std::string("pt"); },
                    },
                    f);
}

std::vector<int> generator_degrees(const FactorLabel& f) {
  std::vector<int> out;
  std::visit(Overloaded{
                 [&](const CPInfPower& c) { out.assign(static_cast<std::size_t>(c.k), 2); },
                 [&](const BSp& b) {
                   for (int j = 1; j <= b.n; ++j) out.push_back(4 * j);
                 },
                 [&](const BSU& b) {
                   for (int i = 2; i <= b.n; ++i) out.push_back(2 * i);
                 },
                 [](const Point&) {},
             },
             f);
  return out;
}

std::optional<FactorLabel> BlockSpace::lie_factor() const {
  for (const auto& f : factors) {
    if (std::holds_alternative<BSp>(f) || std::holds_alternative<BSU>(f)) return f;
  }
  return std::nullopt;
}

DegreeMultiset SpaceLabel::generator_degrees() const {
  std::vector<int> all;
  for (const auto& block : blocks) {
    for (const auto& f : block.factors) {
      auto d = srreal::generator_degrees(f);
      all.insert(all.end(), d.begin(), d.end());
    }
  }
  return DegreeMultiset(std::move(all));
}

std::string SpaceLabel::render() const {
  std::string s;
  for (const auto& block : blocks) {
    for (const auto& f : block.factors) {
      if (std::holds_alternative<Point>(f)) continue;
      if (!s.empty()) s += " x ";
      s += srreal::render(f);
    }
  }
  return s.empty() ? "pt" : s;
}

std::string MapLabel::render() const {
  std::vector<std::string> parts;
  for (const auto& block : blocks) {
    std::visit(Overloaded{
                   [](const NoLieFactor&) {},
                   [&](const FromPoint&) { parts.push_back("pt"); },
                   [&](const Iota2Power& m) {
                     if (m.power > 0) parts.push_back(power_name("iota2", m.power));
                   },
                   [&](const Iota1Power& m) {
                     if (m.after_iota3) {
                       parts.push_back(m.power > 0 ? power_name("iota1", m.power) + " . iota3"
                                                   : std::string("iota3"));
                     } else if (m.power > 0) {
                       parts.push_back(power_name("iota1", m.power));
                     }
                   },
               },
               block.lie);
    bool identity = block.cp.target_count == block.cp.targets.size();
    for (std::size_t j = 0; j < block.cp.targets.size(); ++j) {
      if (block.cp.targets[j] != j) identity = false;
    }
    if (!identity) parts.push_back("incl");
  }
  if (parts.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += " x ";
    s += parts[i];
  }
  return s;
}

std::string node_name(const Simplex& s) { return "sigma_" + s.joined("_"); }

SpaceLabel label_node(const ComplexWithDegrees& complex, const Simplex& s,
                      const Partition& partition) {
  SpaceLabel label;
  for (const auto& block : partition.blocks) {
    const Simplex part = block_part(s, block);
    const AdmissibleClass cls = classify(degree_multiset(complex, part));
    BlockSpace space;
    std::vector<std::string> high;
    for (const auto& id : part.ids()) {
      (complex.degree(id) == 2 ? space.cp_vertices : high).push_back(id);
    }
    std::stable_sort(high.begin(), high.end(), [&](const std::string& a, const std::string& b) {
      return complex.degree(a) < complex.degree(b);
    });
    space.lie_vertices = std::move(high);

    if (const auto* sp = std::get_if<SpType>(&cls)) {
      space.factors.push_back(BSp{sp->n});
    } else if (const auto* su = std::get_if<SUType>(&cls)) {
      space.factors.push_back(BSU{su->n + 1});
    } else if (!std::holds_alternative<Torus>(cls)) {
      throw Error(ErrorKind::InadmissibleSimplex, s.to_string(),
                  s.to_string() + " restricted to block " + Simplex(block).to_string() +
                      " is " + describe(cls));
    }
    if (!space.cp_vertices.empty()) {
      space.factors.push_back(CPInfPower{static_cast<int>(space.cp_vertices.size())});
    }
    if (space.factors.empty()) space.factors.push_back(Point{});
    label.blocks.push_back(std::move(space));
  }
  return label;
}

MapLabel label_edge(const ComplexWithDegrees& complex, const Simplex& s, const Simplex& t,
                    const Partition& partition) {
  if (!s.is_subset_of(t) || s == t) {
    throw Error(ErrorKind::InvalidArgument, s.to_string(),
                s.to_string() + " is not a proper face of " + t.to_string());
  }
  const SpaceLabel source = label_node(complex, s, partition);
  const SpaceLabel target = label_node(complex, t, partition);
  MapLabel map;
  for (std::size_t b = 0; b < source.blocks.size(); ++b) {
    const BlockSpace& from = source.blocks[b];
    const BlockSpace& to = target.blocks[b];
    const auto lie_from = from.lie_factor();
    const auto lie_to = to.lie_factor();
    BlockMap block;
    if (!lie_from && !lie_to) {
      block.lie = NoLieFactor{};
    } else if (!lie_from) {
      block.lie = FromPoint{};
    } else if (!lie_to) {
      no_map(s.to_string() + " -> " + t.to_string() + " loses its Lie factor");
    } else if (const auto* sp_from = std::get_if<BSp>(&*lie_from)) {
      if (const auto* sp_to = std::get_if<BSp>(&*lie_to)) {
        block.lie = Iota2Power{sp_to->n - sp_from->n};
      } else {
        const int n = std::get<BSU>(*lie_to).n;
        if (n < 2 * sp_from->n) {
          no_map("BSp(" + std::to_string(sp_from->n) + ") -> BSU(" + std::to_string(n) + ")");
        }
        block.lie = Iota1Power{n - 2 * sp_from->n, true};
      }
    } else {
      const int m = std::get<BSU>(*lie_from).n;
      const auto* su_to = std::get_if<BSU>(&*lie_to);
      if (!su_to) no_map("BSU(" + std::to_string(m) + ") -> BSp");
      block.lie = Iota1Power{su_to->n - m, false};
    }
    for (const auto& id : from.cp_vertices) {
      auto it = std::find(to.cp_vertices.begin(), to.cp_vertices.end(), id);
      if (it == to.cp_vertices.end()) no_map("CP^inf coordinate " + id + " disappears");
      block.cp.targets.push_back(static_cast<std::size_t>(it - to.cp_vertices.begin()));
    }
    block.cp.target_count = to.cp_vertices.size();
    map.blocks.push_back(std::move(block));
  }
  return map;
}

GeneratorMap induced_generator_map(const SpaceLabel& source, const SpaceLabel& target,
                                   const MapLabel& map) {
  if (source.blocks.size() != target.blocks.size() ||
      map.blocks.size() != target.blocks.size()) {
    no_map("block counts differ");
  }
  GeneratorMap out;
  for (std::size_t b = 0; b < target.blocks.size(); ++b) {
    const BlockSpace& from = source.blocks[b];
    const BlockSpace& to = target.blocks[b];
    const BlockMap& block = map.blocks[b];
    const auto lie_from = from.lie_factor();
    const auto lie_to = to.lie_factor();
    if (lie_from && generator_degrees(*lie_from).size() != from.lie_vertices.size()) {
      no_map("source Lie generators and bound vertices differ in number");
    }
    if (lie_to && generator_degrees(*lie_to).size() != to.lie_vertices.size()) {
      no_map("target Lie generators and bound vertices differ in number");
    }
    if ((!lie_from && !from.lie_vertices.empty()) || (!lie_to && !to.lie_vertices.empty())) {
      no_map("vertices bound to a missing Lie factor");
    }
    const auto positions = lie_positions(lie_from, lie_to, block.lie);
    for (std::size_t j = 0; j < positions.size(); ++j) {
      std::optional<std::string> image;
      if (positions[j]) image = from.lie_vertices.at(*positions[j]);
      out.emplace(to.lie_vertices[j], image);
    }

    if (block.cp.targets.size() != from.cp_vertices.size() ||
        block.cp.target_count != to.cp_vertices.size()) {
      no_map("CP^inf coordinate counts differ");
    }
    std::vector<std::optional<std::string>> cp_image(to.cp_vertices.size());
    for (std::size_t j = 0; j < block.cp.targets.size(); ++j) {
      const std::size_t t = block.cp.targets[j];
      if (t >= cp_image.size() || cp_image[t]) no_map("CP^inf inclusion is not injective");
      cp_image[t] = from.cp_vertices[j];
    }
    for (std::size_t t = 0; t < cp_image.size(); ++t) out.emplace(to.cp_vertices[t], cp_image[t]);
  }
  return out;
}

MapLabel compose(const MapLabel& outer, const MapLabel& inner) {
  if (outer.blocks.size() != inner.blocks.size()) no_map("block counts differ");
  MapLabel out;
  for (std::size_t b = 0; b < outer.blocks.size(); ++b) {
    const BlockMap& o = outer.blocks[b];
    const BlockMap& i = inner.blocks[b];
    BlockMap block;
    block.lie = compose_lie(o.lie, i.lie);
    for (std::size_t t : i.cp.targets) {
      if (t >= o.cp.targets.size()) no_map("CP^inf inclusions do not compose");
      block.cp.targets.push_back(o.cp.targets[t]);
    }
    if (i.cp.target_count != o.cp.targets.size()) no_map("CP^inf inclusions do not compose");
    block.cp.target_count = o.cp.target_count;
    out.blocks.push_back(std::move(block));
  }
  return out;
}

ColimitDiagram build_diagram(const ComplexWithDegrees& complex, const Partition& partition) {
  validate_partition(complex, partition);
  const MaxIntersectionPoset poset = pmax(complex);
  ColimitDiagram diagram;
  diagram.partition = partition;
  for (const auto& s : poset.elements()) {
    diagram.nodes.push_back({s, node_name(s), label_node(complex, s, partition)});
  }
  for (auto [a, b] : poset.hasse_covers()) {
    diagram.edges.push_back({a, b, label_edge(complex, poset[a], poset[b], partition)});
  }
  return diagram;
}

std::vector<std::string> functoriality_violations(const ComplexWithDegrees& complex,
                                                  const ColimitDiagram& diagram) {
  std::vector<std::string> violations;
  const std::size_t n = diagram.nodes.size();
  std::vector<std::vector<const DiagramEdge*>> out_edges(n);
  for (const auto& e : diagram.edges) out_edges.at(e.from).push_back(&e);

  for (std::size_t a = 0; a < n; ++a) {
    // Walk every saturated chain out of `a`, carrying the composite label and the
    // composite generator map (target vertex -> vertex of node a).
    std::function<void(std::size_t, const MapLabel&, const GeneratorMap&, std::size_t)> walk =
        [&](std::size_t at, const MapLabel& label, const GeneratorMap& gens, std::size_t len) {
          if (len >= 2) {
            const DiagramNode& src = diagram.nodes[a];
            const DiagramNode& dst = diagram.nodes[at];
            const MapLabel direct =
                label_edge(complex, src.simplex, dst.simplex, diagram.partition);
            const GeneratorMap direct_gens = induced_generator_map(src.label, dst.label, direct);
            if (direct != label || direct_gens != gens) {
              violations.push_back(src.name + " -> " + dst.name);
            }
          }
          for (const DiagramEdge* e : out_edges[at]) {
            const DiagramNode& mid = diagram.nodes[at];
            const DiagramNode& next = diagram.nodes[e->to];
            GeneratorMap step = induced_generator_map(mid.label, next.label, e->map);
            GeneratorMap composite;
            for (const auto& [v, image] : step) {
              composite[v] = image ? gens.at(*image) : std::nullopt;
            }
            walk(e->to, compose(e->map, label), composite, len + 1);
          }
        };
    // Start from the identity on node a.
    const DiagramNode& start = diagram.nodes[a];
    MapLabel identity;
    GeneratorMap gens;
    for (const auto& block : start.label.blocks) {
      BlockMap bm;
      if (auto lie = block.lie_factor()) {
        if (std::holds_alternative<BSp>(*lie)) {
          bm.lie = Iota2Power{0};
        } else {
          bm.lie = Iota1Power{0, false};
        }
      } else {
        bm.lie = NoLieFactor{};
      }
      for (std::size_t j = 0; j < block.cp_vertices.size(); ++j) bm.cp.targets.push_back(j);
      bm.cp.target_count = block.cp_vertices.size();
      identity.blocks.push_back(std::move(bm));
      for (const auto& v : block.lie_vertices) gens[v] = v;
      for (const auto& v : block.cp_vertices) gens[v] = v;
    }
    walk(a, identity, gens, 0);
  }
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  return violations;
}

std::string emit_dot(const ColimitDiagram& diagram) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph hocolim {\n  rankdir=LR;\n";
  for (const auto& node : diagram.nodes) {
    out += "  " + quote(node.name) + " [label=" + quote(node.label.render()) + "];\n";
  }
  for (const auto& e : diagram.edges) {
    out += "  " + quote(diagram.nodes.at(e.from).name) + " -> " +
           quote(diagram.nodes.at(e.to).name) + " [label=" + quote(e.map.render()) + "];\n";
  }
  return out + "}\n";
}

std::string emit_json(const ColimitDiagram& diagram) { return to_json(diagram).dump(2) + "\n"; }

}  // namespace srreal
