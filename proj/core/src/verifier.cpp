#include "srreal/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "srreal/error.hpp"

namespace srreal {

namespace {

void note(VerificationReport& report, const std::string& what) {
  report.passed = false;
  if (!report.first_discrepancy) report.first_discrepancy = what;
}

std::string big(const BigInt& x) { return x.str(); }

void check_structure(const ComplexWithDegrees& complex, const ColimitDiagram& diagram,
                     VerificationReport& report) {
  auto fail = [&](const std::string& what) {
    if (report.structure_ok) report.structure_detail = what;
    report.structure_ok = false;
    note(report, "structure: " + what);
  };
  try {
    validate_partition(complex, diagram.partition);
  } catch (const Error& e) {
    fail(e.what());
  }
  const MaxIntersectionPoset poset = pmax(complex);
  if (diagram.nodes.size() != poset.size()) {
    fail("diagram has " + std::to_string(diagram.nodes.size()) + " nodes, P_max has " +
         std::to_string(poset.size()));
    return;
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (diagram.nodes[i].simplex != poset[i] || diagram.nodes[i].name != node_name(poset[i])) {
      fail("node " + diagram.nodes[i].name + " is not element " + poset[i].to_string());
      return;
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> expected, actual;
  for (auto cover : poset.hasse_covers()) expected.insert(cover);
  for (const auto& e : diagram.edges) actual.insert({e.from, e.to});
  if (expected != actual || actual.size() != diagram.edges.size()) {
    fail("edges are not the Hasse covers of P_max");
  }
}

LabelCheck check_label(const ComplexWithDegrees& complex, const DiagramNode& node, int D) {
  LabelCheck check{node.simplex, true, ""};
  try {
    const HilbertFunction expected = free_hilbert(degree_multiset(complex, node.simplex), D);
    const HilbertFunction actual = free_hilbert(node.label.generator_degrees(), D);
    if (auto d = actual.first_difference(expected)) {
      check.ok = false;
      check.detail = "degree " + std::to_string(*d) + ": label " + node.label.render() +
                     " has dim " + big(actual.at(*d)) + ", Z" + node.simplex.to_string() +
                     " has dim " + big(expected.at(*d));
      return check;
    }
    std::vector<std::string> bound;
    for (std::size_t b = 0; b < node.label.blocks.size(); ++b) {
      const BlockSpace& block = node.label.blocks[b];
      std::vector<int> lie_degrees;
      if (auto lie = block.lie_factor()) lie_degrees = generator_degrees(*lie);
      if (lie_degrees.size() != block.lie_vertices.size()) {
        check.ok = false;
        check.detail = "block " + std::to_string(b) + " binds " +
                       std::to_string(block.lie_vertices.size()) + " vertices to " +
                       std::to_string(lie_degrees.size()) + " Lie generators";
        return check;
      }
      for (std::size_t j = 0; j < lie_degrees.size(); ++j) {
        if (complex.degree(block.lie_vertices[j]) != lie_degrees[j]) {
          check.ok = false;
          check.detail = "vertex " + block.lie_vertices[j] + " bound to a generator of degree " +
                         std::to_string(lie_degrees[j]);
          return check;
        }
      }
      for (const auto& v : block.cp_vertices) {
        if (complex.degree(v) != 2) {
          check.ok = false;
          check.detail = "vertex " + v + " carried by a CP^inf coordinate";
          return check;
        }
      }
      bound.insert(bound.end(), block.lie_vertices.begin(), block.lie_vertices.end());
      bound.insert(bound.end(), block.cp_vertices.begin(), block.cp_vertices.end());
    }
    std::sort(bound.begin(), bound.end());
    if (bound != node.simplex.ids()) {
      check.ok = false;
      check.detail = "label generators are not bound to exactly the vertices of " +
                     node.simplex.to_string();
    }
  } catch (const Error& e) {
    check.ok = false;
    check.detail = e.what();
  }
  return check;
}

EdgeCheck check_edge(const ColimitDiagram& diagram, const DiagramEdge& edge) {
  const DiagramNode& from = diagram.nodes.at(edge.from);
  const DiagramNode& to = diagram.nodes.at(edge.to);
  EdgeCheck check{from.simplex, to.simplex, true, ""};
  try {
    const GeneratorMap induced = induced_generator_map(from.label, to.label, edge.map);
    GeneratorMap projection;
    for (const auto& v : to.simplex.ids()) {
      projection[v] = from.simplex.contains(v) ? std::optional<std::string>(v) : std::nullopt;
    }
    if (induced != projection) {
      check.ok = false;
      for (const auto& [v, image] : projection) {
        auto it = induced.find(v);
        if (it == induced.end() || it->second != image) {
          check.detail = "generator " + v + " maps to " +
                         (it == induced.end() ? std::string("nothing")
                                              : it->second.value_or("0")) +
                         ", projection sends it to " + image.value_or("0");
          break;
        }
      }
      if (check.detail.empty()) check.detail = "induced map has extra generators";
    }
  } catch (const Error& e) {
    check.ok = false;
    check.detail = e.what();
  }
  return check;
}

}  // namespace

VerificationReport pushout_recurrence_check(const ComplexWithDegrees& complex, int max_degree) {
  VerificationReport report;
  report.max_degree = max_degree;
  const auto& facets = complex.facets();
  HilbertFunction previous(max_degree);  // the empty complex: the zero ring
  for (std::size_t j = 0; j < facets.size(); ++j) {
    const Simplex& facet = facets[j];
    const auto glued = generated_subcomplex(
        complex, std::span<const Simplex>(facets.data(), j + 1));
    const HilbertFunction union_dims = sr_hilbert(glued, max_degree);
    const HilbertFunction facet_dims = free_hilbert(degree_multiset(complex, facet), max_degree);
    HilbertFunction intersection_dims(max_degree);
    if (j > 0) {
      std::vector<Simplex> pieces;
      for (std::size_t i = 0; i < j; ++i) pieces.push_back(facets[i].intersect(facet));
      intersection_dims = sr_hilbert(generated_subcomplex(complex, pieces), max_degree);
    }
    RecurrenceStep step{j + 1, facet, {}};
    for (int d = 0; d <= max_degree; d += 2) {
      RecurrenceEntry entry{d, union_dims.at(d), previous.at(d), facet_dims.at(d),
                            intersection_dims.at(d)};
      if (!entry.holds()) {
        note(report, "step " + std::to_string(j + 1) + " degree " + std::to_string(d) + ": " +
                         big(entry.union_dim) + " != " + big(entry.previous_dim) + " + " +
                         big(entry.facet_dim) + " - " + big(entry.intersection_dim));
      }
      step.entries.push_back(std::move(entry));
    }
    report.steps.push_back(std::move(step));
    previous = union_dims;
  }
  return report;
}

BigInt kernel_dim(const ComplexWithDegrees& first, const ComplexWithDegrees& second, int degree) {
  std::vector<VertexDecl> vertices = first.vertices();
  for (const auto& v : second.vertices()) {
    if (first.has_vertex(v.id)) {
      if (first.degree(v.id) != v.degree) {
        throw Error(ErrorKind::DegreeMismatch, v.id,
                    "vertex '" + v.id + "' has degrees " + std::to_string(first.degree(v.id)) +
                        " and " + std::to_string(v.degree));
      }
    } else {
      vertices.push_back(v);
    }
  }
  std::vector<Simplex> pieces;
  for (const auto& f : first.facets()) {
    for (const auto& g : second.facets()) pieces.push_back(f.intersect(g));
  }
  const ComplexWithDegrees ambient(std::move(vertices), {});
  const auto common = generated_subcomplex(ambient, pieces);
  const int D = degree + (degree % 2 == 0 ? 0 : 1);
  return sr_hilbert(first, D).at(degree) + sr_hilbert(second, D).at(degree) -
         sr_hilbert(common, D).at(degree);
}

VerificationReport verify_construction(const ComplexWithDegrees& complex,
                                       const ColimitDiagram& diagram, int max_degree) {
  VerificationReport report;
  report.max_degree = max_degree;
  check_structure(complex, diagram, report);

  for (const auto& node : diagram.nodes) {
    LabelCheck check = check_label(complex, node, max_degree);
    if (!check.ok) note(report, "label " + node.name + ": " + check.detail);
    report.labels.push_back(std::move(check));
  }
  for (const auto& edge : diagram.edges) {
    if (edge.from >= diagram.nodes.size() || edge.to >= diagram.nodes.size()) {
      note(report, "edge refers to a missing node");
      continue;
    }
    EdgeCheck check = check_edge(diagram, edge);
    if (!check.ok) {
      note(report, "edge " + diagram.nodes[edge.from].name + " -> " +
                       diagram.nodes[edge.to].name + ": " + check.detail);
    }
    report.edges.push_back(std::move(check));
  }
  if (report.structure_ok) {
    try {
      report.functoriality_violations = functoriality_violations(complex, diagram);
    } catch (const Error& e) {
      report.functoriality_violations.push_back(e.what());
    }
    for (const auto& v : report.functoriality_violations) note(report, "functoriality: " + v);
  }

  VerificationReport recurrence = pushout_recurrence_check(complex, max_degree);
  report.steps = std::move(recurrence.steps);
  if (!recurrence.passed) note(report, *recurrence.first_discrepancy);
  return report;
}

HilbertFunction brute_oracle_hilbert(const ComplexWithDegrees& complex, int max_degree) {
  HilbertFunction out(max_degree);
  const auto& vertices = complex.vertices();
  const std::size_t n = vertices.size();
  std::vector<std::vector<bool>> facets;
  for (const auto& f : complex.facets()) {
    std::vector<bool> members(n);
    for (std::size_t v = 0; v < n; ++v) members[v] = f.contains(vertices[v].id);
    facets.push_back(std::move(members));
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_degree / 2 + 1), 0);
  std::vector<bool> support(n, false);

  auto support_is_face = [&] {
    if (std::none_of(support.begin(), support.end(), [](bool b) { return b; })) return true;
    return std::any_of(facets.begin(), facets.end(), [&](const std::vector<bool>& f) {
      for (std::size_t v = 0; v < n; ++v) {
        if (support[v] && !f[v]) return false;
      }
      return true;
    });
  };
  auto recurse = [&](auto&& self, std::size_t v, int degree) -> void {
    if (v == n) {
      if (support_is_face()) ++counts[static_cast<std::size_t>(degree / 2)];
      return;
    }
    const int g = vertices[v].degree;
    for (int e = 0; degree + e * g <= max_degree; ++e) {
      support[v] = e > 0;
      self(self, v + 1, degree + e * g);
    }
    support[v] = false;
  };
  recurse(recurse, 0, 0);
  for (int d = 0; d <= max_degree; d += 2) out.mutable_at(d) = counts[static_cast<std::size_t>(d / 2)];
  return out;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "truncation D = " << report.max_degree << "\n";
  if (!report.steps.empty()) {
    out << "gluing recurrence (union = previous + facet - intersection):\n";
    out << "deg";
    for (const auto& step : report.steps) out << " | step " << step.step << " " << step.facet.to_string();
    out << "\n";
    for (std::size_t k = 0; k < report.steps.front().entries.size(); ++k) {
      out << report.steps.front().entries[k].degree;
      for (const auto& step : report.steps) {
        const auto& e = step.entries[k];
        out << " | " << big(e.union_dim) << " = " << big(e.previous_dim) << " + "
            << big(e.facet_dim) << " - " << big(e.intersection_dim)
            << (e.holds() ? "" : " FAIL");
      }
      out << "\n";
    }
  }
  if (!report.structure_ok) out << "structure: FAIL " << report.structure_detail << "\n";
  for (const auto& l : report.labels) {
    out << "label " << node_name(l.simplex) << ": " << (l.ok ? "ok" : "FAIL " + l.detail) << "\n";
  }
  for (const auto& e : report.edges) {
    out << "edge " << node_name(e.from) << " -> " << node_name(e.to) << ": "
        << (e.ok ? "ok" : "FAIL " + e.detail) << "\n";
  }
  for (const auto& v : report.functoriality_violations) out << "functoriality: FAIL " << v << "\n";
  out << (report.passed ? "PASS" : "FAIL " + report.first_discrepancy.value_or("")) << "\n";
  return out.str();
}

}  // namespace srreal
