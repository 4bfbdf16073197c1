#include <doctest.h>

#include <algorithm>

#include "srreal/diagram.hpp"
#include "srreal/error.hpp"
#include "srreal/sr_ring.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace srreal {
namespace {

using testing::ex1;
using testing::ex3;

Partition one_block(const ComplexWithDegrees& k) { return Partition{{k.sorted_ids()}}; }

std::multiset<std::string> node_labels(const ColimitDiagram& d) {
  std::multiset<std::string> out;
  for (const auto& n : d.nodes) out.insert(n.label.render());
  return out;
}

std::multiset<std::string> edge_labels(const ColimitDiagram& d) {
  std::multiset<std::string> out;
  for (const auto& e : d.edges) {
    out.insert(d.nodes[e.from].label.render() + " -> " + d.nodes[e.to].label.render() + " : " +
               e.map.render());
  }
  return out;
}

TEST_CASE("label_node") {
  const auto k = ex1();
  const auto p = one_block(k);
  CHECK(label_node(k, {"x4", "x6"}, p).render() == "BSU(3)");
  CHECK(label_node(k, {"x4", "x8"}, p).render() == "BSp(2)");
  CHECK(label_node(k, {}, p).render() == "pt");
  CHECK(label_node(k, {"x4"}, p).render() == "BSp(1)");
  CHECK(label_node(k, {"x4", "x8"}, p).blocks.at(0).lie_vertices ==
        std::vector<std::string>{"x4", "x8"});
  CHECK_THROWS_AS(label_node(k, {"x8"}, p), Error);
}

TEST_CASE("label_node with CP^inf coordinates") {
  const auto k = testing::make_complex({{"a", 4}, {"s", 2}, {"t", 2}, {"u", 2}},
                                       {{"a", "s", "t", "u"}});
  const auto label = label_node(k, {"a", "s", "t", "u"}, one_block(k));
  CHECK(label.render() == "BSp(1) x CP^inf^3");
  CHECK(label.blocks[0].cp_vertices == std::vector<std::string>{"s", "t", "u"});
  CHECK(label.generator_degrees() == DegreeMultiset{2, 2, 2, 4});
  CHECK(label_node(k, {"s"}, one_block(k)).render() == "CP^inf");
}

TEST_CASE("label_edge") {
  const auto k = ex1();
  const auto p = one_block(k);
  CHECK(label_edge(k, {"x4"}, {"x4", "x6"}, p).render() == "iota1 . iota3");
  CHECK(label_edge(k, {"x4"}, {"x4", "x8"}, p).render() == "iota2");
  const auto k3 = ex3();
  CHECK(label_edge(k3, {"x4", "z1"}, {"x4", "y1", "z1"}, one_block(k3)).render() == "iota3");
  CHECK(label_edge(k3, {"x4", "y1"}, {"x4", "y1", "z1"}, one_block(k3)).render() == "iota1");
  CHECK_THROWS_AS(label_edge(k, {"x4", "x6"}, {"x4"}, p), Error);
  CHECK_THROWS_AS(label_edge(k, {"x4"}, {"x4"}, p), Error);
}

TEST_CASE("edge maps induce the SR projection") {
  const auto k = ex3();
  const auto p = one_block(k);
  const Simplex s{"x4", "z1"}, t{"x4", "y1", "z1"};
  const auto map = label_edge(k, s, t, p);
  const auto gens = induced_generator_map(label_node(k, s, p), label_node(k, t, p), map);
  const GeneratorMap want = {{"x4", "x4"}, {"y1", std::nullopt}, {"z1", "z1"}};
  CHECK(gens == want);
}

TEST_CASE("first worked example diagram") {
  const auto k = ex1();
  const auto d = build_diagram(k, one_block(k));
  CHECK(node_labels(d) == std::multiset<std::string>{"BSU(3)", "BSp(1)", "BSp(2)"});
  CHECK(edge_labels(d) == std::multiset<std::string>{"BSp(1) -> BSU(3) : iota1 . iota3",
                                                     "BSp(1) -> BSp(2) : iota2"});
  const auto dot = emit_dot(d);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 3 + 2 + 1);
  CHECK(dot.find("\"sigma_x4\" -> \"sigma_x4_x6\" [label=\"iota1 . iota3\"];") !=
        std::string::npos);
  CHECK(dot.starts_with("digraph"));
}

TEST_CASE("second worked example diagram") {
  for (int n = 1; n <= 4; ++n) {
    const auto k = testing::ex2(n);
    const auto d = build_diagram(k, one_block(k));
    if (n == 1) {
      CHECK(node_labels(d) == std::multiset<std::string>{"BSU(4)"});
      continue;
    }
    std::multiset<std::string> want = {"BSp(2)"};
    for (int j = 0; j < n; ++j) want.insert("BSU(4)");
    CHECK(node_labels(d) == want);
    CHECK(d.edges.size() == static_cast<std::size_t>(n));
    for (const auto& e : d.edges) CHECK(e.map.render() == "iota3");
  }
}

TEST_CASE("third worked example diagram") {
  const auto k = ex3();
  const auto d = build_diagram(k, one_block(k));
  CHECK(node_labels(d) == std::multiset<std::string>{"BSp(1)", "BSU(3)", "BSU(3)", "BSp(2)",
                                                     "BSp(2)", "BSU(4)", "BSU(4)", "BSU(4)",
                                                     "BSU(4)"});
  std::multiset<std::string> edges;
  for (int j = 0; j < 2; ++j) {
    edges.insert("BSp(1) -> BSU(3) : iota1 . iota3");
    edges.insert("BSp(1) -> BSp(2) : iota2");
  }
  for (int j = 0; j < 4; ++j) {
    edges.insert("BSU(3) -> BSU(4) : iota1");
    edges.insert("BSp(2) -> BSU(4) : iota3");
  }
  CHECK(edge_labels(d) == edges);
  CHECK(functoriality_violations(k, d).empty());
}

TEST_CASE("empty intersection gives a point node") {
  const auto k = testing::two_fours_apart();
  const auto d = build_diagram(k, Partition{{{"a"}, {"b"}}});
  REQUIRE(d.nodes.size() == 3);
  CHECK(d.nodes[0].simplex.empty());
  CHECK(d.nodes[0].label.render() == "pt");
  CHECK(d.nodes[0].name == "sigma_");
  CHECK(d.edges.size() == 2);
  for (const auto& e : d.edges) CHECK(e.from == 0);
  const auto dot = emit_dot(d);
  CHECK(dot.find("\"sigma_\" -> \"sigma_a\"") != std::string::npos);
}

TEST_CASE("compose rewrites iota3 after iota2") {
  const MapLabel iota2{{BlockMap{Iota2Power{1}, {}}}};
  const MapLabel iota3{{BlockMap{Iota1Power{0, true}, {}}}};
  const MapLabel iota1{{BlockMap{Iota1Power{1, false}, {}}}};
  CHECK(compose(iota3, iota2) == MapLabel{{BlockMap{Iota1Power{2, true}, {}}}});
  CHECK(compose(iota1, iota3) == MapLabel{{BlockMap{Iota1Power{1, true}, {}}}});
  CHECK(compose(iota2, iota2) == MapLabel{{BlockMap{Iota2Power{2}, {}}}});
  CHECK_THROWS_AS(compose(iota2, iota1), Error);
  CHECK_THROWS_AS(compose(iota3, iota3), Error);

  // Same generator map both ways round the square BSp(1) -> BSp(2) -> BSU(4).
  const SpaceLabel sp1{{BlockSpace{{BSp{1}}, {"a"}, {}}}};
  const SpaceLabel su4{{BlockSpace{{BSU{4}}, {"a", "c", "b"}, {}}}};
  CHECK(induced_generator_map(sp1, su4, compose(iota3, iota2)) ==
        GeneratorMap{{"a", "a"}, {"b", std::nullopt}, {"c", std::nullopt}});
}

TEST_CASE("json round trip") {
  for (const auto& k : {ex1(), ex3(), testing::ex2(3)}) {
    const auto d = build_diagram(k, one_block(k));
    const auto text = emit_json(d);
    CHECK(parse_diagram_json(text) == d);
    CHECK(emit_json(parse_diagram_json(text)) == text);
  }
  const auto k = testing::two_fours_apart();
  const auto d = build_diagram(k, Partition{{{"a"}, {"b"}}});
  CHECK(parse_diagram_json(emit_json(d)) == d);
  CHECK_THROWS_AS(parse_diagram_json("{"), Error);
  CHECK_THROWS_AS(parse_diagram_json("{\"nodes\": 3}"), Error);
}

TEST_CASE("labels model the free ring on sigma") {
  std::mt19937_64 rng(11);
  testing::RandomComplexOptions opt;
  opt.max_facets = 8;
  opt.degrees = {2, 4, 4, 6, 8};
  int built = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_complex(rng, opt);
    const auto p = find_partition(k);
    if (!p) continue;
    ++built;
    const auto d = build_diagram(k, *p);
    const auto poset = pmax(k);
    CHECK(d.nodes.size() == poset.size());
    CHECK(d.edges.size() == poset.hasse_covers().size());
    for (const auto& node : d.nodes) {
      CHECK(free_hilbert(node.label.generator_degrees(), 24) ==
            free_hilbert(degree_multiset(k, node.simplex), 24));
    }
    for (const auto& e : d.edges) {
      const auto& from = d.nodes[e.from];
      const auto& to = d.nodes[e.to];
      const auto gens = induced_generator_map(from.label, to.label, e.map);
      for (const auto& v : to.simplex.ids()) {
        REQUIRE(gens.count(v));
        CHECK(gens.at(v) == (from.simplex.contains(v) ? std::optional<std::string>(v)
                                                      : std::nullopt));
      }
    }
    CHECK(functoriality_violations(k, d).empty());
  }
  CHECK(built > 40);
}

TEST_CASE("build_diagram refuses inadmissible input") {
  const auto k = testing::x4_x6_disjoint();
  CHECK_THROWS_AS(build_diagram(k, one_block(k)), Error);
  try {
    build_diagram(k, one_block(k));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InadmissibleSimplex);
  }
}

}  // namespace
}  // namespace srreal
