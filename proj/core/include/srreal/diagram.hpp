#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "srreal/complex.hpp"
#include "srreal/realizability.hpp"

namespace srreal {

// Factors of a node space.
struct CPInfPower {
  int k = 1;
  friend bool operator==(const CPInfPower&, const CPInfPower&) = default;
};
struct BSp {
  int n = 1;
  friend bool operator==(const BSp&, const BSp&) = default;
};
struct BSU {
  int n = 2;
  friend bool operator==(const BSU&, const BSU&) = default;
};
struct Point {
  friend bool operator==(const Point&, const Point&) = default;
};
using FactorLabel = std::variant<CPInfPower, BSp, BSU, Point>;

std::string render(const FactorLabel& f);
// Generator degrees of the factor's integral cohomology, ascending.
std::vector<int> generator_degrees(const FactorLabel& f);

// The space X_{sigma ∩ A_i} for one partition block.
struct BlockSpace {
  // [Point], [Lie], [CPInfPower] or [Lie, CPInfPower].
  std::vector<FactorLabel> factors;
  // Vertices bound to the Lie factor's generators, ascending degree.
  std::vector<std::string> lie_vertices;
  // Degree-2 vertices carried by the CP^inf coordinates, id order.
  std::vector<std::string> cp_vertices;

  std::optional<FactorLabel> lie_factor() const;
  friend bool operator==(const BlockSpace&, const BlockSpace&) = default;
};

// F(sigma) = prod_i X_{sigma ∩ A_i}.
struct SpaceLabel {
  std::vector<BlockSpace> blocks;

  DegreeMultiset generator_degrees() const;
  // "BSp(2) x CP^inf^3"; "pt" when every block is a point.
  std::string render() const;
  friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;
};

// Lie-factor part of an edge map.
struct NoLieFactor {
  friend bool operator==(const NoLieFactor&, const NoLieFactor&) = default;
};
struct FromPoint {
  friend bool operator==(const FromPoint&, const FromPoint&) = default;
};
// iota1^power, optionally precomposed with iota3 (BSp(m) -> BSU(2m) -> BSU(2m+power)).
struct Iota1Power {
  int power = 0;
  bool after_iota3 = false;
  friend bool operator==(const Iota1Power&, const Iota1Power&) = default;
};
// iota2^power : BSp(m) -> BSp(m+power)
struct Iota2Power {
  int power = 0;
  friend bool operator==(const Iota2Power&, const Iota2Power&) = default;
};
using LieMap = std::variant<NoLieFactor, FromPoint, Iota1Power, Iota2Power>;

// Source CP^inf coordinate j goes to target coordinate targets[j].
struct CPCoordInclusion {
  std::vector<std::size_t> targets;
  std::size_t target_count = 0;
  friend bool operator==(const CPCoordInclusion&, const CPCoordInclusion&) = default;
};

struct BlockMap {
  LieMap lie;
  CPCoordInclusion cp;
  friend bool operator==(const BlockMap&, const BlockMap&) = default;
};

struct MapLabel {
  std::vector<BlockMap> blocks;
  // "iota1 . iota3", "iota2 x incl", "id"
  std::string render() const;
  friend bool operator==(const MapLabel&, const MapLabel&) = default;
};

// Cohomology of an edge map on generators: target vertex -> source vertex, or nullopt
// when the generator goes to zero.
using GeneratorMap = std::map<std::string, std::optional<std::string>>;

struct DiagramNode {
  Simplex simplex;
  std::string name;  // "sigma_" + ids joined by '_'
  SpaceLabel label;
  friend bool operator==(const DiagramNode&, const DiagramNode&) = default;
};

struct DiagramEdge {
  std::size_t from = 0;  // node indices, from ⊂ to
  std::size_t to = 0;
  MapLabel map;
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

// Functor over P = P_max(K); edges are the Hasse covers.
struct ColimitDiagram {
  Partition partition;
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  friend bool operator==(const ColimitDiagram&, const ColimitDiagram&) = default;
};

std::string node_name(const Simplex& s);

// Throws InadmissibleSimplex when some sigma ∩ A_i is not a torus, SU or Sp family.
SpaceLabel label_node(const ComplexWithDegrees& complex, const Simplex& s,
                      const Partition& partition);

// Requires s ⊂ t. Throws NoCanonicalMap if the block labels admit no iota composite.
MapLabel label_edge(const ComplexWithDegrees& complex, const Simplex& s, const Simplex& t,
                    const Partition& partition);

// Reads the cohomology map off the labels alone. Throws NoCanonicalMap when the map
// label does not fit the source and target labels.
GeneratorMap induced_generator_map(const SpaceLabel& source, const SpaceLabel& target,
                                   const MapLabel& map);

// `outer ∘ inner`, rewriting iota3 ∘ iota2 as iota1^2 ∘ iota3. Throws NoCanonicalMap.
MapLabel compose(const MapLabel& outer, const MapLabel& inner);

ColimitDiagram build_diagram(const ComplexWithDegrees& complex, const Partition& partition);

// Chains a < b < c of nodes where composing the edge maps along a saturated chain
// disagrees with the direct map a < c, as "sigma_a -> sigma_c" strings.
std::vector<std::string> functoriality_violations(const ComplexWithDegrees& complex,
                                                  const ColimitDiagram& diagram);

std::string emit_dot(const ColimitDiagram& diagram);
std::string emit_json(const ColimitDiagram& diagram);
// Throws Parse.
ColimitDiagram parse_diagram_json(const std::string& text);

}  // namespace srreal
