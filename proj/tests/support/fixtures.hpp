#pragma once

#include <string>
#include <vector>

#include "srreal/complex.hpp"

namespace srreal::testing {

inline ComplexWithDegrees make_complex(std::vector<VertexDecl> vertices,
                                       std::vector<Simplex> facets) {
  return ComplexWithDegrees(std::move(vertices), std::move(facets));
}

// Z[x4,x6,x8]/(x6x8)
inline ComplexWithDegrees ex1() {
  return make_complex({{"x4", 4}, {"x6", 6}, {"x8", 8}}, {{"x4", "x6"}, {"x4", "x8"}});
}

// Z[x4, x6_1..x6_n, x8]/(x6_j x6_k)
inline ComplexWithDegrees ex2(int n) {
  std::vector<VertexDecl> v = {{"x4", 4}, {"x8", 8}};
  std::vector<Simplex> f;
  for (int j = 1; j <= n; ++j) {
    const std::string id = "x6_" + std::to_string(j);
    v.push_back({id, 6});
    f.push_back(Simplex{"x4", id, "x8"});
  }
  return make_complex(std::move(v), std::move(f));
}

// Z[x4, y1, y2, z1, z2]/(y1y2, z1z2), |y| = 6, |z| = 8
inline ComplexWithDegrees ex3() {
  return make_complex({{"x4", 4}, {"y1", 6}, {"y2", 6}, {"z1", 8}, {"z2", 8}},
                      {{"x4", "y1", "z1"},
                       {"x4", "y1", "z2"},
                       {"x4", "y2", "z1"},
                       {"x4", "y2", "z2"}});
}

// Z[x4,x6]/(x4x6): no space has this cohomology.
inline ComplexWithDegrees x4_x6_disjoint() {
  return make_complex({{"x4", 4}, {"x6", 6}}, {{"x4"}, {"x6"}});
}

inline ComplexWithDegrees single_facet(const std::vector<int>& degrees) {
  std::vector<VertexDecl> v;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    ids.push_back("v" + std::to_string(i));
    v.push_back({ids.back(), degrees[i]});
  }
  return make_complex(std::move(v), {Simplex(ids)});
}

inline ComplexWithDegrees two_fours_on_edge() {
  return make_complex({{"a", 4}, {"b", 4}}, {{"a", "b"}});
}

inline ComplexWithDegrees two_fours_apart() {
  return make_complex({{"a", 4}, {"b", 4}}, {{"a"}, {"b"}});
}

}  // namespace srreal::testing
