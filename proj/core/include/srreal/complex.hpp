#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srreal/degree_multiset.hpp"

namespace srreal {

struct VertexDecl {
  std::string id;
  int degree = 0;  // value of the grading map; positive and even once validated

  friend bool operator==(const VertexDecl&, const VertexDecl&) = default;
};

// A finite set of vertex ids, kept sorted and duplicate-free. May be empty.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<std::string> ids);
  explicit Simplex(std::vector<std::string> ids);

  const std::vector<std::string>& ids() const { return ids_; }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }

  bool contains(std::string_view id) const;
  bool is_subset_of(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  // "{x4,x6}", "{}" for the empty simplex.
  std::string to_string() const;
  std::string joined(std::string_view separator) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<std::string> ids_;
};

// Simplicial complex given by its facets, plus a degree for every vertex.
// The constructor stores what it is given; call validate() before use.
class ComplexWithDegrees {
 public:
  ComplexWithDegrees() = default;
  ComplexWithDegrees(std::vector<VertexDecl> vertices, std::vector<Simplex> facets);

  const std::vector<VertexDecl>& vertices() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  bool has_vertex(std::string_view id) const;
  // Throws UnknownVertex.
  int degree(std::string_view id) const;
  int max_degree() const;
  // Vertex ids in lexicographic order.
  std::vector<std::string> sorted_ids() const;

 private:
  std::vector<VertexDecl> vertices_;
  std::vector<Simplex> facets_;
  std::map<std::string, int, std::less<>> degree_;
};

// Intersections of nonempty sets of facets, ordered by inclusion.
// Elements are sorted lexicographically on their id lists.
class MaxIntersectionPoset {
 public:
  MaxIntersectionPoset() = default;
  explicit MaxIntersectionPoset(std::vector<Simplex> elements);

  const std::vector<Simplex>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Simplex& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  // Strict inclusion of element a in element b.
  bool less(std::size_t a, std::size_t b) const;
  // Pairs (a, b) with a < b and nothing strictly between them.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_covers() const;

  friend bool operator==(const MaxIntersectionPoset&, const MaxIntersectionPoset&) = default;

 private:
  std::vector<Simplex> elements_;
};

// Throws Error with one of DuplicateVertex, InvalidVertexId, OddOrNonpositiveDegree,
// EmptyFacet, UnknownVertexInFacet, NonMaximalFacet, OrphanVertex.
void validate(const ComplexWithDegrees& complex);

// The empty simplex is always a face. Throws UnknownVertex.
bool is_face(const ComplexWithDegrees& complex, const Simplex& s);

MaxIntersectionPoset pmax(const ComplexWithDegrees& complex);

// Throws NotAFace (or UnknownVertex).
DegreeMultiset degree_multiset(const ComplexWithDegrees& complex, const Simplex& s);

// The subcomplex generated by the given simplices (faces of `complex`), keeping only
// the vertices it uses. Non-maximal and empty generators are dropped.
ComplexWithDegrees generated_subcomplex(const ComplexWithDegrees& complex,
                                        std::span<const Simplex> generators);

}  // namespace srreal
