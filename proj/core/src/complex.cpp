#include "srreal/complex.hpp"

#include <algorithm>
#include <set>

#include "srreal/error.hpp"

namespace srreal {

Simplex::Simplex(std::initializer_list<std::string> ids)
    : Simplex(std::vector<std::string>(ids)) {}

Simplex::Simplex(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Simplex::contains(std::string_view id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id, std::less<>{});
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Simplex Simplex::intersect(const Simplex& other) const {
  Simplex out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

std::string Simplex::to_string() const { return "{" + joined(",") + "}"; }

std::string Simplex::joined(std::string_view separator) const {
  std::string s;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) s += separator;
    s += ids_[i];
  }
  return s;
}

ComplexWithDegrees::ComplexWithDegrees(std::vector<VertexDecl> vertices,
                                       std::vector<Simplex> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  for (const auto& v : vertices_) degree_.emplace(v.id, v.degree);
}

bool ComplexWithDegrees::has_vertex(std::string_view id) const {
  return degree_.find(id) != degree_.end();
}

int ComplexWithDegrees::degree(std::string_view id) const {
  auto it = degree_.find(id);
  if (it == degree_.end()) {
    throw Error(ErrorKind::UnknownVertex, std::string(id),
                "vertex '" + std::string(id) + "' is not declared");
  }
  return it->second;
}

int ComplexWithDegrees::max_degree() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.degree);
  return m;
}

std::vector<std::string> ComplexWithDegrees::sorted_ids() const {
  std::vector<std::string> ids;
  ids.reserve(vertices_.size());
  for (const auto& v : vertices_) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

MaxIntersectionPoset::MaxIntersectionPoset(std::vector<Simplex> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

std::optional<std::size_t> MaxIntersectionPoset::index_of(const Simplex& s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool MaxIntersectionPoset::less(std::size_t a, std::size_t b) const {
  return a != b && elements_[a].size() < elements_[b].size() &&
         elements_[a].is_subset_of(elements_[b]);
}

std::vector<std::pair<std::size_t, std::size_t>> MaxIntersectionPoset::hasse_covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = elements_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (less(a, c) && less(c, b)) covered = false;
      }
      if (covered) covers.emplace_back(a, b);
    }
  }
  return covers;
}

void validate(const ComplexWithDegrees& complex) {
  std::set<std::string, std::less<>> seen;
  for (const auto& v : complex.vertices()) {
    if (v.id.empty()) {
      throw Error(ErrorKind::InvalidVertexId, v.id, "vertex id must be a nonempty string");
    }
    if (!seen.insert(v.id).second) {
      throw Error(ErrorKind::DuplicateVertex, v.id, "vertex '" + v.id + "' declared twice");
    }
    if (v.degree < 2 || v.degree % 2 != 0) {
      throw Error(ErrorKind::OddOrNonpositiveDegree, v.id,
                  "vertex '" + v.id + "' has degree " + std::to_string(v.degree) +
                      ", expected a positive even integer");
    }
  }

  const auto& facets = complex.facets();
  for (const auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::EmptyFacet, "{}", "facets must be nonempty");
    for (const auto& id : f.ids()) {
      if (!seen.contains(id)) {
        throw Error(ErrorKind::UnknownVertexInFacet, id,
                    "facet " + f.to_string() + " uses undeclared vertex '" + id + "'");
      }
    }
  }

  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].is_subset_of(facets[j])) {
        throw Error(ErrorKind::NonMaximalFacet, facets[i].to_string(),
                    "facet " + facets[i].to_string() + " is contained in facet " +
                        facets[j].to_string());
      }
    }
  }

  for (const auto& v : complex.vertices()) {
    bool used = std::any_of(facets.begin(), facets.end(),
                            [&](const Simplex& f) { return f.contains(v.id); });
    if (!used) {
      throw Error(ErrorKind::OrphanVertex, v.id,
                  "vertex '" + v.id + "' does not appear in any facet");
    }
  }
}

bool is_face(const ComplexWithDegrees& complex, const Simplex& s) {
  for (const auto& id : s.ids()) {
    if (!complex.has_vertex(id)) {
      throw Error(ErrorKind::UnknownVertex, id, "vertex '" + id + "' is not declared");
    }
  }
  if (s.empty()) return true;
  const auto& facets = complex.facets();
  return std::any_of(facets.begin(), facets.end(),
                     [&](const Simplex& f) { return s.is_subset_of(f); });
}

MaxIntersectionPoset pmax(const ComplexWithDegrees& complex) {
  // Close the facet set under intersection with single facets; every intersection of
  // k facets arises from one of k-1 facets in this way.
  std::set<Simplex> found(complex.facets().begin(), complex.facets().end());
  std::vector<Simplex> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const auto& s : frontier) {
      for (const auto& f : complex.facets()) {
        Simplex t = s.intersect(f);
        if (found.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return MaxIntersectionPoset(std::vector<Simplex>(found.begin(), found.end()));
}

DegreeMultiset degree_multiset(const ComplexWithDegrees& complex, const Simplex& s) {
  if (!is_face(complex, s)) {
    throw Error(ErrorKind::NotAFace, s.to_string(), s.to_string() + " is not a face");
  }
  std::vector<int> degrees;
  degrees.reserve(s.size());
  for (const auto& id : s.ids()) degrees.push_back(complex.degree(id));
  return DegreeMultiset(std::move(degrees));
}

ComplexWithDegrees generated_subcomplex(const ComplexWithDegrees& complex,
                                        std::span<const Simplex> generators) {
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Simplex& g = generators[i];
    for (const auto& id : g.ids()) complex.degree(id);
    if (g.empty()) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size() && !dominated; ++j) {
      if (i == j) continue;
      const Simplex& h = generators[j];
      // Strictly larger, or an equal copy appearing earlier.
      if (g.is_subset_of(h) && (g.size() < h.size() || j < i)) dominated = true;
    }
    if (!dominated) maximal.push_back(g);
  }
  std::vector<VertexDecl> vertices;
  for (const auto& v : complex.vertices()) {
    bool used = std::any_of(maximal.begin(), maximal.end(),
                            [&](const Simplex& f) { return f.contains(v.id); });
    if (used) vertices.push_back(v);
  }
  return ComplexWithDegrees(std::move(vertices), std::move(maximal));
}

}  // namespace srreal
