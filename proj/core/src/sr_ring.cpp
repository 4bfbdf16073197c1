#include "srreal/sr_ring.hpp"

#include <algorithm>

#include "srreal/error.hpp"

namespace srreal {

namespace {

void require_even_degree(int max_degree) {
  if (max_degree < 0 || max_degree % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(max_degree),
                "truncation degree must be even and nonnegative, got " +
                    std::to_string(max_degree));
  }
}

// Multiplies a truncated series (indexed by degree / 2) by t^g / (1 - t^g).
std::vector<BigInt> times_positive_power_series(const std::vector<BigInt>& series, int g) {
  const std::size_t step = static_cast<std::size_t>(g / 2);
  std::vector<BigInt> out(series.size());
  for (std::size_t k = step; k < out.size(); ++k) out[k] = series[k - step] + out[k - step];
  return out;
}

struct FaceWalker {
  std::vector<int> degrees;                       // by vertex index, ids sorted
  std::vector<std::vector<bool>> facet_members;   // facet -> vertex index -> member
  std::vector<BigInt> total;

  void walk(std::size_t next_vertex, const std::vector<std::size_t>& candidates,
            const std::vector<BigInt>& series) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += series[k];
    for (std::size_t v = next_vertex; v < degrees.size(); ++v) {
      std::vector<std::size_t> narrowed;
      for (std::size_t f : candidates) {
        if (facet_members[f][v]) narrowed.push_back(f);
      }
      if (narrowed.empty()) continue;
      auto extended = times_positive_power_series(series, degrees[v]);
      // Once the minimal degree of the face exceeds D nothing below contributes.
      if (std::all_of(extended.begin(), extended.end(), [](const BigInt& x) { return x == 0; }))
        continue;
      walk(v + 1, narrowed, extended);
    }
  }
};

}  // namespace

Monomial::Monomial(std::initializer_list<std::pair<const std::string, unsigned>> exponents)
    : Monomial(std::map<std::string, unsigned>(exponents)) {}

Monomial::Monomial(std::map<std::string, unsigned> exponents) : exponents_(std::move(exponents)) {
  std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
}

Simplex Monomial::support() const {
  std::vector<std::string> ids;
  for (const auto& [id, e] : exponents_) ids.push_back(id);
  return Simplex(std::move(ids));
}

int Monomial::degree(const ComplexWithDegrees& complex) const {
  int d = 0;
  for (const auto& [id, e] : exponents_) d += static_cast<int>(e) * complex.degree(id);
  return d;
}

HilbertFunction::HilbertFunction(int max_degree) : max_degree_(max_degree) {
  require_even_degree(max_degree);
  dims_.assign(static_cast<std::size_t>(max_degree / 2 + 1), BigInt(0));
}

HilbertFunction::HilbertFunction(int max_degree, std::vector<BigInt> even_dims)
    : max_degree_(max_degree), dims_(std::move(even_dims)) {
  require_even_degree(max_degree);
  if (dims_.size() != static_cast<std::size_t>(max_degree / 2 + 1)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(dims_.size()),
                "expected one dimension per even degree up to " + std::to_string(max_degree));
  }
}

BigInt HilbertFunction::at(int degree) const {
  if (degree < 0 || degree > max_degree_) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(degree),
                "degree " + std::to_string(degree) + " outside truncation range");
  }
  if (degree % 2 != 0) return 0;
  return dims_[static_cast<std::size_t>(degree / 2)];
}

BigInt& HilbertFunction::mutable_at(int even_degree) {
  if (even_degree < 0 || even_degree > max_degree_ || even_degree % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(even_degree),
                "degree " + std::to_string(even_degree) + " is not a stored even degree");
  }
  return dims_[static_cast<std::size_t>(even_degree / 2)];
}

std::optional<int> HilbertFunction::first_difference(const HilbertFunction& other) const {
  const std::size_t n = std::min(dims_.size(), other.dims_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (dims_[k] != other.dims_[k]) return static_cast<int>(2 * k);
  }
  return std::nullopt;
}

bool monomial_is_zero(const ComplexWithDegrees& complex, const Monomial& m) {
  return !is_face(complex, m.support());
}

HilbertFunction sr_hilbert(const ComplexWithDegrees& complex, int max_degree) {
  require_even_degree(max_degree);
  FaceWalker walker;
  const auto ids = complex.sorted_ids();
  for (const auto& id : ids) walker.degrees.push_back(complex.degree(id));
  for (const auto& f : complex.facets()) {
    std::vector<bool> members(ids.size());
    for (std::size_t v = 0; v < ids.size(); ++v) members[v] = f.contains(ids[v]);
    walker.facet_members.push_back(std::move(members));
  }
  const std::size_t len = static_cast<std::size_t>(max_degree / 2 + 1);
  walker.total.assign(len, BigInt(0));

  std::vector<BigInt> unit(len, BigInt(0));
  unit[0] = 1;
  std::vector<std::size_t> all(walker.facet_members.size());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;
  walker.walk(0, all, unit);
  return HilbertFunction(max_degree, std::move(walker.total));
}

HilbertFunction free_hilbert(const DegreeMultiset& generators, int max_degree) {
  require_even_degree(max_degree);
  std::vector<BigInt> series(static_cast<std::size_t>(max_degree / 2 + 1), BigInt(0));
  series[0] = 1;
  for (int g : generators.values()) {
    const std::size_t step = static_cast<std::size_t>(g / 2);
    for (std::size_t k = step; k < series.size(); ++k) series[k] += series[k - step];
  }
  return HilbertFunction(max_degree, std::move(series));
}

DegreeMultiset restrict_to_simplex(const ComplexWithDegrees& complex, const Simplex& s) {
  return degree_multiset(complex, s);
}

}  // namespace srreal
