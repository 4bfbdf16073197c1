#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srreal/complex.hpp"
#include "srreal/diagram.hpp"
#include "srreal/sr_ring.hpp"

namespace srreal {

// One degree of the gluing identity
//   dim SR(K_j) = dim SR(K_{j-1}) + dim Z[sigma_j] - dim SR(K_{j-1} ∩ sigma_j).
struct RecurrenceEntry {
  int degree = 0;
  BigInt union_dim;
  BigInt previous_dim;
  BigInt facet_dim;
  BigInt intersection_dim;

  BigInt pieces_dim() const { return previous_dim + facet_dim; }
  bool holds() const { return union_dim == pieces_dim() - intersection_dim; }
};

struct RecurrenceStep {
  std::size_t step = 0;  // 1-based
  Simplex facet;
  std::vector<RecurrenceEntry> entries;
};

struct LabelCheck {
  Simplex simplex;
  bool ok = true;
  std::string detail;
};

struct EdgeCheck {
  Simplex from;
  Simplex to;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  int max_degree = 0;
  bool structure_ok = true;
  std::string structure_detail;
  std::vector<RecurrenceStep> steps;
  std::vector<LabelCheck> labels;
  std::vector<EdgeCheck> edges;
  std::vector<std::string> functoriality_violations;
  bool passed = true;
  std::optional<std::string> first_discrepancy;
};

// Adds facets in input order and checks the gluing identity in every even degree <= D.
// The first step glues onto the empty complex (all terms but the facet are zero); later
// intersections always contain the empty face and so contribute 1 in degree 0.
VerificationReport pushout_recurrence_check(const ComplexWithDegrees& complex, int max_degree);

// dim SR(K1)^d + dim SR(K2)^d - dim SR(K1 ∩ K2)^d. Throws DegreeMismatch if a shared
// vertex has different degrees.
BigInt kernel_dim(const ComplexWithDegrees& first, const ComplexWithDegrees& second, int degree);

// Checks node labels against Z[sigma], edge maps against the SR projections, the
// structure against P_max, functoriality along chains, and the gluing recurrence.
VerificationReport verify_construction(const ComplexWithDegrees& complex,
                                       const ColimitDiagram& diagram, int max_degree);

// Enumerates exponent vectors directly; independent of sr_hilbert.
HilbertFunction brute_oracle_hilbert(const ComplexWithDegrees& complex, int max_degree);

// Degree-by-step table of the recurrence followed by the label and edge results.
std::string render_text(const VerificationReport& report);

}  // namespace srreal
