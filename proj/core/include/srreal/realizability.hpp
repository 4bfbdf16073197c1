#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "srreal/complex.hpp"
#include "srreal/steenrod.hpp"

namespace srreal {

// Disjoint, nonempty, sorted vertex-id blocks covering the vertex set.
struct Partition {
  std::vector<std::vector<std::string>> blocks;

  // Index of the block holding `id`, if any.
  std::optional<std::size_t> block_of(std::string_view id) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws InvalidArgument if the blocks are not a partition of the complex's vertices.
void validate_partition(const ComplexWithDegrees& complex, const Partition& partition);

struct SigmaClass {
  Simplex simplex;
  AdmissibleClass cls;
  friend bool operator==(const SigmaClass&, const SigmaClass&) = default;
};

// Degrees of a face agree with an admissible family, but one the criterion excludes
// (Exceptional under the Lie-factor criterion).
struct FamilyMismatch {
  AdmissibleClass found;
  friend bool operator==(const FamilyMismatch&, const FamilyMismatch&) = default;
};
using FailureReason = std::variant<ObstructionReason, FamilyMismatch>;

struct Realizable {
  Partition partition;
  std::vector<SigmaClass> per_sigma;
  friend bool operator==(const Realizable&, const Realizable&) = default;
};
struct NotRealizable {
  Simplex witness;
  DegreeMultiset multiset;
  FailureReason reason;
  friend bool operator==(const NotRealizable&, const NotRealizable&) = default;
};
// Two distinct vertices x, y with degree 2^exponent (exponent >= 2) and xy != 0.
struct HypothesisViolated {
  std::string x;
  std::string y;
  int exponent = 0;
  int degree() const { return 1 << exponent; }
  friend bool operator==(const HypothesisViolated&, const HypothesisViolated&) = default;
};
// A vertex partition makes the diagram construction go through, but the main
// criterion does not apply.
struct SufficientOnly {
  Partition partition;
  friend bool operator==(const SufficientOnly&, const SufficientOnly&) = default;
};
// Neither the sufficient nor the necessary criterion settles the input.
struct Unknown {
  std::string note;
  friend bool operator==(const Unknown&, const Unknown&) = default;
};

using Verdict =
    std::variant<Realizable, NotRealizable, HypothesisViolated, SufficientOnly, Unknown>;

std::string verdict_kind(const Verdict& v);
std::string describe(const FailureReason& reason);

// First pair (lexicographic) of distinct vertices of equal degree 2^i, i >= 2, that span
// a face.
std::optional<HypothesisViolated> check_main_hypothesis(const ComplexWithDegrees& complex);

// Realizable iff every intersection of facets carries a torus, SU or Sp family.
Verdict decide_main(const ComplexWithDegrees& complex);

struct ConditionHolds {
  friend bool operator==(const ConditionHolds&, const ConditionHolds&) = default;
};
struct ConditionFails {
  Simplex witness;
  AdmissibleClass found;
  friend bool operator==(const ConditionFails&, const ConditionFails&) = default;
};
using NecessaryOutcome = std::variant<ConditionHolds, ConditionFails, HypothesisViolated>;

// Every element of P_max must carry a torus, SU, Sp or Exceptional family. Needs no two
// degree-4 vertices on a common face; reports HypothesisViolated otherwise.
NecessaryOutcome necessary_condition(const ComplexWithDegrees& complex);

// Backtracking search for blocks A_i with every sigma ∩ A_i Lie-admissible. Degree-2
// vertices all go to block 0; the others are tried in lexicographic order with block
// indices in first-use order. Returns the first solution found.
std::optional<Partition> find_partition(const ComplexWithDegrees& complex);

// Independent re-check of a partition against every element of P_max.
bool partition_is_admissible(const ComplexWithDegrees& complex, const Partition& partition);

Verdict full_report(const ComplexWithDegrees& complex);

}  // namespace srreal
