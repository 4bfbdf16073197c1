#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "srreal/degree_multiset.hpp"

namespace srreal {

// Why a degree multiset cannot be the generator degrees of a realizable polynomial ring.

// Sq^{2^i} : QA^{source} -> QA^{target} must be onto, but dim source < dim target.
// Only the rank inequality is checked; the action itself is not determined by degrees.
struct ThomasRank {
  int target_degree = 0;
  int i = 0;
  int source_degree = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  friend bool operator==(const ThomasRank&, const ThomasRank&) = default;
};
// {4,16} plus twos has no unstable action mod 3 (P^8 = -P^1 P^7).
struct AdemP3 {
  friend bool operator==(const AdemP3&, const AdemP3&) = default;
};
// Not an admissible pattern. `in_table` marks multisets that do occur among the
// polynomial families for large primes but are excluded by table rule (the odd-n
// {4,8,...,4(n-1),2n} family).
struct TableMiss {
  bool in_table = false;
  friend bool operator==(const TableMiss&, const TableMiss&) = default;
};
// More than one generator of degree 4: outside the classifier's hypothesis.
struct MultipleDegree4 {
  friend bool operator==(const MultipleDegree4&, const MultipleDegree4&) = default;
};

using ObstructionReason = std::variant<ThomasRank, AdemP3, TableMiss, MultipleDegree4>;

std::string obstruction_kind(const ObstructionReason& reason);
// "ThomasRank target 12 source 8 dims 0<1 (rank inequality only)", "AdemP3", ...
std::string describe(const ObstructionReason& reason);

// {2} x k2
struct Torus {
  std::size_t k2 = 0;
  friend bool operator==(const Torus&, const Torus&) = default;
};
// {4,6,...,2n+2} + {2} x k2; n is the generator count, the space is BSU(n+1).
struct SUType {
  int n = 0;
  std::size_t k2 = 0;
  friend bool operator==(const SUType&, const SUType&) = default;
};
// {4,8,...,4n} + {2} x k2
struct SpType {
  int n = 0;
  std::size_t k2 = 0;
  friend bool operator==(const SpType&, const SpType&) = default;
};
// {4,8,...,2^{n+1}-4} + {2^n} + {2} x k2, n >= 3
struct Exceptional {
  int n = 0;
  std::size_t k2 = 0;
  friend bool operator==(const Exceptional&, const Exceptional&) = default;
};
struct Inadmissible {
  ObstructionReason reason;
  friend bool operator==(const Inadmissible&, const Inadmissible&) = default;
};

using AdmissibleClass = std::variant<Torus, SUType, SpType, Exceptional, Inadmissible>;

std::string class_kind(const AdmissibleClass& c);
// "SUType(n=3, k2=0)", "Inadmissible(ThomasRank ...)"
std::string describe(const AdmissibleClass& c);

// Torus, SUType or SpType: the families a single Lie factor times a torus can carry.
bool is_lie_admissible(const AdmissibleClass& c);
// The Lie-admissible families plus Exceptional.
bool is_steenrod_admissible(const AdmissibleClass& c);

// Regenerates the multiset of an admissible class. Throws InvalidArgument for Inadmissible.
DegreeMultiset multiset_of(const AdmissibleClass& c);

AdmissibleClass classify(const DegreeMultiset& ms);

std::optional<ObstructionReason> thomas_rank_check(const DegreeMultiset& ms);
std::optional<ObstructionReason> adem_p3_check(const DegreeMultiset& ms);

// True iff the multiset is a union of the families that polynomial rings admitting
// unstable actions for all large primes are built from. A degree 2 entry counts as the
// family {2}.
bool aguade_table_member(const DegreeMultiset& ms);

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime p > bound with p = 7 (16), 2 (3), 3 (5), 3 (7) and p = 2 mod every
// extra prime. Extra primes must be distinct primes greater than 7; throws
// InvalidArgument otherwise, or if the search leaves the 64-bit range.
std::uint64_t dirichlet_prime(std::span<const std::uint64_t> extra_primes, std::uint64_t bound);

}  // namespace srreal
