#include "srreal/realizability.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "overloaded.hpp"
#include "srreal/error.hpp"

namespace srreal {

using detail::Overloaded;

namespace {

// Whether P (degrees >= 4 already in a block) can grow into an SU or Sp family using
// only degrees from R (vertices of the same simplex not yet assigned).
bool completable(const DegreeMultiset& placed, const DegreeMultiset& available) {
  if (placed.empty()) return true;
  const int top = std::max(placed.max(), available.max());
  auto fits = [&](const DegreeMultiset& family) {
    return family.contains_submultiset(placed) &&
           available.contains_submultiset(family.minus(placed));
  };
  std::vector<int> su, sp;
  for (int d = 4; d <= top; d += 2) {
    su.push_back(d);
    if (d >= placed.max() && fits(DegreeMultiset(su))) return true;
  }
  for (int d = 4; d <= top; d += 4) {
    sp.push_back(d);
    if (d >= placed.max() && fits(DegreeMultiset(sp))) return true;
  }
  return false;
}

class PartitionSearch {
 public:
  explicit PartitionSearch(const ComplexWithDegrees& complex)
      : complex_(complex), poset_(pmax(complex)) {
    for (const auto& id : complex.sorted_ids()) {
      if (complex.degree(id) == 2) {
        twos_.push_back(id);
      } else {
        high_.push_back(id);
      }
    }
    members_.resize(high_.size());
    for (std::size_t s = 0; s < poset_.size(); ++s) {
      for (std::size_t v = 0; v < high_.size(); ++v) {
        if (poset_[s].contains(high_[v])) members_[v].push_back(s);
      }
    }
    assignment_.assign(high_.size(), -1);
  }

  std::optional<Partition> run() {
    if (!assign(0, -1)) return std::nullopt;
    return result_;
  }

 private:
  bool assign(std::size_t v, int max_block) {
    if (v == high_.size()) {
      Partition candidate = build();
      if (!partition_is_admissible(complex_, candidate)) return false;
      result_ = std::move(candidate);
      return true;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      assignment_[v] = b;
      if (viable(v) && assign(v + 1, std::max(max_block, b))) return true;
    }
    assignment_[v] = -1;
    return false;
  }

  // Checks every simplex containing the vertex just placed.
  bool viable(std::size_t v) const {
    const int block = assignment_[v];
    for (std::size_t s : members_[v]) {
      std::vector<int> placed, available;
      for (std::size_t u = 0; u < high_.size(); ++u) {
        if (!poset_[s].contains(high_[u])) continue;
        if (assignment_[u] == block) {
          placed.push_back(complex_.degree(high_[u]));
        } else if (assignment_[u] < 0) {
          available.push_back(complex_.degree(high_[u]));
        }
      }
      if (!completable(DegreeMultiset(placed), DegreeMultiset(available))) return false;
    }
    return true;
  }

  Partition build() const {
    int blocks = high_.empty() ? (twos_.empty() ? 0 : 1) : 1;
    for (int b : assignment_) blocks = std::max(blocks, b + 1);
    Partition p;
    p.blocks.resize(static_cast<std::size_t>(blocks));
    for (const auto& id : twos_) p.blocks[0].push_back(id);
    for (std::size_t v = 0; v < high_.size(); ++v) {
      p.blocks[static_cast<std::size_t>(assignment_[v])].push_back(high_[v]);
    }
    for (auto& block : p.blocks) std::sort(block.begin(), block.end());
    return p;
  }

  const ComplexWithDegrees& complex_;
  MaxIntersectionPoset poset_;
  std::vector<std::string> twos_;
  std::vector<std::string> high_;
  std::vector<std::vector<std::size_t>> members_;  // high vertex -> poset elements
  std::vector<int> assignment_;
  Partition result_;
};

Simplex block_part(const Simplex& s, const std::vector<std::string>& block) {
  std::vector<std::string> ids;
  for (const auto& id : s.ids()) {
    if (std::binary_search(block.begin(), block.end(), id)) ids.push_back(id);
  }
  return Simplex(std::move(ids));
}

FailureReason failure_from(const AdmissibleClass& c) {
  if (const auto* bad = std::get_if<Inadmissible>(&c)) return bad->reason;
  return FamilyMismatch{c};
}

}  // namespace

std::optional<std::size_t> Partition::block_of(std::string_view id) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), id, std::less<>{})) return b;
  }
  return std::nullopt;
}

void validate_partition(const ComplexWithDegrees& complex, const Partition& partition) {
  std::set<std::string, std::less<>> seen;
  for (const auto& block : partition.blocks) {
    if (block.empty()) {
      throw Error(ErrorKind::InvalidArgument, "[]", "partition blocks must be nonempty");
    }
    if (!std::is_sorted(block.begin(), block.end())) {
      throw Error(ErrorKind::InvalidArgument, block.front(), "partition blocks must be sorted");
    }
    for (const auto& id : block) {
      if (!complex.has_vertex(id)) {
        throw Error(ErrorKind::UnknownVertex, id, "partition uses undeclared vertex '" + id + "'");
      }
      if (!seen.insert(id).second) {
        throw Error(ErrorKind::InvalidArgument, id, "vertex '" + id + "' in two blocks");
      }
    }
  }
  for (const auto& v : complex.vertices()) {
    if (!seen.contains(v.id)) {
      throw Error(ErrorKind::InvalidArgument, v.id, "vertex '" + v.id + "' in no block");
    }
  }
}

std::string verdict_kind(const Verdict& v) {
  return std::visit(Overloaded{
                        [](const Realizable&) { return std::string("Realizable"); },
                        [](const NotRealizable&) { return std::string("NotRealizable"); },
                        [](const HypothesisViolated&) { return std::string("HypothesisViolated"); },
                        [](const SufficientOnly&) { return std::string("SufficientOnly"); },
                        [](const Unknown&) { return std::string("Unknown"); },
                    },
                    v);
}

std::string describe(const FailureReason& reason) {
  return std::visit(Overloaded{
                        [](const ObstructionReason& r) { return describe(r); },
                        [](const FamilyMismatch& m) {
                          return "FamilyMismatch " + describe(m.found) +
                                 " is not a torus, SU or Sp family";
                        },
                    },
                    reason);
}

std::optional<HypothesisViolated> check_main_hypothesis(const ComplexWithDegrees& complex) {
  const auto ids = complex.sorted_ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    const int d = complex.degree(ids[a]);
    if (d < 4 || !std::has_single_bit(static_cast<unsigned>(d))) continue;
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (complex.degree(ids[b]) != d) continue;
      if (is_face(complex, Simplex{ids[a], ids[b]})) {
        return HypothesisViolated{ids[a], ids[b], std::countr_zero(static_cast<unsigned>(d))};
      }
    }
  }
  return std::nullopt;
}

Verdict decide_main(const ComplexWithDegrees& complex) {
  if (auto violation = check_main_hypothesis(complex)) return *violation;
  Realizable ok;
  const auto ids = complex.sorted_ids();
  if (!ids.empty()) ok.partition.blocks.push_back(ids);
  const MaxIntersectionPoset poset = pmax(complex);
  for (const auto& sigma : poset.elements()) {
    DegreeMultiset ms = degree_multiset(complex, sigma);
    AdmissibleClass c = classify(ms);
    if (!is_lie_admissible(c)) return NotRealizable{sigma, std::move(ms), failure_from(c)};
    ok.per_sigma.push_back({sigma, std::move(c)});
  }
  return ok;
}

NecessaryOutcome necessary_condition(const ComplexWithDegrees& complex) {
  const auto ids = complex.sorted_ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (complex.degree(ids[a]) != 4) continue;
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (complex.degree(ids[b]) == 4 && is_face(complex, Simplex{ids[a], ids[b]})) {
        return HypothesisViolated{ids[a], ids[b], 2};
      }
    }
  }
  const MaxIntersectionPoset poset = pmax(complex);
  for (const auto& sigma : poset.elements()) {
    AdmissibleClass c = classify(degree_multiset(complex, sigma));
    if (!is_steenrod_admissible(c)) return ConditionFails{sigma, std::move(c)};
  }
  return ConditionHolds{};
}

std::optional<Partition> find_partition(const ComplexWithDegrees& complex) {
  return PartitionSearch(complex).run();
}

bool partition_is_admissible(const ComplexWithDegrees& complex, const Partition& partition) {
  const MaxIntersectionPoset poset = pmax(complex);
  for (const auto& sigma : poset.elements()) {
    for (const auto& block : partition.blocks) {
      if (!is_lie_admissible(classify(degree_multiset(complex, block_part(sigma, block))))) {
        return false;
      }
    }
  }
  return true;
}

Verdict full_report(const ComplexWithDegrees& complex) {
  Verdict main = decide_main(complex);
  if (std::holds_alternative<Realizable>(main)) return main;

  if (auto partition = find_partition(complex)) return SufficientOnly{std::move(*partition)};

  NecessaryOutcome necessary = necessary_condition(complex);
  if (const auto* fails = std::get_if<ConditionFails>(&necessary)) {
    if (std::holds_alternative<NotRealizable>(main)) return main;
    return NotRealizable{fails->witness, degree_multiset(complex, fails->witness),
                         failure_from(fails->found)};
  }
  if (const auto* pair = std::get_if<HypothesisViolated>(&necessary)) return *pair;
  if (std::holds_alternative<NotRealizable>(main)) return main;
  return Unknown{"the necessary condition holds but no vertex partition into torus, SU "
                 "and Sp families exists"};
}

}  // namespace srreal
