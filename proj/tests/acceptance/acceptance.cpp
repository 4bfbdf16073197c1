// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "srreal/error.hpp"
#include "srreal/json_io.hpp"
#include "srreal/verifier.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace srreal {
namespace {

constexpr std::uint64_t kFamilySeed = 20240917;
constexpr int kFamilySize = 200;
constexpr int kMaxDegree = 40;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + notes_};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string notes_;
};

const std::vector<ComplexWithDegrees>& family() {
  static const auto f = testing::random_family(kFamilySeed, kFamilySize);
  return f;
}

Partition one_block(const ComplexWithDegrees& k) { return Partition{{k.sorted_ids()}}; }

std::multiset<std::string> node_labels(const ColimitDiagram& d) {
  std::multiset<std::string> out;
  for (const auto& n : d.nodes) out.insert(n.label.render());
  return out;
}

// "source -> target" per edge, optionally with the map label.
std::multiset<std::string> arrows(const ColimitDiagram& d, bool with_map) {
  std::multiset<std::string> out;
  for (const auto& e : d.edges) {
    std::string s = d.nodes[e.from].label.render() + " -> " + d.nodes[e.to].label.render();
    if (with_map) s += " (" + e.map.render() + ")";
    out.insert(s);
  }
  return out;
}

std::multiset<std::string> repeat(std::initializer_list<std::pair<std::string, int>> items) {
  std::multiset<std::string> out;
  for (const auto& [s, n] : items)
    for (int i = 0; i < n; ++i) out.insert(s);
  return out;
}

Outcome ac1() {
  Tally t;
  const auto k = testing::ex1();
  const auto v = full_report(k);
  t.expect(std::holds_alternative<Realizable>(v), "verdict " + verdict_kind(v));
  if (const auto* r = std::get_if<Realizable>(&v)) {
    const auto d = build_diagram(k, r->partition);
    t.expect(node_labels(d) == repeat({{"BSU(3)", 1}, {"BSp(1)", 1}, {"BSp(2)", 1}}), "nodes");
    t.expect(arrows(d, true) == repeat({{"BSp(1) -> BSU(3) (iota1 . iota3)", 1},
                                        {"BSp(1) -> BSp(2) (iota2)", 1}}),
             "edges");
  }
  return t.result("BSU(3) <- BSp(1) -> BSp(2)");
}

Outcome ac2() {
  Tally t;
  const auto k2 = testing::ex2(3);
  t.expect(std::holds_alternative<Realizable>(full_report(k2)), "second example verdict");
  const auto d2 = build_diagram(k2, one_block(k2));
  t.expect(node_labels(d2) == repeat({{"BSp(2)", 1}, {"BSU(4)", 3}}), "second example nodes");
  t.expect(arrows(d2, false) == repeat({{"BSp(2) -> BSU(4)", 3}}), "second example edges");

  const auto k3 = testing::ex3();
  t.expect(std::holds_alternative<Realizable>(full_report(k3)), "third example verdict");
  const auto d3 = build_diagram(k3, one_block(k3));
  t.expect(node_labels(d3) ==
               repeat({{"BSp(1)", 1}, {"BSU(3)", 2}, {"BSp(2)", 2}, {"BSU(4)", 4}}),
           "third example nodes");
  t.expect(arrows(d3, false) == repeat({{"BSp(1) -> BSU(3)", 2},
                                        {"BSp(1) -> BSp(2)", 2},
                                        {"BSU(3) -> BSU(4)", 4},
                                        {"BSp(2) -> BSU(4)", 4}}),
           "third example edges");
  t.expect(functoriality_violations(k3, d3).empty(), "third example functoriality");
  return t.result("1+3 nodes / 3 edges; 9 nodes / 12 edges");
}

Outcome ac3() {
  Tally t;
  const auto k = testing::x4_x6_disjoint();
  const auto v = full_report(k);
  const auto* bad = std::get_if<NotRealizable>(&v);
  t.expect(bad != nullptr, "verdict " + verdict_kind(v));
  if (bad) t.expect(bad->witness == Simplex{"x6"}, "witness " + bad->witness.to_string());
  const auto c = classify(degree_multiset(k, {"x6"}));
  const auto* in = std::get_if<Inadmissible>(&c);
  t.expect(in && std::holds_alternative<TableMiss>(in->reason), "{6} -> " + describe(c));

  std::istringstream input(to_json(k).dump());
  std::ostringstream out, err;
  cli::run({"obstruct", "--format", "text"}, input, out, err);
  t.expect(out.str().find("{x6} {6}: TableMiss") != std::string::npos, "obstruct output");
  return t.result("witness {x6}, TableMiss");
}

Outcome ac4() {
  Tally t;
  const std::vector<DegreeMultiset> thomas = {
      {4, 12},
      {4, 12, 16, 24},
      {4, 10, 12, 16, 18, 24},
      {4, 12, 16, 20, 24, 28, 36},
      {4, 16, 24, 28, 36, 40, 48, 60},
      {4, 24},
      {4, 48},
      {4, 8, 12, 16, 20, 12},
  };
  for (const auto& ms : thomas) {
    const auto c = classify(ms);
    const auto* in = std::get_if<Inadmissible>(&c);
    t.expect(in && std::holds_alternative<ThomasRank>(in->reason),
             ms.to_string() + " -> " + describe(c));
  }
  t.expect(classify({4, 16}) == AdmissibleClass{Inadmissible{AdemP3{}}}, "{4,16}");
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> su, sp;
    for (int j = 0; j < n; ++j) {
      su.push_back(4 + 2 * j);
      sp.push_back(4 * (j + 1));
    }
    const auto csu = classify(DegreeMultiset(su));
    t.expect(std::holds_alternative<SUType>(csu) || (n == 1 && std::holds_alternative<SpType>(csu)),
             "SU n=" + std::to_string(n));
    t.expect(classify(DegreeMultiset(sp)) == AdmissibleClass{SpType{n, 0}},
             "Sp n=" + std::to_string(n));
  }
  for (int n = 3; n <= 4; ++n) {
    std::vector<int> e;
    for (int d = 4; d <= (1 << (n + 1)) - 4; d += 4) e.push_back(d);
    e.push_back(1 << n);
    t.expect(classify(DegreeMultiset(e)) == AdmissibleClass{Exceptional{n, 0}},
             "Exceptional n=" + std::to_string(n));
  }
  return t.result("8 ThomasRank, 1 AdemP3, 16 families, 2 Exceptional");
}

Outcome ac5() {
  Tally t;
  for (std::size_t i = 0; i < family().size(); ++i) {
    const auto& k = family()[i];
    const auto fast = sr_hilbert(k, kMaxDegree);
    const auto slow = brute_oracle_hilbert(k, kMaxDegree);
    const auto diff = fast.first_difference(slow);
    t.expect(!diff, "complex " + std::to_string(i) + " degree " + std::to_string(diff.value_or(-1)));
  }
  return t.result("200 complexes, D=40, 0 discrepancies");
}

Outcome ac6() {
  Tally t;
  std::mt19937_64 rng(kFamilySeed + 1);
  for (std::size_t i = 0; i < family().size(); ++i) {
    auto facets = family()[i].facets();
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(facets.begin(), facets.end(), rng);
      const auto r = pushout_recurrence_check(testing::with_facets(family()[i], facets), kMaxDegree);
      t.expect(r.passed, "complex " + std::to_string(i) + ": " + r.first_discrepancy.value_or(""));
    }
  }
  const auto r = pushout_recurrence_check(testing::ex1(), kMaxDegree);
  const auto& e = r.steps.at(1).entries.at(6);
  t.expect(e.degree == 12 && e.union_dim == 3 && e.previous_dim == 2 && e.facet_dim == 2 &&
               e.intersection_dim == 1,
           "first example degree 12");
  return t.result("600 orderings; 3 = 2 + 2 - 1 at degree 12");
}

Outcome ac7() {
  Tally t;
  const auto v = full_report(testing::two_fours_on_edge());
  const auto* s = std::get_if<SufficientOnly>(&v);
  t.expect(s && s->partition.blocks == std::vector<std::vector<std::string>>{{"a"}, {"b"}},
           "{a:4,b:4} -> " + verdict_kind(v));

  // Every complex on up to 4 degree-4 vertices (plus at most one degree-2 vertex) with
  // at most 4 facets.
  int complexes = 0;
  for (int fours = 1; fours <= 4; ++fours) {
    for (int twos = 0; twos <= 1; ++twos) {
      std::vector<VertexDecl> vertices;
      for (int i = 0; i < fours; ++i) vertices.push_back({"a" + std::to_string(i), 4});
      for (int i = 0; i < twos; ++i) vertices.push_back({"t" + std::to_string(i), 2});
      const int nv = fours + twos;
      const std::uint32_t all = (1u << nv) - 1;
      std::vector<std::uint32_t> chosen;
      std::function<void(std::uint32_t)> go = [&](std::uint32_t next) {
        std::uint32_t used = 0;
        for (auto m : chosen) used |= m;
        if (!chosen.empty() && used == all) {
          std::vector<Simplex> facets;
          for (auto m : chosen) {
            std::vector<std::string> ids;
            for (int b = 0; b < nv; ++b)
              if (m >> b & 1) ids.push_back(vertices[b].id);
            facets.emplace_back(std::move(ids));
          }
          const ComplexWithDegrees k(vertices, facets);
          ++complexes;
          const auto p = find_partition(k);
          t.expect(p && partition_is_admissible(k, *p), "no partition for a {2,4} complex");
        }
        if (chosen.size() == 4) return;
        for (std::uint32_t m = next; m <= all; ++m) {
          const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) {
            return (c & m) == c || (c & m) == m;
          });
          if (comparable) continue;
          chosen.push_back(m);
          go(m + 1);
          chosen.pop_back();
        }
      };
      go(1);
    }
  }
  return t.result("SufficientOnly {a},{b}; " + std::to_string(complexes) + " {2,4} complexes");
}

Outcome ac8() {
  Tally t;
  t.expect(dirichlet_prime({}, 0) == 983, "N=0");
  t.expect(dirichlet_prime({}, 1000) == 2663, "N=1000");
  t.expect(testing::naive_dirichlet({}, 0) == 983, "naive N=0");
  t.expect(testing::naive_dirichlet({}, 1000) == 2663, "naive N=1000");
  return t.result("983, 2663");
}

std::vector<FactorLabel> mutations(const FactorLabel& f) {
  std::vector<FactorLabel> out;
  if (const auto* sp = std::get_if<BSp>(&f)) {
    out.push_back(BSp{sp->n + 1});
    if (sp->n > 1) out.push_back(BSp{sp->n - 1});
    out.push_back(BSU{2 * sp->n + (sp->n == 1 ? 1 : 0)});  // BSU(2) would be BSp(1) again
    if (sp->n > 1) out.push_back(BSU{sp->n + 1});
    out.push_back(CPInfPower{sp->n});
  } else if (const auto* su = std::get_if<BSU>(&f)) {
    out.push_back(BSU{su->n + 1});
    if (su->n > 2) out.push_back(BSU{su->n - 1});
    if (su->n > 2) out.push_back(BSp{su->n - 1});
    out.push_back(CPInfPower{su->n - 1});
  } else if (const auto* cp = std::get_if<CPInfPower>(&f)) {
    out.push_back(CPInfPower{cp->k + 1});
    out.push_back(BSp{cp->k});
  }
  out.push_back(Point{});
  return out;
}

Outcome ac9() {
  Tally t;
  auto verify_family = [&](const std::vector<ComplexWithDegrees>& complexes,
                           const std::string& tag) {
    int built = 0;
    for (std::size_t i = 0; i < complexes.size(); ++i) {
      const auto& k = complexes[i];
      const auto v = full_report(k);
      std::optional<Partition> p;
      if (const auto* r = std::get_if<Realizable>(&v)) p = r->partition;
      if (const auto* s = std::get_if<SufficientOnly>(&v)) p = s->partition;
      if (!p) continue;
      ++built;
      const auto r = verify_construction(k, build_diagram(k, *p), kMaxDegree);
      t.expect(r.passed,
               tag + " complex " + std::to_string(i) + ": " + r.first_discrepancy.value_or(""));
    }
    return built;
  };
  const int built = verify_family(family(), "family");
  // Same shape with low degrees, where most inputs are constructible.
  testing::RandomComplexOptions low;
  low.degrees = {2, 2, 4, 4, 6, 8};
  std::mt19937_64 rng(kFamilySeed + 3);
  std::vector<ComplexWithDegrees> extra;
  for (int i = 0; i < kFamilySize; ++i) extra.push_back(testing::random_complex(rng, low));
  const int built_low = verify_family(extra, "low-degree");

  const auto k3 = testing::ex3();
  const auto d3 = build_diagram(k3, one_block(k3));
  int mutants = 0;
  for (std::size_t n = 0; n < d3.nodes.size(); ++n) {
    for (std::size_t f = 0; f < d3.nodes[n].label.blocks[0].factors.size(); ++f) {
      for (const auto& m : mutations(d3.nodes[n].label.blocks[0].factors[f])) {
        auto mutant = d3;
        mutant.nodes[n].label.blocks[0].factors[f] = m;
        ++mutants;
        const auto r = verify_construction(k3, mutant, kMaxDegree);
        t.expect(!r.passed, d3.nodes[n].name + " as " + render(m) + " passed");
      }
    }
  }
  return t.result(std::to_string(built) + " family diagrams + " + std::to_string(built_low) +
                  " low-degree diagrams verified, " + std::to_string(mutants) +
                  " mutants rejected");
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str()};
}

// verify reports the recurrence in input facet order; everything else is canonical.
std::string canonical_verify(const std::string& out) {
  auto j = nlohmann::json::parse(out);
  j.erase("steps");
  j.erase("firstDiscrepancy");
  return j.dump();
}

Outcome ac10() {
  Tally t;
  std::vector<ComplexWithDegrees> inputs = {testing::ex1(), testing::ex2(3), testing::ex3(),
                                            testing::x4_x6_disjoint(),
                                            testing::two_fours_on_edge()};
  for (std::size_t i = 0; i < 40; ++i) inputs.push_back(family()[i]);
  std::mt19937_64 rng(kFamilySeed + 2);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& k = inputs[i];
    const std::string text = to_json(k).dump();
    const auto check = cli_run({"check"}, text);
    const auto construct = cli_run({"construct"}, text);
    const auto dot = cli_run({"construct", "--format", "dot"}, text);
    const auto verify = cli_run({"verify"}, text);
    t.expect(check.out == cli_run({"check"}, text).out, "check repeat " + std::to_string(i));
    t.expect(construct.out == cli_run({"construct"}, text).out,
             "construct repeat " + std::to_string(i));
    t.expect(verify.out == cli_run({"verify"}, text).out, "verify repeat " + std::to_string(i));

    auto facets = k.facets();
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(facets.begin(), facets.end(), rng);
      const std::string shuffled = to_json(testing::with_facets(k, facets)).dump();
      const auto c2 = cli_run({"check"}, shuffled);
      t.expect(c2.out == check.out && c2.code == check.code, "check order " + std::to_string(i));
      t.expect(cli_run({"construct"}, shuffled).out == construct.out,
               "construct order " + std::to_string(i));
      t.expect(cli_run({"construct", "--format", "dot"}, shuffled).out == dot.out,
               "dot order " + std::to_string(i));
      const auto v2 = cli_run({"verify"}, shuffled);
      t.expect(v2.code == verify.code, "verify code order " + std::to_string(i));
      if (verify.code == 0) {
        t.expect(canonical_verify(v2.out) == canonical_verify(verify.out),
                 "verify order " + std::to_string(i));
      }
    }
  }
  return t.result(std::to_string(inputs.size()) + " inputs x 3 facet orders");
}

}  // namespace
}  // namespace srreal

int main() {
  using Criterion = std::pair<const char*, std::function<srreal::Outcome()>>;
  const std::vector<Criterion> criteria = {
      {"AC1 first worked example diagram", srreal::ac1},
      {"AC2 second and third worked example diagrams", srreal::ac2},
      {"AC3 Z[x4,x6]/(x4x6) not realizable", srreal::ac3},
      {"AC4 obstruction suite", srreal::ac4},
      {"AC5 Hilbert oracle equivalence", srreal::ac5},
      {"AC6 pushout recurrence", srreal::ac6},
      {"AC7 partition search", srreal::ac7},
      {"AC8 auxiliary primes", srreal::ac8},
      {"AC9 end-to-end soundness and mutants", srreal::ac9},
      {"AC10 determinism", srreal::ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    srreal::Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %s: %s (%lld ms)\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
