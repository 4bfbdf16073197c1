#include "srreal/steenrod.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <set>
#include <vector>

#include "overloaded.hpp"
#include "srreal/error.hpp"

namespace srreal {

namespace {

using detail::Overloaded;

bool is_sp_family(std::span<const int> rest) {
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] != 4 * static_cast<int>(j + 1)) return false;
  }
  return !rest.empty();
}

bool is_su_family(std::span<const int> rest) {
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] != 2 * static_cast<int>(j) + 4) return false;
  }
  return !rest.empty();
}

std::vector<int> exceptional_degrees(int n) {
  std::vector<int> out;
  for (int d = 4; d <= (1 << (n + 1)) - 4; d += 4) out.push_back(d);
  out.push_back(1 << n);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> exceptional_index(std::span<const int> rest) {
  if (rest.empty()) return std::nullopt;
  const unsigned top = static_cast<unsigned>(rest.back()) + 4;
  if (!std::has_single_bit(top)) return std::nullopt;
  const int n = std::countr_zero(top) - 1;
  if (n < 3 || n > 28) return std::nullopt;
  auto expected = exceptional_degrees(n);
  if (!std::equal(rest.begin(), rest.end(), expected.begin(), expected.end())) {
    return std::nullopt;
  }
  return n;
}

// Families whose unions make up the table, truncated to degrees <= max_degree.
std::vector<DegreeMultiset> table_families(int max_degree) {
  std::vector<DegreeMultiset> families;
  families.push_back(DegreeMultiset{2});
  for (int n = 2; 2 * n <= max_degree; ++n) {  // {4,6,...,2n}
    std::vector<int> f;
    for (int d = 4; d <= 2 * n; d += 2) f.push_back(d);
    families.emplace_back(std::move(f));
  }
  for (int n = 1; 4 * n <= max_degree; ++n) {  // {4,8,...,4n}
    std::vector<int> f;
    for (int d = 4; d <= 4 * n; d += 4) f.push_back(d);
    families.emplace_back(std::move(f));
  }
  for (int n = 4; 4 * (n - 1) <= max_degree; ++n) {  // {4,8,...,4(n-1),2n}
    std::vector<int> f;
    for (int d = 4; d <= 4 * (n - 1); d += 4) f.push_back(d);
    f.push_back(2 * n);
    families.emplace_back(std::move(f));
  }
  static const std::array<std::vector<int>, 8> kSporadic = {{
      {4, 12},
      {4, 12, 16, 24},
      {4, 10, 12, 16, 18, 24},
      {4, 12, 16, 20, 24, 28, 36},
      {4, 16, 24, 28, 36, 40, 48, 60},
      {4, 16},
      {4, 24},
      {4, 48},
  }};
  for (const auto& f : kSporadic) {
    if (f.back() <= max_degree) families.emplace_back(f);
  }
  return families;
}

bool decompose(const DegreeMultiset& remaining, const std::vector<DegreeMultiset>& families) {
  if (remaining.empty()) return true;
  const int smallest = remaining.values().front();
  for (const auto& f : families) {
    if (f.count(smallest) == 0 || !remaining.contains_submultiset(f)) continue;
    if (decompose(remaining.minus(f), families)) return true;
  }
  return false;
}

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of a modulo m for coprime a, m.
u64 inverse_mod(u64 a, u64 m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

std::string obstruction_kind(const ObstructionReason& reason) {
  return std::visit(Overloaded{
                        [](const ThomasRank&) { return std::string("ThomasRank"); },
                        [](const AdemP3&) { return std::string("AdemP3"); },
                        [](const TableMiss&) { return std::string("TableMiss"); },
                        [](const MultipleDegree4&) { return std::string("MultipleDegree4"); },
                    },
                    reason);
}

std::string describe(const ObstructionReason& reason) {
  return std::visit(
      Overloaded{
          [](const ThomasRank& t) {
            return "ThomasRank target " + std::to_string(t.target_degree) + " source " +
                   std::to_string(t.source_degree) + " dims " + std::to_string(t.dim_source) +
                   "<" + std::to_string(t.dim_target) + " (Sq^" + std::to_string(1 << t.i) +
                   " rank inequality only)";
          },
          [](const AdemP3&) { return std::string("AdemP3 (P^8 = -P^1 P^7 on {4,16})"); },
          [](const TableMiss& m) {
            return std::string(m.in_table ? "TableMiss (odd-n family, excluded by table rule)"
                                          : "TableMiss");
          },
          [](const MultipleDegree4&) {
            return std::string("MultipleDegree4 (more than one degree-4 generator)");
          },
      },
      reason);
}

std::string class_kind(const AdmissibleClass& c) {
  return std::visit(Overloaded{
                        [](const Torus&) { return std::string("Torus"); },
                        [](const SUType&) { return std::string("SUType"); },
                        [](const SpType&) { return std::string("SpType"); },
                        [](const Exceptional&) { return std::string("Exceptional"); },
                        [](const Inadmissible&) { return std::string("Inadmissible"); },
                    },
                    c);
}

std::string describe(const AdmissibleClass& c) {
  return std::visit(
      Overloaded{
          [](const Torus& t) { return "Torus(k2=" + std::to_string(t.k2) + ")"; },
          [](const SUType& t) {
            return "SUType(n=" + std::to_string(t.n) + ", k2=" + std::to_string(t.k2) + ")";
          },
          [](const SpType& t) {
            return "SpType(n=" + std::to_string(t.n) + ", k2=" + std::to_string(t.k2) + ")";
          },
          [](const Exceptional& t) {
            return "Exceptional(n=" + std::to_string(t.n) + ", k2=" + std::to_string(t.k2) +
                   ")";
          },
          [](const Inadmissible& t) { return "Inadmissible(" + describe(t.reason) + ")"; },
      },
      c);
}

bool is_lie_admissible(const AdmissibleClass& c) {
  return std::holds_alternative<Torus>(c) || std::holds_alternative<SUType>(c) ||
         std::holds_alternative<SpType>(c);
}

bool is_steenrod_admissible(const AdmissibleClass& c) {
  return is_lie_admissible(c) || std::holds_alternative<Exceptional>(c);
}

DegreeMultiset multiset_of(const AdmissibleClass& c) {
  return std::visit(
      Overloaded{
          [](const Torus& t) { return DegreeMultiset{}.with_twos(t.k2); },
          [](const SUType& t) {
            std::vector<int> d;
            for (int j = 0; j < t.n; ++j) d.push_back(4 + 2 * j);
            return DegreeMultiset(std::move(d)).with_twos(t.k2);
          },
          [](const SpType& t) {
            std::vector<int> d;
            for (int j = 1; j <= t.n; ++j) d.push_back(4 * j);
            return DegreeMultiset(std::move(d)).with_twos(t.k2);
          },
          [](const Exceptional& t) {
            return DegreeMultiset(exceptional_degrees(t.n)).with_twos(t.k2);
          },
          [](const Inadmissible&) -> DegreeMultiset {
            throw Error(ErrorKind::InvalidArgument, "Inadmissible",
                        "an inadmissible class has no canonical multiset");
          },
      },
      c);
}

AdmissibleClass classify(const DegreeMultiset& ms) {
  const std::size_t k2 = ms.count(2);
  const DegreeMultiset rest = ms.without_twos();
  const auto r = rest.values();
  if (rest.empty()) return Torus{k2};
  // {4} is both BSp(1) and BSU(2); the Sp reading wins.
  if (is_sp_family(r)) return SpType{static_cast<int>(r.size()), k2};
  if (is_su_family(r)) return SUType{static_cast<int>(r.size()), k2};
  if (auto n = exceptional_index(r)) return Exceptional{*n, k2};

  if (rest.count(4) > 1) return Inadmissible{MultipleDegree4{}};
  if (!aguade_table_member(rest)) return Inadmissible{TableMiss{false}};
  if (auto reason = thomas_rank_check(ms)) return Inadmissible{*reason};
  if (auto reason = adem_p3_check(ms)) return Inadmissible{*reason};
  return Inadmissible{TableMiss{true}};
}

std::optional<ObstructionReason> thomas_rank_check(const DegreeMultiset& ms) {
  const std::set<int> distinct(ms.values().begin(), ms.values().end());
  for (int d : distinct) {
    const int i = std::countr_zero(static_cast<unsigned>(d));
    const int odd = d >> i;
    if (i < 1 || odd < 3) continue;
    const int source = d - (1 << i);  // 2^i (odd - 1)
    const std::size_t dim_source = ms.count(source);
    const std::size_t dim_target = ms.count(d);
    if (dim_source < dim_target) return ThomasRank{d, i, source, dim_source, dim_target};
  }
  return std::nullopt;
}

std::optional<ObstructionReason> adem_p3_check(const DegreeMultiset& ms) {
  if (ms.without_twos() == DegreeMultiset{4, 16}) return AdemP3{};
  return std::nullopt;
}

bool aguade_table_member(const DegreeMultiset& ms) {
  return decompose(ms, table_families(ms.max()));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t dirichlet_prime(std::span<const std::uint64_t> extra_primes, std::uint64_t bound) {
  constexpr u64 kMax = std::numeric_limits<u64>::max();
  std::vector<std::pair<u64, u64>> congruences = {{7, 16}, {2, 3}, {3, 5}, {3, 7}};
  std::set<u64> seen;
  for (u64 p : extra_primes) {
    if (p <= 7 || !is_prime(p) || !seen.insert(p).second) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(p),
                  "extra primes must be distinct primes greater than 7, got " +
                      std::to_string(p));
    }
    congruences.emplace_back(2, p);
  }

  u64 residue = 0, modulus = 1;
  for (auto [r, m] : congruences) {
    if (modulus > kMax / m) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(m),
                  "combined modulus exceeds 64 bits");
    }
    const u64 diff = (r % m + m - residue % m) % m;
    const u64 k = mul_mod(diff, inverse_mod(modulus % m, m), m);
    residue += modulus * k;
    modulus *= m;
  }

  u64 candidate = residue;
  if (candidate <= bound) {
    const u64 steps = (bound - residue) / modulus + 1;
    if (steps > (kMax - residue) / modulus) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(bound), "search leaves 64 bits");
    }
    candidate = residue + steps * modulus;
  }
  while (!is_prime(candidate)) {
    if (candidate > kMax - modulus) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(bound), "search leaves 64 bits");
    }
    candidate += modulus;
  }
  return candidate;
}

}  // namespace srreal
