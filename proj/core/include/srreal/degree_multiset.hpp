#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srreal {

// Sorted multiset of generator degrees. Entries are even and >= 2.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  DegreeMultiset(std::initializer_list<int> degrees);
  explicit DegreeMultiset(std::vector<int> degrees);

  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int max() const { return values_.empty() ? 0 : values_.back(); }
  int sum() const;

  std::size_t count(int degree) const;
  // Copy with every degree-2 entry removed.
  DegreeMultiset without_twos() const;
  DegreeMultiset with_twos(std::size_t k) const;
  bool contains_submultiset(const DegreeMultiset& other) const;
  DegreeMultiset minus(const DegreeMultiset& other) const;

  // "{4,6,8}"
  std::string to_string() const;

  friend auto operator<=>(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace srreal
