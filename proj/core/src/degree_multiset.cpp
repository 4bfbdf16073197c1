#include "srreal/degree_multiset.hpp"

#include <algorithm>
#include <numeric>

#include "srreal/error.hpp"

namespace srreal {

DegreeMultiset::DegreeMultiset(std::initializer_list<int> degrees)
    : DegreeMultiset(std::vector<int>(degrees)) {}

DegreeMultiset::DegreeMultiset(std::vector<int> degrees) : values_(std::move(degrees)) {
  for (int d : values_) {
    if (d < 2 || d % 2 != 0) {
      throw Error(ErrorKind::OddOrNonpositiveDegree, std::to_string(d),
                  "degree " + std::to_string(d) + " is not a positive even integer");
    }
  }
  std::sort(values_.begin(), values_.end());
}

int DegreeMultiset::sum() const { return std::accumulate(values_.begin(), values_.end(), 0); }

std::size_t DegreeMultiset::count(int degree) const {
  auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), degree);
  return static_cast<std::size_t>(hi - lo);
}

DegreeMultiset DegreeMultiset::without_twos() const {
  DegreeMultiset out;
  std::copy_if(values_.begin(), values_.end(), std::back_inserter(out.values_),
               [](int d) { return d != 2; });
  return out;
}

DegreeMultiset DegreeMultiset::with_twos(std::size_t k) const {
  DegreeMultiset out = *this;
  out.values_.insert(out.values_.begin(), k, 2);
  std::sort(out.values_.begin(), out.values_.end());
  return out;
}

bool DegreeMultiset::contains_submultiset(const DegreeMultiset& other) const {
  return std::includes(values_.begin(), values_.end(), other.values_.begin(),
                       other.values_.end());
}

DegreeMultiset DegreeMultiset::minus(const DegreeMultiset& other) const {
  DegreeMultiset out;
  std::set_difference(values_.begin(), values_.end(), other.values_.begin(),
                      other.values_.end(), std::back_inserter(out.values_));
  return out;
}

std::string DegreeMultiset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + "}";
}

}  // namespace srreal
