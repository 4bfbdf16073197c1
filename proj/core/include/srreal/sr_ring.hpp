#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srreal/complex.hpp"
#include "srreal/degree_multiset.hpp"

namespace srreal {

// Dimension counts are exact; they outgrow 64 bits quickly on wide complexes.
using BigInt = boost::multiprecision::cpp_int;

// A monomial in the vertex generators. Zero exponents are dropped on construction.
class Monomial {
 public:
  Monomial() = default;  // the constant 1
  Monomial(std::initializer_list<std::pair<const std::string, unsigned>> exponents);
  explicit Monomial(std::map<std::string, unsigned> exponents);

  const std::map<std::string, unsigned>& exponents() const { return exponents_; }
  Simplex support() const;
  // Throws UnknownVertex.
  int degree(const ComplexWithDegrees& complex) const;

 private:
  std::map<std::string, unsigned> exponents_;
};

// Dimensions of the even graded pieces 0, 2, ..., D of a graded ring.
class HilbertFunction {
 public:
  // Throws InvalidArgument unless D is even and nonnegative. All dims start at zero.
  explicit HilbertFunction(int max_degree);
  HilbertFunction(int max_degree, std::vector<BigInt> even_dims);

  int max_degree() const { return max_degree_; }
  // Zero for odd degrees; throws InvalidArgument outside [0, D].
  BigInt at(int degree) const;
  BigInt& mutable_at(int even_degree);
  // Entry k is the dimension in degree 2k.
  std::span<const BigInt> even_dims() const { return dims_; }

  // Lowest degree where the two functions disagree on their common range.
  std::optional<int> first_difference(const HilbertFunction& other) const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  int max_degree_ = 0;
  std::vector<BigInt> dims_;
};

// Throws UnknownVertex.
bool monomial_is_zero(const ComplexWithDegrees& complex, const Monomial& m);

// Sums, over the faces of the complex, the number of monomials whose support is exactly
// that face.
HilbertFunction sr_hilbert(const ComplexWithDegrees& complex, int max_degree);

// Free polynomial ring on even generators of the given degrees.
HilbertFunction free_hilbert(const DegreeMultiset& generators, int max_degree);

// SR(K)/(V \ s) is the free ring on s; returns its generator degrees. Throws NotAFace.
DegreeMultiset restrict_to_simplex(const ComplexWithDegrees& complex, const Simplex& s);

}  // namespace srreal
