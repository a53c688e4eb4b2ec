#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hassett::lattice {

using boost::multiprecision::cpp_int;

// Symmetric integer matrix housing an intersection form. Entry (0,0) is the
// self-intersection of h^2, which is 3 for a cubic fourfold.
struct GramMatrix {
  std::vector<std::vector<std::int64_t>> entries;  // row-major, n x n

  int rank() const { return static_cast<int>(entries.size()); }
  bool symmetric() const;

  bool operator==(const GramMatrix&) const = default;
};

// Rank-2 form containing h^2, with discriminant = det > 0.
struct Labelling {
  GramMatrix gram;
  std::int64_t discriminant = 0;

  bool operator==(const Labelling&) const = default;
};

// Exact determinant (fraction-free elimination over arbitrary precision).
cpp_int det(const GramMatrix& g);

// Sylvester criterion: all leading principal minors strictly positive.
// Throws invalid_input on asymmetric input.
bool is_positive_definite(const GramMatrix& g);

// Standard rank-2 representative of discriminant d:
//   d = 0 mod 6  ->  [[3,0],[0,d/3]]
//   d = 2 mod 6  ->  [[3,1],[1,(d+1)/3]]
// Throws not_admissible otherwise.
Labelling labelling_for(std::int64_t d);

// Determinant of the 2x2 submatrix on rows/columns {0, i}; 1 <= i < rank.
std::int64_t sublattice_discriminant(const GramMatrix& g, int i);

// Arrow-shaped rank (len+1) realization with prescribed labelling
// discriminants: sublattice_discriminant at each i equals discs[i-1].
// Throws not_admissible on a bad disc, positivity_failure when the arrow
// construction is not positive definite.
GramMatrix simultaneous_gram(const std::vector<std::int64_t>& discs);

}  // namespace hassett::lattice
