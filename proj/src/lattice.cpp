#include "hassett/lattice.hpp"

#include "hassett/conditions.hpp"
#include "hassett/errors.hpp"

namespace hassett::lattice {

namespace {

// Determinant of the leading k x k block, Bareiss fraction-free elimination
// with row pivoting. Exact for any integer matrix.
cpp_int leading_minor(const GramMatrix& g, int k) {
  std::vector<std::vector<cpp_int>> m(k, std::vector<cpp_int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = g.entries[i][j];

  cpp_int prev = 1;
  int sign = 1;
  for (int col = 0; col < k - 1; ++col) {
    if (m[col][col] == 0) {
      int pivot = -1;
      for (int row = col + 1; row < k; ++row) {
        if (m[row][col] != 0) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(m[col], m[pivot]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        m[row][j] = (m[col][col] * m[row][j] - m[row][col] * m[col][j]) / prev;
      }
      m[row][col] = 0;
    }
    prev = m[col][col];
  }
  return sign * m[k - 1][k - 1];
}

}  // namespace

bool GramMatrix::symmetric() const {
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n) return false;
    for (int j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  }
  return true;
}

cpp_int det(const GramMatrix& g) {
  if (g.rank() == 0) return 1;
  return leading_minor(g, g.rank());
}

bool is_positive_definite(const GramMatrix& g) {
  if (!g.symmetric()) throw invalid_input("matrix is not symmetric");
  for (int k = 1; k <= g.rank(); ++k) {
    if (leading_minor(g, k) <= 0) return false;
  }
  return g.rank() > 0;
}

Labelling labelling_for(std::int64_t d) {
  if (!conditions::is_admissible(d)) throw not_admissible(d);
  GramMatrix gram;
  if (d % 6 == 0) {
    gram.entries = {{3, 0}, {0, d / 3}};
  } else {
    gram.entries = {{3, 1}, {1, (d + 1) / 3}};
  }
  return Labelling{gram, d};
}

std::int64_t sublattice_discriminant(const GramMatrix& g, int i) {
  if (g.rank() < 2) throw index_out_of_range("matrix rank must be >= 2");
  if (i < 1 || i >= g.rank())
    throw index_out_of_range("index " + std::to_string(i) +
                             " outside [1, " + std::to_string(g.rank()) + ")");
  return g.entries[0][0] * g.entries[i][i] - g.entries[0][i] * g.entries[i][0];
}

GramMatrix simultaneous_gram(const std::vector<std::int64_t>& discs) {
  if (discs.empty()) throw invalid_input("need at least one discriminant");
  for (std::int64_t d : discs) {
    if (!conditions::is_admissible(d)) throw not_admissible(d);
  }
  int n = static_cast<int>(discs.size()) + 1;
  GramMatrix g;
  g.entries.assign(n, std::vector<std::int64_t>(n, 0));
  g.entries[0][0] = 3;
  for (int i = 1; i < n; ++i) {
    std::int64_t d = discs[i - 1];
    if (d % 6 == 0) {
      g.entries[i][i] = d / 3;
    } else {
      g.entries[0][i] = g.entries[i][0] = 1;
      g.entries[i][i] = (d + 1) / 3;
    }
  }
  for (int i = 1; i < n; ++i) {
    if (sublattice_discriminant(g, i) != discs[i - 1])
      throw error("internal", "arrow construction missed a discriminant");
  }
  if (!is_positive_definite(g))
    throw positivity_failure(
        "arrow realization of the given discriminants is not positive definite");
  return g;
}

}  // namespace hassett::lattice
