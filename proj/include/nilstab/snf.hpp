#pragma once

#include "nilstab/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nilstab {

/// U * A * V = D, D diagonal with d_1 | d_2 | ... and d_i >= 0; U, V unimodular.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

/// Pivot rule: least nonzero absolute value in the remaining block, ties broken
/// by first position in row-major order; columns cleared, then rows.
SNFResult snf(const IntMatrix &a);
/// Diagonal only, without tracking U and V.
std::vector<Integer> smith_diagonal(const IntMatrix &a);

/// Finitely generated abelian group Z^free_rank + sum Z/d_i, d_1 | d_2 | ...
struct FinAbPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  static FinAbPresentation free(std::size_t rank) { return {rank, {}}; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// "0", "Z", "Z^2 + Z/2 + Z/6", ...
  std::string to_string() const;

  friend bool operator==(const FinAbPresentation &, const FinAbPresentation &) = default;
};

std::ostream &operator<<(std::ostream &os, const FinAbPresentation &p);

/// Z^k / (column span of a), k = a.rows().
FinAbPresentation cokernel(const IntMatrix &a);
FinAbPresentation cokernel(const IntMatrix &a, std::size_t k);

/// Basis (as columns) of the lattice spanned by the columns of a, in column
/// echelon form; k x rank.
IntMatrix column_lattice_basis(const IntMatrix &a);
/// Basis (as columns) of the integer kernel {x : a x = 0}.
IntMatrix integer_kernel(const IntMatrix &a);
/// Whether v lies in the column span of a over Z.
bool lattice_contains(const IntMatrix &a, const std::vector<Integer> &v);

} // namespace nilstab
