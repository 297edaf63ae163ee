#pragma once

// Seeded random inputs for the property suites.

#include "nilstab/aut.hpp"
#include "nilstab/lie.hpp"
#include "nilstab/nilgroup.hpp"

#include <random>

namespace nilstab {

using Rng = std::mt19937_64;

long random_int(Rng &rng, long lo, long hi);

/// Each basis exponent is nonzero with probability `density`, drawn from
/// [-max_abs, max_abs] \ {0}.
GroupElement random_element(Rng &rng, unsigned r, unsigned c, long max_abs = 3,
                            double density = 0.5);
LieElement random_lie_element(Rng &rng, unsigned r, unsigned c, long max_abs = 3,
                              double density = 0.5);
LieElement random_homogeneous_lie(Rng &rng, unsigned r, unsigned c, unsigned degree,
                                  long max_abs = 3);
/// Product of `steps` random generators of GL_r(Z) (elementary matrices with
/// factor +-1, transpositions, sign flips).
IntMatrix random_gl_matrix(Rng &rng, unsigned r, unsigned steps = 6);
IntMatrix random_int_matrix(Rng &rng, std::size_t rows, std::size_t cols, long max_abs = 3,
                            double density = 1.0);
HomMap random_hom_map(Rng &rng, unsigned r, unsigned c, long max_abs = 3);
/// Composite of up to `per_level` lifted GL generators and up to `per_level`
/// kernel elements sharp(beta) at each class level 2..c.
Endo random_automorphism(Rng &rng, unsigned r, unsigned c, unsigned per_level = 5);

} // namespace nilstab
