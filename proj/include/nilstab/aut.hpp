#pragma once

// Endomorphisms of N_r^c and the extension
//   0 -> Hom(H_1(N^{c-1}), H_2(N^{c-1})) -> Aut(N^c) -> Aut(N^{c-1}) -> 1.

#include "nilstab/matrix.hpp"
#include "nilstab/nilgroup.hpp"

#include <iosfwd>
#include <vector>

namespace nilstab {

/// Endomorphism of N_r^c, given by the images of the generators.
class Endo {
public:
  static Endo identity(unsigned rank, unsigned class_bound);
  /// Throws std::invalid_argument on an empty list, a wrong count, or
  /// images of differing rank/class.
  static Endo from_images(std::vector<GroupElement> images);
  /// x_i -> prod_j x_j^{A(j, i)}, a set-theoretic lift of A to class c.
  static Endo from_matrix(const IntMatrix &a, unsigned class_bound);

  unsigned rank() const { return rank_; }
  unsigned class_bound() const { return class_bound_; }
  const std::vector<GroupElement> &images() const { return images_; }
  const GroupElement &image(unsigned i) const { return images_.at(i); }

  friend bool operator==(const Endo &, const Endo &) = default;

private:
  Endo(unsigned rank, unsigned class_bound, std::vector<GroupElement> images)
      : rank_(rank), class_bound_(class_bound), images_(std::move(images)) {}

  unsigned rank_;
  unsigned class_bound_;
  std::vector<GroupElement> images_;
};

std::ostream &operator<<(std::ostream &os, const Endo &e);

inline Endo endo_from_images(std::vector<GroupElement> images) {
  return Endo::from_images(std::move(images));
}

GroupElement apply(const Endo &e, const GroupElement &g);
/// outer after inner.
Endo compose(const Endo &outer, const Endo &inner);

/// Column i holds the degree-1 exponents of the image of x_i.
IntMatrix abelianization_matrix(const Endo &e);
bool is_automorphism(const Endo &e);
/// Throws std::domain_error("not invertible") unless is_automorphism(e).
Endo invert(const Endo &e);

/// Induced endomorphism of N_r^{c-1}; throws for c = 1.
Endo project(const Endo &e);
/// Same collected images read in class c + 1; throws for non-automorphisms.
Endo lift(const Endo &phi);
/// Images re-embedded in N_{r+1}^c, new generator fixed.
Endo stabilize(const Endo &e);

bool in_projection_kernel(const Endo &e);

/// Element of Hom(Z^r, Lie_r^c): column i is the image of the i-th
/// abelianized generator in the degree-c Lyndon basis.
struct HomMap {
  unsigned rank = 0;
  unsigned class_of_target = 0;
  IntMatrix matrix;

  static HomMap zero(unsigned rank, unsigned class_of_target);
  static HomMap unit(unsigned rank, unsigned class_of_target, std::size_t row, std::size_t col);
  /// Throws std::invalid_argument on dimension mismatch.
  static HomMap from_matrix(unsigned rank, unsigned class_of_target, IntMatrix matrix);

  HomMap operator+(const HomMap &rhs) const;
  friend bool operator==(const HomMap &, const HomMap &) = default;
};

std::size_t hom_map_rows(unsigned rank, unsigned class_of_target);

HomMap flat(const Endo &alpha);
Endo sharp(const HomMap &beta);

/// Left GL_r(Z)-action on Hom(Z^r, Lie^c): beta -> Lie(A) . beta . A^-1.
HomMap hom_gl_action(const IntMatrix &a, const HomMap &beta);

} // namespace nilstab
