#include "nilstab/aut.hpp"

#include <ostream>
#include <stdexcept>

namespace nilstab {

Endo Endo::identity(unsigned rank, unsigned class_bound) {
  std::vector<GroupElement> images;
  for (unsigned i = 0; i < rank; ++i)
    images.push_back(GroupElement::generator(rank, class_bound, i));
  return Endo(rank, class_bound, std::move(images));
}

Endo Endo::from_images(std::vector<GroupElement> images) {
  if (images.empty())
    throw std::invalid_argument("Endo: no generator images");
  const unsigned r = images.front().rank();
  const unsigned c = images.front().class_bound();
  if (images.size() != r)
    throw std::invalid_argument("Endo: expected " + std::to_string(r) + " images, got " +
                                std::to_string(images.size()));
  for (const auto &g : images)
    if (g.rank() != r || g.class_bound() != c)
      throw std::invalid_argument("Endo: images have differing rank/class");
  return Endo(r, c, std::move(images));
}

Endo Endo::from_matrix(const IntMatrix &a, unsigned class_bound) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("Endo::from_matrix: matrix must be square and nonempty");
  const auto r = static_cast<unsigned>(a.rows());
  std::vector<GroupElement> images;
  for (unsigned i = 0; i < r; ++i) {
    GroupElement::Exponents exps;
    for (unsigned j = 0; j < r; ++j)
      exps.emplace(Word(1, letter(j)), a(j, i));
    images.push_back(GroupElement::from_exponents(r, class_bound, exps));
  }
  return Endo(r, class_bound, std::move(images));
}

std::ostream &operator<<(std::ostream &os, const Endo &e) {
  for (unsigned i = 0; i < e.rank(); ++i) {
    if (i)
      os << ", ";
    os << letter(i) << " -> " << e.image(i);
  }
  return os;
}

namespace {

void check_compatible(const Endo &e, unsigned rank, unsigned class_bound) {
  if (e.rank() != rank || e.class_bound() != class_bound)
    throw std::invalid_argument("endomorphism and element have different rank/class");
}

// Algebra endomorphism X_i -> M(images[i]) - 1.
SeriesSubstitution substitution(const Endo &e) {
  std::vector<TruncatedSeries> y;
  for (const auto &g : e.images())
    y.push_back(magnus_embed(g) - TruncatedSeries::one(e.rank(), e.class_bound()));
  return SeriesSubstitution(std::move(y));
}

} // namespace

GroupElement apply(const Endo &e, const GroupElement &g) {
  check_compatible(e, g.rank(), g.class_bound());
  return magnus_peel(substitution(e)(magnus_embed(g)));
}

Endo compose(const Endo &outer, const Endo &inner) {
  check_compatible(outer, inner.rank(), inner.class_bound());
  SeriesSubstitution sub = substitution(outer);
  std::vector<GroupElement> images;
  for (const auto &g : inner.images())
    images.push_back(magnus_peel(sub(magnus_embed(g))));
  return Endo::from_images(std::move(images));
}

IntMatrix abelianization_matrix(const Endo &e) {
  const unsigned r = e.rank();
  IntMatrix a(r, r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      a(j, i) = e.image(i).exponent(Word(1, letter(j)));
  return a;
}

bool is_automorphism(const Endo &e) {
  return abs(determinant(abelianization_matrix(e))) == 1;
}

Endo invert(const Endo &e) {
  if (!is_automorphism(e))
    throw std::domain_error("not invertible: abelianization determinant is not +-1");
  const unsigned r = e.rank();
  const unsigned c = e.class_bound();
  Endo f = Endo::from_matrix(inverse_unimodular(abelianization_matrix(e)), c);
  // Now e.f is the identity modulo Gamma_2. If e.f = d with d(x_i) = z_i x_i and
  // z_i in Gamma_k, then d'(x_i) = z_i^-1 x_i gives d.d' = id modulo Gamma_{k+1}.
  for (unsigned k = 2; k <= c; ++k) {
    Endo d = compose(e, f);
    if (d == Endo::identity(r, c))
      break;
    std::vector<GroupElement> correction;
    for (unsigned i = 0; i < r; ++i) {
      GroupElement x = GroupElement::generator(r, c, i);
      GroupElement z = mul(d.image(i), inv(x));
      correction.push_back(mul(inv(z), x));
    }
    f = compose(f, Endo::from_images(std::move(correction)));
  }
  if (compose(e, f) != Endo::identity(r, c) || compose(f, e) != Endo::identity(r, c))
    throw std::logic_error("invert: degree-by-degree correction did not converge");
  return f;
}

Endo project(const Endo &e) {
  if (e.class_bound() < 2)
    throw std::invalid_argument("project: class must be at least 2");
  std::vector<GroupElement> images;
  for (const auto &g : e.images())
    images.push_back(truncate(g, e.class_bound() - 1));
  return Endo::from_images(std::move(images));
}

Endo lift(const Endo &phi) {
  if (!is_automorphism(phi))
    throw std::domain_error("lift: not an automorphism");
  std::vector<GroupElement> images;
  for (const auto &g : phi.images())
    images.push_back(reinterpret(g, phi.rank(), phi.class_bound() + 1));
  return Endo::from_images(std::move(images));
}

Endo stabilize(const Endo &e) {
  const unsigned r = e.rank() + 1;
  std::vector<GroupElement> images;
  for (const auto &g : e.images())
    images.push_back(reinterpret(g, r, e.class_bound()));
  images.push_back(GroupElement::generator(r, e.class_bound(), r - 1));
  return Endo::from_images(std::move(images));
}

bool in_projection_kernel(const Endo &e) {
  return e.class_bound() >= 2 && project(e) == Endo::identity(e.rank(), e.class_bound() - 1);
}

std::size_t hom_map_rows(unsigned rank, unsigned class_of_target) {
  return lyndon_words(rank, class_of_target).size();
}

HomMap HomMap::zero(unsigned rank, unsigned class_of_target) {
  return HomMap{rank, class_of_target,
                IntMatrix(hom_map_rows(rank, class_of_target), rank)};
}

HomMap HomMap::unit(unsigned rank, unsigned class_of_target, std::size_t row, std::size_t col) {
  HomMap h = zero(rank, class_of_target);
  h.matrix(row, col) = 1;
  return h;
}

HomMap HomMap::from_matrix(unsigned rank, unsigned class_of_target, IntMatrix matrix) {
  if (matrix.rows() != hom_map_rows(rank, class_of_target) || matrix.cols() != rank)
    throw std::invalid_argument("HomMap: matrix must be witt_rank(r, c) x r");
  return HomMap{rank, class_of_target, std::move(matrix)};
}

HomMap HomMap::operator+(const HomMap &rhs) const {
  if (rank != rhs.rank || class_of_target != rhs.class_of_target)
    throw std::invalid_argument("HomMap: rank/class mismatch");
  return HomMap{rank, class_of_target, matrix + rhs.matrix};
}

HomMap flat(const Endo &alpha) {
  const unsigned r = alpha.rank();
  const unsigned c = alpha.class_bound();
  if (!in_projection_kernel(alpha))
    throw std::domain_error("flat: not in kernel of the projection");
  const auto &words = lyndon_words(r, c);
  HomMap out = HomMap::zero(r, c);
  for (unsigned i = 0; i < r; ++i) {
    GroupElement z = mul(alpha.image(i), inv(GroupElement::generator(r, c, i)));
    if (!center_test(z))
      throw std::logic_error("flat: alpha(x) x^-1 is not central");
    for (std::size_t k = 0; k < words.size(); ++k)
      out.matrix(k, i) = z.exponent(words[k]);
    if (z.exponents().size() != 0 && z.exponents().begin()->first.size() != c)
      throw std::logic_error("flat: alpha(x) x^-1 not supported in the top degree");
  }
  return out;
}

Endo sharp(const HomMap &beta) {
  const unsigned r = beta.rank;
  const unsigned c = beta.class_of_target;
  if (beta.matrix.rows() != hom_map_rows(r, c) || beta.matrix.cols() != r)
    throw std::invalid_argument("sharp: HomMap dimension mismatch");
  const auto &words = lyndon_words(r, c);
  std::vector<GroupElement> images;
  for (unsigned i = 0; i < r; ++i) {
    GroupElement::Exponents exps;
    for (std::size_t k = 0; k < words.size(); ++k)
      exps.emplace(words[k], beta.matrix(k, i));
    GroupElement z = GroupElement::from_exponents(r, c, exps);
    images.push_back(mul(z, GroupElement::generator(r, c, i)));
  }
  return Endo::from_images(std::move(images));
}

HomMap hom_gl_action(const IntMatrix &a, const HomMap &beta) {
  if (a.rows() != beta.rank || a.cols() != beta.rank)
    throw std::invalid_argument("hom_gl_action: matrix size does not match rank");
  IntMatrix lie = lie_layer_matrix(a, beta.class_of_target);
  return HomMap{beta.rank, beta.class_of_target,
                lie * beta.matrix * inverse_unimodular(a)};
}

} // namespace nilstab
