#include "nilstab/random.hpp"

#include "nilstab/stability.hpp"

namespace nilstab {

long random_int(Rng &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

namespace {

long random_nonzero(Rng &rng, long max_abs) {
  long v = random_int(rng, 1, max_abs);
  return random_int(rng, 0, 1) ? v : -v;
}

bool coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

GroupElement random_element(Rng &rng, unsigned r, unsigned c, long max_abs, double density) {
  GroupElement::Exponents exps;
  for (unsigned n = 1; n <= c; ++n)
    for (const auto &w : lyndon_words(r, n))
      if (coin(rng, density))
        exps.emplace(w, random_nonzero(rng, max_abs));
  return GroupElement::from_exponents(r, c, exps);
}

LieElement random_lie_element(Rng &rng, unsigned r, unsigned c, long max_abs, double density) {
  LieElement::Terms terms;
  for (unsigned n = 1; n <= c; ++n)
    for (const auto &w : lyndon_words(r, n))
      if (coin(rng, density))
        terms.emplace(w, random_nonzero(rng, max_abs));
  return LieElement::from_terms(r, c, terms);
}

LieElement random_homogeneous_lie(Rng &rng, unsigned r, unsigned c, unsigned degree,
                                  long max_abs) {
  LieElement::Terms terms;
  for (const auto &w : lyndon_words(r, degree))
    terms.emplace(w, random_int(rng, -max_abs, max_abs));
  return LieElement::from_terms(r, c, terms);
}

IntMatrix random_gl_matrix(Rng &rng, unsigned r, unsigned steps) {
  IntMatrix a = IntMatrix::identity(r);
  if (r == 1) {
    for (unsigned s = 0; s < steps; ++s)
      if (coin(rng, 0.5))
        a = sign_flip(1) * a;
    return a;
  }
  for (unsigned s = 0; s < steps; ++s) {
    unsigned i = static_cast<unsigned>(random_int(rng, 0, r - 1));
    unsigned j = static_cast<unsigned>(random_int(rng, 0, r - 2));
    if (j >= i)
      ++j;
    switch (random_int(rng, 0, 3)) {
    case 0:
    case 1:
      a = elementary(r, i, j, coin(rng, 0.5) ? 1 : -1) * a;
      break;
    case 2:
      a = transposition(r, i, j) * a;
      break;
    default:
      a = sign_flip(r, i) * a;
      break;
    }
  }
  return a;
}

IntMatrix random_int_matrix(Rng &rng, std::size_t rows, std::size_t cols, long max_abs,
                            double density) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng, density))
        m(i, j) = random_int(rng, -max_abs, max_abs);
  return m;
}

HomMap random_hom_map(Rng &rng, unsigned r, unsigned c, long max_abs) {
  HomMap h = HomMap::zero(r, c);
  for (std::size_t i = 0; i < h.matrix.rows(); ++i)
    for (std::size_t j = 0; j < h.matrix.cols(); ++j)
      h.matrix(i, j) = random_int(rng, -max_abs, max_abs);
  return h;
}

Endo random_automorphism(Rng &rng, unsigned r, unsigned c, unsigned per_level) {
  const auto gl = gl_generators(r);
  auto lift_to = [c](Endo e) {
    while (e.class_bound() < c)
      e = lift(e);
    return e;
  };
  Endo result = Endo::identity(r, c);
  const auto n_gl = random_int(rng, 1, per_level);
  for (long s = 0; s < n_gl; ++s) {
    const auto &a = gl[static_cast<std::size_t>(random_int(rng, 0, gl.size() - 1))];
    result = compose(result, lift_to(Endo::from_matrix(a, 1)));
  }
  for (unsigned k = 2; k <= c; ++k) {
    const auto n_k = random_int(rng, 0, per_level);
    for (long s = 0; s < n_k; ++s)
      result = compose(result, lift_to(sharp(random_hom_map(rng, r, k, 1))));
  }
  return result;
}

} // namespace nilstab
