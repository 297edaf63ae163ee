#include "nilstab/aut.hpp"
#include "nilstab/random.hpp"
#include "nilstab/verify.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace nilstab;

namespace {

GroupElement gen(unsigned r, unsigned c, unsigned i, long e = 1) {
  return GroupElement::generator(r, c, i, e);
}

} // namespace

TEST(Endo, ApplyAndCompose) {
  // a -> ab, b -> b at class 2.
  Endo phi = Endo::from_images({gen(2, 2, 0) * gen(2, 2, 1), gen(2, 2, 1)});
  EXPECT_EQ(apply(phi, comm(gen(2, 2, 0), gen(2, 2, 1))), GroupElement::basic(2, 2, "ab"));
  EXPECT_EQ(abelianization_matrix(phi), (IntMatrix{{1, 0}, {1, 1}}));
  EXPECT_EQ(compose(phi, Endo::identity(2, 2)), phi);
  Endo phi2 = compose(phi, phi);
  EXPECT_EQ(phi2.image(0), apply(phi, phi.image(0)));
  EXPECT_EQ(abelianization_matrix(phi2), (IntMatrix{{1, 0}, {2, 1}}));
}

TEST(Endo, InvertExample) {
  Endo phi = Endo::from_images({gen(2, 2, 0) * gen(2, 2, 1), gen(2, 2, 1)});
  Endo psi = invert(phi);
  EXPECT_EQ(psi, Endo::from_images({gen(2, 2, 0) * gen(2, 2, 1, -1), gen(2, 2, 1)}));
  EXPECT_EQ(compose(phi, psi), Endo::identity(2, 2));
  EXPECT_EQ(compose(psi, phi), Endo::identity(2, 2));
}

TEST(Endo, NonAutomorphisms) {
  Endo d = Endo::from_matrix(IntMatrix{{2, 0}, {0, 1}}, 3);
  EXPECT_FALSE(is_automorphism(d));
  EXPECT_THROW(invert(d), std::domain_error);
  EXPECT_THROW(lift(d), std::domain_error);
  EXPECT_THROW(project(Endo::identity(2, 1)), std::invalid_argument);
  EXPECT_THROW(Endo::from_images({}), std::invalid_argument);
  EXPECT_THROW(Endo::from_images({gen(2, 2, 0)}), std::invalid_argument);
  EXPECT_THROW(Endo::from_images({gen(2, 2, 0), gen(2, 3, 1)}), std::invalid_argument);
}

TEST(Endo, InvertRandomAutomorphisms) {
  Rng rng(41);
  for (int s = 0; s < 10; ++s) {
    Endo e = random_automorphism(rng, 3, 3, 3);
    ASSERT_TRUE(is_automorphism(e));
    Endo f = invert(e);
    EXPECT_EQ(compose(e, f), Endo::identity(3, 3));
    EXPECT_EQ(compose(f, e), Endo::identity(3, 3));
  }
}

TEST(Endo, ProjectAndLift) {
  Rng rng(42);
  for (int s = 0; s < 10; ++s) {
    Endo phi = random_automorphism(rng, 2, 3, 5);
    Endo lifted = lift(phi);
    EXPECT_EQ(lifted.class_bound(), 4u);
    EXPECT_EQ(project(lifted), phi);
    EXPECT_TRUE(is_automorphism(lifted));
  }
  Endo phi = Endo::from_images({gen(2, 3, 0) * GroupElement::basic(2, 3, "abb"), gen(2, 3, 1)});
  EXPECT_EQ(project(phi), Endo::identity(2, 2));
  EXPECT_TRUE(in_projection_kernel(phi));
  EXPECT_FALSE(in_projection_kernel(Endo::from_matrix(transposition(2, 0, 1), 3)));
}

TEST(Kernel, SharpOfUnit) {
  EXPECT_EQ(hom_map_rows(2, 2), 1u);
  EXPECT_EQ(hom_map_rows(3, 3), 8u);
  Endo alpha = sharp(HomMap::unit(2, 2, 0, 0));
  EXPECT_EQ(alpha, Endo::from_images({gen(2, 2, 0) * GroupElement::basic(2, 2, "ab"), gen(2, 2, 1)}));
  EXPECT_EQ(flat(alpha), HomMap::unit(2, 2, 0, 0));
  EXPECT_EQ(sharp(HomMap::zero(3, 3)), Endo::identity(3, 3));
  EXPECT_THROW(flat(Endo::from_matrix(transposition(2, 0, 1), 2)), std::domain_error);
  EXPECT_THROW(HomMap::from_matrix(2, 2, IntMatrix(2, 2)), std::invalid_argument);
}

TEST(Kernel, FlatSharpAreInverseIsomorphisms) {
  Rng rng(43);
  for (auto [r, c] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    for (int s = 0; s < 10; ++s) {
      HomMap beta = random_hom_map(rng, r, c);
      HomMap gamma = random_hom_map(rng, r, c);
      Endo alpha = sharp(beta);
      EXPECT_TRUE(in_projection_kernel(alpha));
      EXPECT_EQ(flat(alpha), beta);
      EXPECT_EQ(compose(sharp(beta), sharp(gamma)), sharp(beta + gamma));
      EXPECT_EQ(flat(compose(alpha, sharp(gamma))), beta + gamma);
    }
  }
}

TEST(Kernel, ConjugationActsThroughAbelianization) {
  Rng rng(44);
  for (int s = 0; s < 8; ++s) {
    Endo e = random_automorphism(rng, 2, 3, 3);
    HomMap beta = random_hom_map(rng, 2, 3);
    Endo conjugated = compose(invert(e), compose(sharp(beta), e));
    IntMatrix a = abelianization_matrix(e);
    EXPECT_EQ(flat(conjugated), hom_gl_action(inverse_unimodular(a), beta));
  }
}

TEST(Kernel, GlActionIsLeftAction) {
  Rng rng(45);
  for (int s = 0; s < 10; ++s) {
    IntMatrix a = random_gl_matrix(rng, 3), b = random_gl_matrix(rng, 3);
    HomMap beta = random_hom_map(rng, 3, 2);
    EXPECT_EQ(hom_gl_action(a * b, beta), hom_gl_action(a, hom_gl_action(b, beta)));
    EXPECT_EQ(hom_gl_action(IntMatrix::identity(3), beta), beta);
  }
}

TEST(Endo, Stabilize) {
  Endo phi = Endo::from_images({gen(2, 2, 0) * gen(2, 2, 1), gen(2, 2, 1)});
  Endo s = stabilize(phi);
  EXPECT_EQ(s.rank(), 3u);
  EXPECT_EQ(s.image(2), gen(3, 2, 2));
  EXPECT_EQ(abelianization_matrix(s), stabilize_matrix(abelianization_matrix(phi)));
  EXPECT_EQ(s.image(0), gen(3, 2, 0) * gen(3, 2, 1));
}

TEST(AutSuite, AllChecksPass) {
  for (auto [r, c] : {std::pair{1u, 2u}, {2u, 3u}, {3u, 2u}}) {
    Rng rng(46);
    VerifyOptions opts;
    opts.kernel_samples = 15;
    opts.hom_samples = 15;
    for (const auto &res : verify_aut(r, c, rng, opts))
      EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
  }
}
