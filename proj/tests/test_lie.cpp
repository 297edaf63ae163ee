#include "nilstab/lie.hpp"
#include "nilstab/random.hpp"
#include "nilstab/verify.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace nilstab;

namespace {

int trial_mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

std::vector<Word> all_words(unsigned r, unsigned n) {
  std::vector<Word> out{""};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const auto &w : out)
      for (unsigned i = 0; i < r; ++i)
        next.push_back(w + letter(i));
    out = std::move(next);
  }
  return out;
}

// Strictly smaller than every proper rotation.
bool lyndon_by_rotation(const Word &w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w.substr(k) + w.substr(0, k) <= w)
      return false;
  return !w.empty();
}

std::vector<Word> brute_lyndon(unsigned r, unsigned n) {
  std::vector<Word> out;
  for (const auto &w : all_words(r, n))
    if (lyndon_by_rotation(w))
      out.push_back(w);
  return out;
}

AssocPoly commutator(const AssocPoly &x, const AssocPoly &y) {
  AssocPoly out;
  for (const auto &[u, a] : x)
    for (const auto &[v, b] : y) {
      out[u + v] += a * b;
      out[v + u] -= a * b;
    }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

// Left-normed bracket [..[x1, x2], ..., xn] of the letters of w.
AssocPoly left_normed(const Word &w) {
  AssocPoly acc{{w.substr(0, 1), 1}};
  for (std::size_t i = 1; i < w.size(); ++i)
    acc = commutator(acc, AssocPoly{{w.substr(i, 1), 1}});
  return acc;
}

// Dynkin-Specht-Wever: a homogeneous degree-n p is Lie iff sum p_w [w] = n p.
bool passes_dynkin(const AssocPoly &p, std::size_t n) {
  AssocPoly lhs;
  for (const auto &[w, coeff] : p)
    for (const auto &[v, x] : left_normed(w))
      lhs[v] += coeff * x;
  std::erase_if(lhs, [](const auto &kv) { return kv.second == 0; });
  AssocPoly rhs;
  for (const auto &[w, coeff] : p)
    rhs[w] = coeff * static_cast<unsigned long>(n);
  return lhs == rhs;
}

} // namespace

TEST(Mobius, MatchesTrialFactorization) {
  for (std::uint64_t n = 1; n <= 500; ++n)
    EXPECT_EQ(mobius(n), trial_mobius(n)) << n;
  EXPECT_THROW(mobius(0), std::invalid_argument);
}

TEST(Witt, KnownValues) {
  const long expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
  for (unsigned n = 1; n <= 12; ++n)
    EXPECT_EQ(witt_rank(2, n), expected[n - 1]) << n;
  EXPECT_EQ(witt_rank(3, 2), 3);
  EXPECT_EQ(witt_rank(3, 3), 8);
  EXPECT_EQ(witt_rank(1, 1), 1);
  for (unsigned n = 2; n <= 8; ++n)
    EXPECT_EQ(witt_rank(1, n), 0);
  EXPECT_THROW(witt_rank(0, 1), std::invalid_argument);
}

TEST(Lyndon, MatchesRotationEnumeration) {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned n = 1; n <= 6; ++n) {
      auto brute = brute_lyndon(r, n);
      EXPECT_EQ(lyndon_words(r, n), brute) << r << "," << n;
      EXPECT_EQ(witt_rank(r, n), static_cast<unsigned long>(brute.size()));
      for (const auto &w : all_words(r, n))
        EXPECT_EQ(is_lyndon(w), lyndon_by_rotation(w)) << w;
    }
}

TEST(Lyndon, BasisAndFactorization) {
  EXPECT_EQ(lyndon_words(2, 4), (std::vector<Word>{"aaab", "aabb", "abbb"}));
  LyndonBasisElement e = make_lyndon("aab");
  EXPECT_EQ(e.split, 1u);
  EXPECT_EQ(e.left(), "a");
  EXPECT_EQ(e.right(), "ab");
  EXPECT_EQ(e.bracketing(), "[a,[a,b]]");
  EXPECT_EQ(make_lyndon("aabab").bracketing(), "[[a,[a,b]],[a,b]]");
  EXPECT_EQ(make_lyndon("aabab").split, 3u);
  EXPECT_EQ(standard_split("abb"), 2u);
  EXPECT_EQ(standard_split("a"), 0u);
  EXPECT_THROW(make_lyndon("ba"), std::invalid_argument);
  EXPECT_THROW(make_lyndon("abab"), std::invalid_argument);
}

TEST(LiePolynomial, Examples) {
  EXPECT_EQ(lie_polynomial("ab"), (AssocPoly{{"ab", 1}, {"ba", -1}}));
  EXPECT_EQ(lie_polynomial("aab"), (AssocPoly{{"aab", 1}, {"aba", -2}, {"baa", 1}}));
  EXPECT_THROW(lie_polynomial("ba"), std::invalid_argument);
}

TEST(LiePolynomial, LeadingMonomialAndDynkin) {
  for (unsigned r = 2; r <= 3; ++r)
    for (unsigned n = 1; n <= 6; ++n)
      for (const auto &w : lyndon_words(r, n)) {
        const AssocPoly &p = lie_polynomial(w);
        ASSERT_FALSE(p.empty());
        // Same length, so the map order is lexicographic.
        EXPECT_EQ(p.begin()->first, w);
        EXPECT_EQ(p.begin()->second, 1);
        EXPECT_TRUE(passes_dynkin(p, n)) << w;
      }
}

TEST(LiePolynomial, CoordinatesRoundTrip) {
  Rng rng(21);
  for (int s = 0; s < 20; ++s) {
    LieElement x = random_lie_element(rng, 3, 4);
    auto coords = lyndon_coordinates(x.to_assoc());
    ASSERT_TRUE(coords.has_value());
    EXPECT_EQ(LieElement::from_terms(3, 4, *coords), x);
  }
  EXPECT_FALSE(lyndon_coordinates(AssocPoly{{"ab", 1}}).has_value());
  EXPECT_FALSE(lyndon_coordinates(AssocPoly{{"ab", 1}, {"ba", 1}}).has_value());
  EXPECT_THROW(LieElement::from_assoc(2, 2, AssocPoly{{"ab", 1}}), std::domain_error);
}

TEST(LieElement, BracketExamples) {
  LieElement a = LieElement::basis(2, 3, "a");
  LieElement b = LieElement::basis(2, 3, "b");
  EXPECT_EQ(lie_bracket(a, b), LieElement::basis(2, 3, "ab"));
  EXPECT_EQ(lie_bracket(b, a), LieElement::basis(2, 3, "ab", -1));
  EXPECT_EQ(lie_bracket(a, lie_bracket(a, b)), LieElement::basis(2, 3, "aab"));
  // [[a,b],b] = -[b,[a,b]] = [a,b,b] in Lyndon form abb.
  EXPECT_EQ(lie_bracket(lie_bracket(a, b), b), LieElement::basis(2, 3, "abb"));
  EXPECT_TRUE(lie_bracket(a, a).is_zero());
  // Truncation: degree 4 is dropped at class 3.
  EXPECT_TRUE(lie_bracket(a, LieElement::basis(2, 3, "aab")).is_zero());
}

TEST(LieElement, Validation) {
  EXPECT_THROW(LieElement::from_terms(2, 2, {{"ba", 1}}), std::invalid_argument);
  EXPECT_THROW(LieElement::from_terms(2, 2, {{"aab", 1}}), std::invalid_argument);
  EXPECT_THROW(LieElement::from_terms(2, 2, {{"ac", 1}}), std::invalid_argument);
  EXPECT_TRUE(LieElement::from_terms(2, 2, {{"ab", 0}}).is_zero());
  EXPECT_THROW(LieElement::basis(2, 2, "a") + LieElement::basis(3, 2, "a"),
               std::invalid_argument);
}

TEST(LieElement, LayerMatrixIsFunctorial) {
  Rng rng(22);
  for (int s = 0; s < 8; ++s) {
    IntMatrix a = random_int_matrix(rng, 3, 3, 2);
    IntMatrix b = random_int_matrix(rng, 3, 3, 2);
    for (unsigned n = 1; n <= 3; ++n)
      EXPECT_EQ(lie_layer_matrix(a * b, n), lie_layer_matrix(a, n) * lie_layer_matrix(b, n));
    EXPECT_EQ(lie_layer_matrix(a, 1), a);
    EXPECT_TRUE(lie_layer_matrix(IntMatrix::identity(3), 3).is_identity());
  }
  // Swapping a and b negates [a,b].
  EXPECT_EQ(lie_layer_matrix(transposition(2, 0, 1), 2), (IntMatrix{{-1}}));
}

TEST(LieSuite, AllChecksPass) {
  for (auto [r, c] : {std::pair{1u, 3u}, {2u, 4u}, {3u, 3u}}) {
    Rng rng(23);
    for (const auto &res : verify_lie(r, c, rng, VerifyOptions{}))
      EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
  }
}
