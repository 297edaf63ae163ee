#pragma once

// Free Lie ring over Z on r generators, truncated at degree c, in the Lyndon
// basis.
//
// Conventions used everywhere in the library:
//   * letters are 'a', 'b', 'c', ... (generator i is 'a' + i);
//   * a Lyndon word w with standard factorization w = u.v denotes the bracket
//     [u, v], realized in the free associative ring as uv - vu;
//   * basis order is by degree, then lexicographic on words (DegLex).

#include "nilstab/integer.hpp"
#include "nilstab/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilstab {

using Word = std::string;

constexpr unsigned kMaxRank = 26;

struct DegLex {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

inline char letter(unsigned i) { return static_cast<char>('a' + i); }
inline unsigned letter_index(char ch) { return static_cast<unsigned>(ch - 'a'); }

bool is_lyndon(const Word &w);

// Split point of the standard factorization: w = w[0, k) . w[k, n) with
// w[k, n) the longest proper Lyndon suffix. Returns 0 for single letters.
std::size_t standard_split(const Word &w);

struct LyndonBasisElement {
  Word word;
  std::size_t split = 0;

  std::size_t degree() const { return word.size(); }
  Word left() const { return word.substr(0, split); }
  Word right() const { return word.substr(split); }
  /// Bracketing as text, e.g. "[a,[a,b]]" for aab.
  std::string bracketing() const;

  friend bool operator==(const LyndonBasisElement &, const LyndonBasisElement &) = default;
};

/// Throws std::invalid_argument if w is not a Lyndon word.
LyndonBasisElement make_lyndon(const Word &w);

int mobius(std::uint64_t n);
Integer witt_rank(unsigned r, unsigned n);

std::vector<LyndonBasisElement> lyndon_basis(unsigned r, unsigned n);
/// Cached Lyndon words of length n over r letters, lexicographic order.
const std::vector<Word> &lyndon_words(unsigned r, unsigned n);

using AssocPoly = std::map<Word, Integer, DegLex>;

/// Expansion of the Lyndon bracket as a noncommutative polynomial.
/// Its lexicographically least monomial is w itself, with coefficient 1.
const AssocPoly &lie_polynomial(const Word &lyndon_word);

AssocPoly assoc_multiply(const AssocPoly &x, const AssocPoly &y, std::size_t max_degree);
/// xy - yx, truncated above max_degree.
AssocPoly assoc_commutator(const AssocPoly &x, const AssocPoly &y, std::size_t max_degree);
void assoc_add_to(AssocPoly &acc, const AssocPoly &x, const Integer &scale = 1);

/// Coordinates of p in the Lyndon-Lie basis, or nullopt if p is not a Lie
/// polynomial with integer coordinates. Peels off the least monomial, which
/// must be Lyndon, degree by degree.
std::optional<std::map<Word, Integer, DegLex>> lyndon_coordinates(AssocPoly p);

/// Algebra substitution letter i -> sum_j A(j, i) letter j.
AssocPoly substitute_linear(const AssocPoly &p, const IntMatrix &a);

class LieElement {
public:
  using Terms = std::map<Word, Integer, DegLex>;

  LieElement(unsigned rank, unsigned class_bound);

  static LieElement basis(unsigned rank, unsigned class_bound, const Word &w,
                          const Integer &coefficient = 1);
  /// Validates Lyndon keys, letters and degrees; drops zero coefficients.
  static LieElement from_terms(unsigned rank, unsigned class_bound, const Terms &terms);
  /// Throws std::domain_error if p is not in the Lie span.
  static LieElement from_assoc(unsigned rank, unsigned class_bound, const AssocPoly &p);

  unsigned rank() const { return rank_; }
  unsigned class_bound() const { return class_bound_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Word &w) const;

  LieElement homogeneous_part(std::size_t degree) const;
  /// Degree if all terms share one; nullopt for zero or inhomogeneous elements.
  std::optional<std::size_t> homogeneous_degree() const;

  AssocPoly to_assoc() const;

  LieElement operator+(const LieElement &rhs) const;
  LieElement operator-(const LieElement &rhs) const;
  LieElement operator-() const;
  LieElement operator*(const Integer &scale) const;

  friend bool operator==(const LieElement &, const LieElement &) = default;

private:
  void check_compatible(const LieElement &rhs) const;

  unsigned rank_;
  unsigned class_bound_;
  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const LieElement &x);

LieElement lie_bracket(const LieElement &x, const LieElement &y);
LieElement lie_apply_matrix(const IntMatrix &a, const LieElement &x);

/// Matrix of lie_apply_matrix(a, .) on the degree-n Lyndon basis.
IntMatrix lie_layer_matrix(const IntMatrix &a, unsigned n);

} // namespace nilstab
