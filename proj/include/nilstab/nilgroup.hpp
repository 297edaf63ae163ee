#pragma once

// Free nilpotent group N_r^c = F_r / Gamma_{c+1}(F_r).
//
// Elements are kept in collected normal form: the ordered product, in DegLex
// basis order, of Lyndon basic commutators raised to integer exponents. The
// basic commutator of a Lyndon word with standard factorization (u, v) is the
// group commutator [u, v] = u^-1 v^-1 u v. Arithmetic runs through the
// truncated Magnus embedding x_i -> 1 + X_i; peeling the series degree by
// degree recovers the unique collected form.

#include "nilstab/integer.hpp"
#include "nilstab/lie.hpp"
#include "nilstab/series.hpp"

#include <iosfwd>
#include <map>
#include <optional>

namespace nilstab {

class GroupElement {
public:
  using Exponents = std::map<Word, Integer, DegLex>;

  /// The identity of N_rank^class_bound.
  GroupElement(unsigned rank, unsigned class_bound);

  static GroupElement identity(unsigned rank, unsigned class_bound) {
    return GroupElement(rank, class_bound);
  }
  static GroupElement generator(unsigned rank, unsigned class_bound, unsigned i,
                                const Integer &exponent = 1);
  static GroupElement basic(unsigned rank, unsigned class_bound, const Word &lyndon_word,
                            const Integer &exponent = 1);
  /// Validates Lyndon keys, letters and degrees; drops zero exponents.
  static GroupElement from_exponents(unsigned rank, unsigned class_bound,
                                     const Exponents &exponents);

  unsigned rank() const { return rank_; }
  unsigned class_bound() const { return class_bound_; }
  const Exponents &exponents() const { return exponents_; }
  Integer exponent(const Word &w) const;
  bool is_identity() const { return exponents_.empty(); }

  friend bool operator==(const GroupElement &, const GroupElement &) = default;

private:
  unsigned rank_;
  unsigned class_bound_;
  Exponents exponents_;
};

std::ostream &operator<<(std::ostream &os, const GroupElement &g);

/// Magnus series of a basic commutator, memoized per (rank, class, word).
const TruncatedSeries &basic_commutator_series(unsigned rank, unsigned class_bound,
                                               const Word &lyndon_word);

TruncatedSeries magnus_embed(const GroupElement &g);
/// Throws std::domain_error("not a group element") if s is not in the image.
GroupElement magnus_peel(const TruncatedSeries &s);

GroupElement mul(const GroupElement &g, const GroupElement &h);
GroupElement inv(const GroupElement &g);
/// g^-1 h^-1 g h
GroupElement comm(const GroupElement &g, const GroupElement &h);
GroupElement power(const GroupElement &g, const Integer &e);

inline GroupElement operator*(const GroupElement &g, const GroupElement &h) {
  return mul(g, h);
}

/// Image under N_r^c -> N_r^{c'}; requires 1 <= c' <= c.
GroupElement truncate(const GroupElement &g, unsigned class_bound);
/// Same exponents read in a larger class or rank (no new letters used).
GroupElement reinterpret(const GroupElement &g, unsigned rank, unsigned class_bound);

/// Largest n with g in Gamma_n; nullopt for the identity (infinite).
std::optional<unsigned> lcs_degree(const GroupElement &g);
/// Class of g in gr^n for n = lcs_degree(g), as a Lie element.
LieElement lcs_class(const GroupElement &g);
/// Degree-n exponents as a Lie element (coordinates in gr^n when g is in Gamma_n).
LieElement degree_part(const GroupElement &g, unsigned n);

bool center_test(const GroupElement &g);

unsigned h1_rank(unsigned r, unsigned c);
Integer h2_rank(unsigned r, unsigned c);

} // namespace nilstab
