#pragma once

#include "nilstab/integer.hpp"
#include "nilstab/lie.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

namespace nilstab {

/// Element of Z<<X_1..X_r>> modulo monomials of degree > class_bound.
/// Stored densely: the word w of degree n sits at offset(n) + code(w), where
/// code reads w as a base-r number.
class TruncatedSeries {
public:
  using Coefficients = std::map<Word, Integer, DegLex>;

  TruncatedSeries(unsigned rank, unsigned class_bound);

  static TruncatedSeries one(unsigned rank, unsigned class_bound);
  /// X_i
  static TruncatedSeries variable(unsigned rank, unsigned class_bound, unsigned i);
  /// 1 + X_i, the image of generator i under the Magnus embedding.
  static TruncatedSeries generator(unsigned rank, unsigned class_bound, unsigned i);
  /// Drops terms above class_bound; validates letters.
  static TruncatedSeries from_coefficients(unsigned rank, unsigned class_bound,
                                           const Coefficients &coefficients);

  unsigned rank() const { return rank_; }
  unsigned class_bound() const { return class_bound_; }
  /// Nonzero coefficients keyed by word.
  Coefficients coefficients() const;
  /// Nonzero degree-n coefficients keyed by word.
  Coefficients degree_coefficients(std::size_t n) const;
  Integer coefficient(const Word &w) const;
  bool is_zero() const;
  /// Constant term equals 1.
  bool is_unit() const;

  TruncatedSeries homogeneous_part(std::size_t degree) const;
  /// Reinterpret in another truncation (drops terms above the new bound).
  TruncatedSeries truncated(unsigned class_bound) const;

  /// (1 + x)^e = sum_k binom(e, k) x^k; requires is_unit(). Any integer e.
  TruncatedSeries power(const Integer &e) const;
  TruncatedSeries inverse() const { return power(-1); }

  /// Algebra substitution X_i -> y[i]; every y[i] must have zero constant term.
  TruncatedSeries substitute(const std::vector<TruncatedSeries> &y) const;

  TruncatedSeries operator+(const TruncatedSeries &rhs) const;
  TruncatedSeries operator-(const TruncatedSeries &rhs) const;
  TruncatedSeries operator*(const TruncatedSeries &rhs) const;
  TruncatedSeries operator*(const Integer &scale) const;
  /// *this += scale * rhs
  TruncatedSeries &add_multiple(const TruncatedSeries &rhs, const Integer &scale);
  TruncatedSeries &add_multiple(const TruncatedSeries &rhs, std::int64_t scale);

  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b);

private:
  friend class SeriesSubstitution;
  void check_compatible(const TruncatedSeries &rhs) const;
  struct Layout {
    std::vector<std::size_t> offsets; ///< offsets[n] = sum_{k < n} r^k, n = 0..c+1
    std::vector<std::size_t> widths;  ///< widths[n] = r^n
  };
  static const Layout &layout(unsigned rank, unsigned class_bound);

  std::size_t offset(std::size_t degree) const { return layout_->offsets[degree]; }
  std::size_t size() const { return layout_->offsets.back(); }
  std::size_t index_of(const Word &w) const;
  Word word_at(std::size_t degree, std::size_t code) const;

  bool is_big() const { return !big_.empty(); }
  bool nonzero(std::size_t i) const { return is_big() ? sgn(big_[i]) != 0 : small_[i] != 0; }
  Integer value(std::size_t i) const;
  void promote();
  void normalize();

  unsigned rank_;
  unsigned class_bound_;
  const Layout *layout_;
  /// Coefficients live in small_ while they fit in 64 bits, else in big_
  /// (exactly one of the two is nonempty).
  std::vector<std::int64_t> small_;
  std::vector<Integer> big_;
};

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

/// Algebra substitution X_i -> y[i], memoizing monomial images across calls.
class SeriesSubstitution {
public:
  /// Every y[i] must have zero constant term; all share rank and class.
  explicit SeriesSubstitution(std::vector<TruncatedSeries> y);
  TruncatedSeries operator()(const TruncatedSeries &s);

private:
  const TruncatedSeries &image_of(std::size_t degree, std::size_t code);

  std::vector<TruncatedSeries> y_;
  std::vector<std::vector<std::unique_ptr<TruncatedSeries>>> images_;
};

} // namespace nilstab
