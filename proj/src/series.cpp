#include "nilstab/series.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace nilstab {

namespace {

using Wide = __int128;

constexpr std::int64_t kSmallOperand = std::int64_t(1) << 31;

inline bool fits64(Wide v) {
  return v >= static_cast<Wide>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<Wide>(std::numeric_limits<std::int64_t>::max());
}

Integer from_wide(Wide v) {
  if (fits64(v))
    return Integer(static_cast<long>(v));
  bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : v;
  Integer out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
  return negative ? Integer(-out) : out;
}

bool fits_long(const Integer &z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

} // namespace

const TruncatedSeries::Layout &TruncatedSeries::layout(unsigned rank, unsigned class_bound) {
  thread_local const Layout *last = nullptr;
  thread_local unsigned last_rank = 0, last_class = 0;
  if (last && last_rank == rank && last_class == class_bound)
    return *last;
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Layout>> table;
  std::lock_guard lock(mutex);
  auto &slot = table[{rank, class_bound}];
  if (!slot) {
    slot = std::make_unique<Layout>();
    slot->offsets.assign(class_bound + 2, 0);
    slot->widths.assign(class_bound + 1, 1);
    for (unsigned n = 0; n <= class_bound; ++n) {
      if (n > 0)
        slot->widths[n] = slot->widths[n - 1] * rank;
      slot->offsets[n + 1] = slot->offsets[n] + slot->widths[n];
    }
  }
  last = slot.get();
  last_rank = rank;
  last_class = class_bound;
  return *slot;
}

TruncatedSeries::TruncatedSeries(unsigned rank, unsigned class_bound)
    : rank_(rank), class_bound_(class_bound) {
  if (rank == 0 || rank > kMaxRank)
    throw std::invalid_argument("TruncatedSeries: rank out of range");
  if (class_bound == 0)
    throw std::invalid_argument("TruncatedSeries: class bound must be positive");
  layout_ = &layout(rank, class_bound);
  small_.assign(size(), 0);
}

Integer TruncatedSeries::value(std::size_t i) const {
  return is_big() ? big_[i] : Integer(static_cast<long>(small_[i]));
}

void TruncatedSeries::promote() {
  if (is_big())
    return;
  big_.resize(small_.size());
  for (std::size_t i = 0; i < small_.size(); ++i)
    if (small_[i] != 0)
      big_[i] = static_cast<long>(small_[i]);
  small_.clear();
}

void TruncatedSeries::normalize() {
  if (!is_big())
    return;
  for (const auto &z : big_)
    if (!fits_long(z))
      return;
  small_.resize(big_.size());
  for (std::size_t i = 0; i < big_.size(); ++i)
    small_[i] = big_[i].get_si();
  big_.clear();
}

std::size_t TruncatedSeries::index_of(const Word &w) const {
  std::size_t code = 0;
  for (char ch : w) {
    unsigned i = letter_index(ch);
    if (i >= rank_)
      throw std::invalid_argument("TruncatedSeries: letter outside rank in '" + w + "'");
    code = code * rank_ + i;
  }
  return offset(w.size()) + code;
}

Word TruncatedSeries::word_at(std::size_t degree, std::size_t code) const {
  Word w(degree, 'a');
  for (std::size_t k = degree; k-- > 0;) {
    w[k] = letter(static_cast<unsigned>(code % rank_));
    code /= rank_;
  }
  return w;
}

TruncatedSeries TruncatedSeries::one(unsigned rank, unsigned class_bound) {
  TruncatedSeries s(rank, class_bound);
  s.small_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned rank, unsigned class_bound, unsigned i) {
  if (i >= rank)
    throw std::invalid_argument("TruncatedSeries::variable: index outside rank");
  TruncatedSeries s(rank, class_bound);
  s.small_[1 + i] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(unsigned rank, unsigned class_bound, unsigned i) {
  TruncatedSeries s = variable(rank, class_bound, i);
  s.small_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(unsigned rank, unsigned class_bound,
                                                   const Coefficients &coefficients) {
  TruncatedSeries s(rank, class_bound);
  s.promote();
  for (const auto &[w, c] : coefficients) {
    for (char ch : w)
      if (letter_index(ch) >= rank)
        throw std::invalid_argument("TruncatedSeries: letter outside rank in '" + w + "'");
    if (w.size() <= class_bound)
      s.big_[s.index_of(w)] += c;
  }
  s.normalize();
  return s;
}

TruncatedSeries::Coefficients TruncatedSeries::coefficients() const {
  Coefficients out;
  for (std::size_t n = 0; n <= class_bound_; ++n)
    for (std::size_t i = offset(n); i < offset(n + 1); ++i)
      if (nonzero(i))
        out.emplace(word_at(n, i - offset(n)), value(i));
  return out;
}

TruncatedSeries::Coefficients TruncatedSeries::degree_coefficients(std::size_t n) const {
  Coefficients out;
  if (n > class_bound_)
    return out;
  for (std::size_t i = offset(n); i < offset(n + 1); ++i)
    if (nonzero(i))
      out.emplace(word_at(n, i - offset(n)), value(i));
  return out;
}

Integer TruncatedSeries::coefficient(const Word &w) const {
  if (w.size() > class_bound_)
    return 0;
  return value(index_of(w));
}

bool TruncatedSeries::is_zero() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (nonzero(i))
      return false;
  return true;
}

bool TruncatedSeries::is_unit() const { return is_big() ? big_[0] == 1 : small_[0] == 1; }

TruncatedSeries TruncatedSeries::homogeneous_part(std::size_t degree) const {
  TruncatedSeries out(rank_, class_bound_);
  if (degree > class_bound_)
    return out;
  if (is_big())
    out.promote();
  for (std::size_t i = offset(degree); i < offset(degree + 1); ++i) {
    if (is_big())
      out.big_[i] = big_[i];
    else
      out.small_[i] = small_[i];
  }
  out.normalize();
  return out;
}

TruncatedSeries TruncatedSeries::truncated(unsigned class_bound) const {
  TruncatedSeries out(rank_, class_bound);
  std::size_t n = std::min(out.size(), size());
  if (is_big())
    out.promote();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_big())
      out.big_[i] = big_[i];
    else
      out.small_[i] = small_[i];
  }
  out.normalize();
  return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries &rhs) const {
  if (rank_ != rhs.rank_ || class_bound_ != rhs.class_bound_)
    throw std::invalid_argument("TruncatedSeries: rank/class mismatch");
}

bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
  if (a.rank_ != b.rank_ || a.class_bound_ != b.class_bound_)
    return false;
  if (!a.is_big() && !b.is_big())
    return a.small_ == b.small_;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.value(i) != b.value(i))
      return false;
  return true;
}

TruncatedSeries &TruncatedSeries::add_multiple(const TruncatedSeries &rhs, std::int64_t scale) {
  check_compatible(rhs);
  if (scale == 0)
    return *this;
  const std::size_t n = size();
  std::size_t i = 0;
  if (!is_big() && !rhs.is_big()) {
    for (; i < n; ++i) {
      if (rhs.small_[i] == 0)
        continue;
      Wide v = static_cast<Wide>(small_[i]) + static_cast<Wide>(rhs.small_[i]) * scale;
      if (!fits64(v))
        break;
      small_[i] = static_cast<std::int64_t>(v);
    }
    if (i == n)
      return *this;
  }
  // Entries before i are done.
  promote();
  const Integer s(static_cast<long>(scale));
  for (; i < n; ++i)
    if (rhs.nonzero(i))
      big_[i] += rhs.value(i) * s;
  normalize();
  return *this;
}

TruncatedSeries &TruncatedSeries::add_multiple(const TruncatedSeries &rhs, const Integer &scale) {
  if (fits_long(scale))
    return add_multiple(rhs, static_cast<std::int64_t>(scale.get_si()));
  check_compatible(rhs);
  promote();
  for (std::size_t i = 0; i < size(); ++i)
    if (rhs.nonzero(i))
      big_[i] += rhs.value(i) * scale;
  normalize();
  return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &rhs) const {
  TruncatedSeries out = *this;
  out.add_multiple(rhs, std::int64_t(1));
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &rhs) const {
  TruncatedSeries out = *this;
  out.add_multiple(rhs, std::int64_t(-1));
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &rhs) const {
  check_compatible(rhs);
  const Layout &lay = *layout_;
  const std::size_t n = size();

  auto small_operand = [](const TruncatedSeries &s) {
    if (s.is_big())
      return false;
    for (auto v : s.small_)
      if (v >= kSmallOperand || v <= -kSmallOperand)
        return false;
    return true;
  };

  // Nonzero rhs positions grouped by degree.
  thread_local std::vector<std::size_t> rhs_nonzero;
  thread_local std::vector<std::size_t> rhs_start;
  rhs_nonzero.clear();
  rhs_start.assign(class_bound_ + 2, 0);
  for (std::size_t d = 0; d <= class_bound_; ++d) {
    rhs_start[d] = rhs_nonzero.size();
    for (std::size_t j = lay.offsets[d]; j < lay.offsets[d + 1]; ++j)
      if (rhs.nonzero(j))
        rhs_nonzero.push_back(j);
  }
  rhs_start[class_bound_ + 1] = rhs_nonzero.size();

  TruncatedSeries out(rank_, class_bound_);
  if (small_operand(*this) && small_operand(rhs)) {
    // Each product is below 2^62, so the 128-bit sums cannot overflow.
    thread_local std::vector<Wide> acc;
    acc.assign(n, 0);
    for (std::size_t du = 0; du <= class_bound_; ++du)
      for (std::size_t i = lay.offsets[du]; i < lay.offsets[du + 1]; ++i) {
        const std::int64_t u = small_[i];
        if (u == 0)
          continue;
        const std::size_t code = i - lay.offsets[du];
        for (std::size_t dv = 0; du + dv <= class_bound_; ++dv) {
          const std::size_t base = lay.offsets[du + dv] + code * lay.widths[dv] - lay.offsets[dv];
          for (std::size_t k = rhs_start[dv]; k < rhs_start[dv + 1]; ++k) {
            const std::size_t j = rhs_nonzero[k];
            acc[base + j] += static_cast<Wide>(u) * rhs.small_[j];
          }
        }
      }
    if (std::all_of(acc.begin(), acc.end(), fits64)) {
      for (std::size_t i = 0; i < n; ++i)
        out.small_[i] = static_cast<std::int64_t>(acc[i]);
    } else {
      out.promote();
      for (std::size_t i = 0; i < n; ++i)
        if (acc[i] != 0)
          out.big_[i] = from_wide(acc[i]);
    }
    return out;
  }

  out.promote();
  TruncatedSeries a = *this;
  TruncatedSeries b = rhs;
  a.promote();
  b.promote();
  for (std::size_t du = 0; du <= class_bound_; ++du)
    for (std::size_t i = lay.offsets[du]; i < lay.offsets[du + 1]; ++i) {
      if (sgn(a.big_[i]) == 0)
        continue;
      const std::size_t code = i - lay.offsets[du];
      for (std::size_t dv = 0; du + dv <= class_bound_; ++dv) {
        const std::size_t base = lay.offsets[du + dv] + code * lay.widths[dv] - lay.offsets[dv];
        for (std::size_t k = rhs_start[dv]; k < rhs_start[dv + 1]; ++k) {
          const std::size_t j = rhs_nonzero[k];
          mpz_addmul(out.big_[base + j].get_mpz_t(), a.big_[i].get_mpz_t(),
                     b.big_[j].get_mpz_t());
        }
      }
    }
  out.normalize();
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Integer &scale) const {
  TruncatedSeries out(rank_, class_bound_);
  out.add_multiple(*this, scale);
  return out;
}

TruncatedSeries TruncatedSeries::power(const Integer &e) const {
  if (!is_unit())
    throw std::domain_error("TruncatedSeries::power: constant term is not 1");
  if (sgn(e) == 0)
    return one(rank_, class_bound_);
  if (e == 1)
    return *this;
  TruncatedSeries x = *this;
  x.add_multiple(one(rank_, class_bound_), std::int64_t(-1));
  TruncatedSeries out = one(rank_, class_bound_);
  TruncatedSeries x_power = one(rank_, class_bound_);
  for (unsigned long k = 1; k <= class_bound_; ++k) {
    x_power = x_power * x;
    if (x_power.is_zero())
      break;
    out.add_multiple(x_power, binomial(e, k));
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute(const std::vector<TruncatedSeries> &y) const {
  return SeriesSubstitution(y)(*this);
}

SeriesSubstitution::SeriesSubstitution(std::vector<TruncatedSeries> y) : y_(std::move(y)) {
  if (y_.empty())
    throw std::invalid_argument("SeriesSubstitution: no images");
  const TruncatedSeries &first = y_.front();
  if (y_.size() != first.rank_)
    throw std::invalid_argument("SeriesSubstitution: need one image per variable");
  for (const auto &s : y_) {
    first.check_compatible(s);
    if (s.nonzero(0))
      throw std::invalid_argument("SeriesSubstitution: image has a constant term");
  }
  images_.resize(first.class_bound_ + 1);
  for (unsigned n = 0; n <= first.class_bound_; ++n)
    images_[n].resize(first.offset(n + 1) - first.offset(n));
  images_[0][0] =
      std::make_unique<TruncatedSeries>(TruncatedSeries::one(first.rank_, first.class_bound_));
}

// Image of the degree-n monomial with the given code, built from its prefix.
const TruncatedSeries &SeriesSubstitution::image_of(std::size_t degree, std::size_t code) {
  auto &slot = images_[degree][code];
  if (!slot) {
    const std::size_t r = y_.size();
    const TruncatedSeries &prefix = image_of(degree - 1, code / r);
    slot = std::make_unique<TruncatedSeries>(prefix * y_[code % r]);
  }
  return *slot;
}

TruncatedSeries SeriesSubstitution::operator()(const TruncatedSeries &s) {
  y_.front().check_compatible(s);
  TruncatedSeries out(s.rank_, s.class_bound_);
  out.add_multiple(*images_[0][0], s.value(0));
  for (unsigned n = 1; n <= s.class_bound_; ++n)
    for (std::size_t i = s.offset(n); i < s.offset(n + 1); ++i) {
      if (!s.nonzero(i))
        continue;
      const TruncatedSeries &img = image_of(n, i - s.offset(n));
      if (s.is_big())
        out.add_multiple(img, s.big_[i]);
      else
        out.add_multiple(img, s.small_[i]);
    }
  return out;
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s) {
  if (s.is_zero())
    return os << '0';
  bool first = true;
  for (const auto &[w, c] : s.coefficients()) {
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << '-';
    first = false;
    Integer mag = abs(c);
    if (w.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << '*';
    for (char ch : w)
      os << static_cast<char>(ch - 'a' + 'A');
  }
  return os;
}

} // namespace nilstab
