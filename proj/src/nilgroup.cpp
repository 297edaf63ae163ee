#include "nilstab/nilgroup.hpp"

#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace nilstab {

GroupElement::GroupElement(unsigned rank, unsigned class_bound)
    : rank_(rank), class_bound_(class_bound) {
  if (rank == 0 || rank > kMaxRank)
    throw std::invalid_argument("GroupElement: rank out of range");
  if (class_bound == 0)
    throw std::invalid_argument("GroupElement: class bound must be positive");
}

GroupElement GroupElement::generator(unsigned rank, unsigned class_bound, unsigned i,
                                     const Integer &exponent) {
  return basic(rank, class_bound, Word(1, letter(i)), exponent);
}

GroupElement GroupElement::basic(unsigned rank, unsigned class_bound, const Word &lyndon_word,
                                 const Integer &exponent) {
  return from_exponents(rank, class_bound, Exponents{{lyndon_word, exponent}});
}

GroupElement GroupElement::from_exponents(unsigned rank, unsigned class_bound,
                                          const Exponents &exponents) {
  GroupElement g(rank, class_bound);
  for (const auto &[w, e] : exponents) {
    if (!is_lyndon(w))
      throw std::invalid_argument("GroupElement: '" + w + "' is not a Lyndon word");
    if (w.size() > class_bound)
      throw std::invalid_argument("GroupElement: '" + w + "' exceeds the class bound");
    for (char ch : w)
      if (letter_index(ch) >= rank)
        throw std::invalid_argument("GroupElement: letter outside rank in '" + w + "'");
    if (sgn(e) != 0)
      g.exponents_.emplace(w, e);
  }
  return g;
}

Integer GroupElement::exponent(const Word &w) const {
  auto it = exponents_.find(w);
  return it == exponents_.end() ? Integer(0) : it->second;
}

std::ostream &operator<<(std::ostream &os, const GroupElement &g) {
  if (g.is_identity())
    return os << '1';
  bool first = true;
  for (const auto &[w, e] : g.exponents()) {
    if (!first)
      os << " * ";
    first = false;
    if (w.size() == 1)
      os << w;
    else
      os << '[' << w << ']';
    if (e != 1)
      os << '^' << e;
  }
  return os;
}

namespace {

// Per basic commutator: x = M(b_w) - 1 and its nonzero powers x, x^2, ...
struct BasicSeries {
  TruncatedSeries series;
  std::vector<TruncatedSeries> x_powers;
};

class CommutatorSeriesCache {
public:
  static CommutatorSeriesCache &instance() {
    static CommutatorSeriesCache cache;
    return cache;
  }

  const BasicSeries &get(unsigned rank, unsigned class_bound, const Word &w) {
    Table *table;
    {
      std::lock_guard lock(mutex_);
      auto &slot = tables_[{rank, class_bound}];
      if (!slot)
        slot = std::make_unique<Table>(rank, class_bound);
      table = slot.get();
    }
    std::size_t index = table->index(w);
    {
      std::lock_guard lock(mutex_);
      if (table->entries[index])
        return *table->entries[index];
    }
    auto value = std::make_unique<BasicSeries>(build(rank, class_bound, w));
    std::lock_guard lock(mutex_);
    if (!table->entries[index])
      table->entries[index] = std::move(value);
    return *table->entries[index];
  }

private:
  // Entries indexed like series coefficients: offset(|w|) + base-r code of w.
  struct Table {
    Table(unsigned rank, unsigned class_bound) : rank(rank) {
      std::size_t width = 1;
      offsets.push_back(0);
      for (unsigned n = 0; n <= class_bound; ++n) {
        offsets.push_back(offsets.back() + width);
        width *= rank;
      }
      entries.resize(offsets.back());
    }
    std::size_t index(const Word &w) const {
      std::size_t code = 0;
      for (char ch : w)
        code = code * rank + letter_index(ch);
      return offsets[w.size()] + code;
    }
    unsigned rank;
    std::vector<std::size_t> offsets;
    std::vector<std::unique_ptr<BasicSeries>> entries;
  };

  BasicSeries build(unsigned rank, unsigned class_bound, const Word &w) {
    BasicSeries out{TruncatedSeries::one(rank, class_bound), {}};
    if (w.size() == 1) {
      out.series = TruncatedSeries::generator(rank, class_bound, letter_index(w[0]));
    } else {
      std::size_t k = standard_split(w);
      const TruncatedSeries &u = get(rank, class_bound, w.substr(0, k)).series;
      const TruncatedSeries &v = get(rank, class_bound, w.substr(k)).series;
      out.series = u.inverse() * v.inverse() * u * v;
    }
    TruncatedSeries x = out.series - TruncatedSeries::one(rank, class_bound);
    TruncatedSeries x_power = x;
    while (!x_power.is_zero()) {
      out.x_powers.push_back(x_power);
      x_power = x_power * x;
    }
    return out;
  }

  std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Table>> tables_;
};

// M(b_w)^e = sum_k binom(e, k) x^k.
TruncatedSeries basic_power(unsigned rank, unsigned class_bound, const Word &w,
                            const Integer &e) {
  const BasicSeries &b = CommutatorSeriesCache::instance().get(rank, class_bound, w);
  TruncatedSeries out = TruncatedSeries::one(rank, class_bound);
  for (std::size_t k = 0; k < b.x_powers.size(); ++k)
    out.add_multiple(b.x_powers[k], binomial(e, k + 1));
  return out;
}

void check_compatible(const GroupElement &g, const GroupElement &h) {
  if (g.rank() != h.rank() || g.class_bound() != h.class_bound())
    throw std::invalid_argument("group elements have different rank/class");
}

} // namespace

const TruncatedSeries &basic_commutator_series(unsigned rank, unsigned class_bound,
                                               const Word &lyndon_word) {
  if (!is_lyndon(lyndon_word) || lyndon_word.size() > class_bound)
    throw std::invalid_argument("basic_commutator_series: bad word '" + lyndon_word + "'");
  return CommutatorSeriesCache::instance().get(rank, class_bound, lyndon_word).series;
}

TruncatedSeries magnus_embed(const GroupElement &g) {
  TruncatedSeries s = TruncatedSeries::one(g.rank(), g.class_bound());
  for (const auto &[w, e] : g.exponents())
    s = s * basic_power(g.rank(), g.class_bound(), w, e);
  return s;
}

GroupElement magnus_peel(const TruncatedSeries &s) {
  const unsigned r = s.rank();
  const unsigned c = s.class_bound();
  if (!s.is_unit())
    throw std::domain_error("not a group element: constant term is not 1");
  GroupElement::Exponents exps;
  TruncatedSeries rest = s;
  for (unsigned n = 1; n <= c; ++n) {
    for (unsigned m = 1; m < n; ++m)
      if (!rest.homogeneous_part(m).is_zero())
        throw std::logic_error("magnus_peel: lower-degree residue survived peeling");
    AssocPoly residual = rest.degree_coefficients(n);
    if (residual.empty())
      continue;
    auto coords = lyndon_coordinates(std::move(residual));
    if (!coords)
      throw std::domain_error("not a group element: degree-" + std::to_string(n) +
                              " residual is not in the Lie span");
    // rest <- (prod_w M(w)^e_w)^-1 rest, the inverse taken in reverse order.
    TruncatedSeries layer_inverse = TruncatedSeries::one(r, c);
    for (auto it = coords->rbegin(); it != coords->rend(); ++it)
      layer_inverse = layer_inverse * basic_power(r, c, it->first, -it->second);
    rest = layer_inverse * rest;
    exps.insert(coords->begin(), coords->end());
  }
  if (rest != TruncatedSeries::one(r, c))
    throw std::logic_error("magnus_peel: residue after peeling all degrees");
  return GroupElement::from_exponents(r, c, exps);
}

GroupElement mul(const GroupElement &g, const GroupElement &h) {
  check_compatible(g, h);
  if (g.is_identity())
    return h;
  if (h.is_identity())
    return g;
  return magnus_peel(magnus_embed(g) * magnus_embed(h));
}

GroupElement inv(const GroupElement &g) {
  if (g.is_identity())
    return g;
  return magnus_peel(magnus_embed(g).inverse());
}

GroupElement comm(const GroupElement &g, const GroupElement &h) {
  check_compatible(g, h);
  TruncatedSeries sg = magnus_embed(g);
  TruncatedSeries sh = magnus_embed(h);
  return magnus_peel(sg.inverse() * sh.inverse() * sg * sh);
}

GroupElement power(const GroupElement &g, const Integer &e) {
  return magnus_peel(magnus_embed(g).power(e));
}

GroupElement truncate(const GroupElement &g, unsigned class_bound) {
  if (class_bound == 0 || class_bound > g.class_bound())
    throw std::invalid_argument("truncate: target class must satisfy 1 <= c' <= c");
  GroupElement::Exponents exps;
  for (const auto &[w, e] : g.exponents())
    if (w.size() <= class_bound)
      exps.emplace(w, e);
  return GroupElement::from_exponents(g.rank(), class_bound, exps);
}

GroupElement reinterpret(const GroupElement &g, unsigned rank, unsigned class_bound) {
  return GroupElement::from_exponents(rank, class_bound, g.exponents());
}

std::optional<unsigned> lcs_degree(const GroupElement &g) {
  if (g.is_identity())
    return std::nullopt;
  return static_cast<unsigned>(g.exponents().begin()->first.size());
}

LieElement degree_part(const GroupElement &g, unsigned n) {
  LieElement::Terms terms;
  for (const auto &[w, e] : g.exponents())
    if (w.size() == n)
      terms.emplace(w, e);
  return LieElement::from_terms(g.rank(), g.class_bound(), terms);
}

LieElement lcs_class(const GroupElement &g) {
  auto n = lcs_degree(g);
  if (!n)
    return LieElement(g.rank(), g.class_bound());
  return degree_part(g, *n);
}

bool center_test(const GroupElement &g) {
  for (unsigned i = 0; i < g.rank(); ++i)
    if (!comm(g, GroupElement::generator(g.rank(), g.class_bound(), i)).is_identity())
      return false;
  return true;
}

unsigned h1_rank(unsigned r, unsigned c) {
  if (r == 0 || c == 0)
    throw std::invalid_argument("h1_rank: r and c must be positive");
  return r;
}

Integer h2_rank(unsigned r, unsigned c) {
  if (r == 0 || c == 0)
    throw std::invalid_argument("h2_rank: r and c must be positive");
  return witt_rank(r, c + 1);
}

} // namespace nilstab
