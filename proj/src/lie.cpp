#include "nilstab/lie.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilstab {

bool is_lyndon(const Word &w) {
  if (w.empty())
    return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    // Compare w with its rotation starting at k.
    Word rot = w.substr(k) + w.substr(0, k);
    if (!(w < rot))
      return false;
  }
  return true;
}

std::size_t standard_split(const Word &w) {
  if (w.size() < 2)
    return 0;
  std::size_t best = 1;
  for (std::size_t k = 2; k < w.size(); ++k)
    if (w.compare(k, Word::npos, w, best, Word::npos) < 0)
      best = k;
  return best;
}

std::string LyndonBasisElement::bracketing() const {
  if (degree() == 1)
    return word;
  return "[" + make_lyndon(left()).bracketing() + "," + make_lyndon(right()).bracketing() + "]";
}

LyndonBasisElement make_lyndon(const Word &w) {
  if (!is_lyndon(w))
    throw std::invalid_argument("not a Lyndon word: '" + w + "'");
  return LyndonBasisElement{w, standard_split(w)};
}

int mobius(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("mobius: n must be positive");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    result = -result;
  }
  if (n > 1)
    result = -result;
  return result;
}

Integer witt_rank(unsigned r, unsigned n) {
  if (r == 0 || n == 0)
    throw std::invalid_argument("witt_rank: r and n must be positive");
  Integer sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0)
      continue;
    int mu = mobius(d);
    if (mu == 0)
      continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), r, n / d);
    sum += mu * power;
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n))
    throw std::logic_error("witt_rank: Moebius sum not divisible by n");
  return sum / n;
}

namespace {

// Duval's algorithm: all Lyndon words of length <= n in lexicographic order.
std::vector<Word> generate_lyndon_words(unsigned r, unsigned n) {
  std::vector<Word> out;
  if (r == 0 || n == 0)
    return out;
  std::vector<unsigned> w{0};
  while (!w.empty()) {
    if (w.size() == n) {
      Word word;
      for (unsigned x : w)
        word.push_back(letter(x));
      out.push_back(std::move(word));
    }
    std::size_t m = w.size();
    while (w.size() < n)
      w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == r - 1)
      w.pop_back();
    if (!w.empty())
      ++w.back();
  }
  return out;
}

class LieTables {
public:
  static LieTables &instance() {
    static LieTables tables;
    return tables;
  }

  const std::vector<Word> &words(unsigned r, unsigned n) {
    std::lock_guard lock(mutex_);
    auto &slot = words_[{r, n}];
    if (!slot)
      slot = std::make_unique<std::vector<Word>>(generate_lyndon_words(r, n));
    return *slot;
  }

  const AssocPoly &polynomial(const Word &w) {
    {
      std::lock_guard lock(mutex_);
      auto it = polys_.find(w);
      if (it != polys_.end())
        return *it->second;
    }
    auto poly = std::make_unique<AssocPoly>(build(w));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = polys_.try_emplace(w, std::move(poly));
    return *it->second;
  }

private:
  AssocPoly build(const Word &w) {
    if (!is_lyndon(w))
      throw std::invalid_argument("lie_polynomial: not a Lyndon word: '" + w + "'");
    if (w.size() == 1)
      return AssocPoly{{w, 1}};
    std::size_t k = standard_split(w);
    const AssocPoly &u = polynomial(w.substr(0, k));
    const AssocPoly &v = polynomial(w.substr(k));
    AssocPoly p = assoc_commutator(u, v, w.size());
    if (p.empty() || p.begin()->first != w || p.begin()->second != 1)
      throw std::logic_error("lie_polynomial: leading monomial of '" + w + "' is not w");
    return p;
  }

  std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<std::vector<Word>>> words_;
  std::map<Word, std::unique_ptr<AssocPoly>> polys_;
};

} // namespace

const std::vector<Word> &lyndon_words(unsigned r, unsigned n) {
  if (r > kMaxRank)
    throw std::invalid_argument("lyndon_words: rank exceeds alphabet size");
  return LieTables::instance().words(r, n);
}

std::vector<LyndonBasisElement> lyndon_basis(unsigned r, unsigned n) {
  std::vector<LyndonBasisElement> out;
  for (const auto &w : lyndon_words(r, n))
    out.push_back(LyndonBasisElement{w, standard_split(w)});
  return out;
}

const AssocPoly &lie_polynomial(const Word &lyndon_word) {
  return LieTables::instance().polynomial(lyndon_word);
}

AssocPoly assoc_multiply(const AssocPoly &x, const AssocPoly &y, std::size_t max_degree) {
  AssocPoly out;
  for (const auto &[u, a] : x) {
    if (u.size() > max_degree)
      break;
    for (const auto &[v, b] : y) {
      if (u.size() + v.size() > max_degree)
        break;
      Integer &slot = out[u + v];
      slot += a * b;
    }
  }
  std::erase_if(out, [](const auto &kv) { return sgn(kv.second) == 0; });
  return out;
}

void assoc_add_to(AssocPoly &acc, const AssocPoly &x, const Integer &scale) {
  for (const auto &[w, a] : x) {
    auto it = acc.try_emplace(w, 0).first;
    it->second += scale * a;
    if (sgn(it->second) == 0)
      acc.erase(it);
  }
}

AssocPoly assoc_commutator(const AssocPoly &x, const AssocPoly &y, std::size_t max_degree) {
  AssocPoly out = assoc_multiply(x, y, max_degree);
  assoc_add_to(out, assoc_multiply(y, x, max_degree), -1);
  return out;
}

std::optional<std::map<Word, Integer, DegLex>> lyndon_coordinates(AssocPoly p) {
  std::map<Word, Integer, DegLex> coords;
  while (!p.empty()) {
    auto [w, lambda] = *p.begin();
    if (!is_lyndon(w))
      return std::nullopt;
    coords.emplace(w, lambda);
    assoc_add_to(p, lie_polynomial(w), -lambda);
  }
  return coords;
}

AssocPoly substitute_linear(const AssocPoly &p, const IntMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("substitute_linear: matrix not square");
  // Images of single letters as linear forms.
  std::vector<AssocPoly> images(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (sgn(a(j, i)) != 0)
        images[i].emplace(Word(1, letter(static_cast<unsigned>(j))), a(j, i));

  std::map<Word, AssocPoly> prefix_cache;
  auto image_of = [&](auto &&self, const Word &w) -> const AssocPoly & {
    auto it = prefix_cache.find(w);
    if (it != prefix_cache.end())
      return it->second;
    AssocPoly value;
    if (w.empty()) {
      value.emplace(Word(), 1);
    } else {
      unsigned last = letter_index(w.back());
      if (last >= images.size())
        throw std::invalid_argument("substitute_linear: letter outside matrix size");
      value = assoc_multiply(self(self, w.substr(0, w.size() - 1)), images[last], w.size());
    }
    return prefix_cache.emplace(w, std::move(value)).first->second;
  };

  AssocPoly out;
  for (const auto &[w, c] : p)
    assoc_add_to(out, image_of(image_of, w), c);
  return out;
}

LieElement::LieElement(unsigned rank, unsigned class_bound)
    : rank_(rank), class_bound_(class_bound) {
  if (rank == 0 || rank > kMaxRank)
    throw std::invalid_argument("LieElement: rank out of range");
  if (class_bound == 0)
    throw std::invalid_argument("LieElement: class bound must be positive");
}

LieElement LieElement::basis(unsigned rank, unsigned class_bound, const Word &w,
                             const Integer &coefficient) {
  return from_terms(rank, class_bound, Terms{{w, coefficient}});
}

LieElement LieElement::from_terms(unsigned rank, unsigned class_bound, const Terms &terms) {
  LieElement x(rank, class_bound);
  for (const auto &[w, c] : terms) {
    if (!is_lyndon(w))
      throw std::invalid_argument("LieElement: key is not a Lyndon word: '" + w + "'");
    if (w.size() > class_bound)
      throw std::invalid_argument("LieElement: degree exceeds class bound: '" + w + "'");
    for (char ch : w)
      if (letter_index(ch) >= rank)
        throw std::invalid_argument("LieElement: letter outside rank: '" + w + "'");
    if (sgn(c) != 0)
      x.terms_.emplace(w, c);
  }
  return x;
}

LieElement LieElement::from_assoc(unsigned rank, unsigned class_bound, const AssocPoly &p) {
  auto coords = lyndon_coordinates(p);
  if (!coords)
    throw std::domain_error("polynomial is not in the Lie span");
  return from_terms(rank, class_bound, *coords);
}

Integer LieElement::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

LieElement LieElement::homogeneous_part(std::size_t degree) const {
  LieElement out(rank_, class_bound_);
  for (const auto &[w, c] : terms_)
    if (w.size() == degree)
      out.terms_.emplace(w, c);
  return out;
}

std::optional<std::size_t> LieElement::homogeneous_degree() const {
  if (terms_.empty())
    return std::nullopt;
  std::size_t d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d)
    return std::nullopt;
  return d;
}

AssocPoly LieElement::to_assoc() const {
  AssocPoly out;
  for (const auto &[w, c] : terms_)
    assoc_add_to(out, lie_polynomial(w), c);
  return out;
}

void LieElement::check_compatible(const LieElement &rhs) const {
  if (rank_ != rhs.rank_ || class_bound_ != rhs.class_bound_)
    throw std::invalid_argument("LieElement: rank/class mismatch");
}

LieElement LieElement::operator+(const LieElement &rhs) const {
  check_compatible(rhs);
  LieElement out = *this;
  for (const auto &[w, c] : rhs.terms_) {
    auto it = out.terms_.try_emplace(w, 0).first;
    it->second += c;
    if (sgn(it->second) == 0)
      out.terms_.erase(it);
  }
  return out;
}

LieElement LieElement::operator-(const LieElement &rhs) const { return *this + (-rhs); }

LieElement LieElement::operator-() const {
  LieElement out = *this;
  for (auto &kv : out.terms_)
    kv.second = -kv.second;
  return out;
}

LieElement LieElement::operator*(const Integer &scale) const {
  LieElement out(rank_, class_bound_);
  if (sgn(scale) == 0)
    return out;
  for (const auto &[w, c] : terms_)
    out.terms_.emplace(w, c * scale);
  return out;
}

std::ostream &operator<<(std::ostream &os, const LieElement &x) {
  if (x.is_zero())
    return os << '0';
  bool first = true;
  for (const auto &[w, c] : x.terms()) {
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << '-';
    first = false;
    Integer mag = abs(c);
    if (mag != 1)
      os << mag << '*';
    os << make_lyndon(w).bracketing();
  }
  return os;
}

LieElement lie_bracket(const LieElement &x, const LieElement &y) {
  if (x.rank() != y.rank() || x.class_bound() != y.class_bound())
    throw std::invalid_argument("lie_bracket: rank/class mismatch");
  AssocPoly p = assoc_commutator(x.to_assoc(), y.to_assoc(), x.class_bound());
  auto coords = lyndon_coordinates(std::move(p));
  if (!coords)
    throw std::logic_error("lie_bracket: commutator left the Lie span");
  return LieElement::from_terms(x.rank(), x.class_bound(), *coords);
}

LieElement lie_apply_matrix(const IntMatrix &a, const LieElement &x) {
  if (a.rows() != x.rank() || a.cols() != x.rank())
    throw std::invalid_argument("lie_apply_matrix: matrix size does not match rank");
  AssocPoly p = substitute_linear(x.to_assoc(), a);
  auto coords = lyndon_coordinates(std::move(p));
  if (!coords)
    throw std::logic_error("lie_apply_matrix: substitution left the Lie span");
  return LieElement::from_terms(x.rank(), x.class_bound(), *coords);
}

IntMatrix lie_layer_matrix(const IntMatrix &a, unsigned n) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("lie_layer_matrix: matrix not square");
  const unsigned r = static_cast<unsigned>(a.rows());
  const auto &words = lyndon_words(r, n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i)
    index.emplace(words[i], i);
  IntMatrix out(words.size(), words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    LieElement image = lie_apply_matrix(a, LieElement::basis(r, n, words[j]));
    for (const auto &[w, c] : image.terms())
      out(index.at(w), j) = c;
  }
  return out;
}

} // namespace nilstab
