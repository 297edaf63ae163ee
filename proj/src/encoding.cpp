#include "nilstab/encoding.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nilstab {

std::string format_element(const GroupElement &g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

namespace {

class ElementParser {
public:
  ElementParser(std::string_view text, unsigned rank, unsigned class_bound)
      : text_(text), rank_(rank), class_bound_(class_bound) {}

  GroupElement parse() {
    TruncatedSeries s = product();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return magnus_peel(s);
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("element syntax: " + what + " at position " +
                                std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  TruncatedSeries product() {
    TruncatedSeries s = factor();
    while (accept('*'))
      s = s * factor();
    return s;
  }

  TruncatedSeries factor() {
    TruncatedSeries base = atom();
    if (!accept('^'))
      return base;
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+")
      fail("expected an integer exponent");
    if (digits[0] == '+')
      digits.erase(0, 1);
    return base.power(Integer(digits));
  }

  TruncatedSeries atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      TruncatedSeries s = product();
      if (!accept(')'))
        fail("expected ')'");
      return s;
    }
    if (ch == '1') {
      ++pos_;
      return TruncatedSeries::one(rank_, class_bound_);
    }
    if (ch == '[') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Word w(text_.substr(start, pos_ - start));
      if (!accept(']'))
        fail("expected ']'");
      return basic(w);
    }
    if (std::islower(static_cast<unsigned char>(ch))) {
      ++pos_;
      return basic(Word(1, ch));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  TruncatedSeries basic(const Word &w) {
    if (w.empty())
      fail("empty bracket");
    for (char ch : w)
      if (letter_index(ch) >= rank_)
        fail("letter '" + std::string(1, ch) + "' outside rank " + std::to_string(rank_));
    if (!is_lyndon(w))
      fail("'" + w + "' is not a Lyndon word");
    if (w.size() > class_bound_)
      return TruncatedSeries::one(rank_, class_bound_); // trivial in this class
    return basic_commutator_series(rank_, class_bound_, w);
  }

  std::string_view text_;
  unsigned rank_;
  unsigned class_bound_;
  std::size_t pos_ = 0;
};

} // namespace

GroupElement parse_element(std::string_view text, unsigned rank, unsigned class_bound) {
  return ElementParser(text, rank, class_bound).parse();
}

nlohmann::json integer_to_json(const Integer &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json &j) {
  if (j.is_number_integer())
    return Integer(j.get<long>());
  if (j.is_string())
    return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

nlohmann::json matrix_to_json(const IntMatrix &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(integer_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw std::invalid_argument("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

nlohmann::json element_to_json(const GroupElement &g) {
  nlohmann::json exps = nlohmann::json::array();
  for (const auto &[w, e] : g.exponents())
    exps.push_back({w, integer_to_json(e)});
  return {{"rank", g.rank()}, {"class", g.class_bound()}, {"exponents", exps}};
}

GroupElement element_from_json(const nlohmann::json &j) {
  GroupElement::Exponents exps;
  for (const auto &pair : j.at("exponents"))
    exps.emplace(pair.at(0).get<std::string>(), integer_from_json(pair.at(1)));
  return GroupElement::from_exponents(j.at("rank").get<unsigned>(), j.at("class").get<unsigned>(),
                                      exps);
}

nlohmann::json endo_to_json(const Endo &e) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto &g : e.images())
    images.push_back(element_to_json(g));
  return {{"rank", e.rank()}, {"class", e.class_bound()}, {"images", images}};
}

Endo endo_from_json(const nlohmann::json &j) {
  std::vector<GroupElement> images;
  for (const auto &img : j.at("images"))
    images.push_back(element_from_json(img));
  Endo e = Endo::from_images(std::move(images));
  if (e.rank() != j.at("rank").get<unsigned>() || e.class_bound() != j.at("class").get<unsigned>())
    throw std::invalid_argument("endomorphism JSON: rank/class disagree with images");
  return e;
}

nlohmann::json presentation_to_json(const FinAbPresentation &p) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto &d : p.invariant_factors)
    factors.push_back(integer_to_json(d));
  return {{"free_rank", p.free_rank}, {"invariant_factors", factors}};
}

nlohmann::json scan_report_to_json(const ScanReport &report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto &e : report.entries) {
    nlohmann::json row = presentation_to_json(e.h0);
    row["r"] = e.r;
    row["group"] = e.h0.to_string();
    auto opt = [](const std::optional<bool> &b) -> nlohmann::json {
      return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
    };
    row["map_to_next_is_iso"] = opt(e.map_to_next_is_iso);
    row["first_map_is_iso"] = opt(e.first_map_is_iso);
    row["second_map_is_iso"] = opt(e.second_map_is_iso);
    row["stable"] = report.stabilized_from.has_value() && e.r >= *report.stabilized_from;
    entries.push_back(row);
  }
  return entries;
}

std::string scan_report_to_csv(const ScanReport &report) {
  std::ostringstream os;
  os << "r,free_rank,invariant_factors,map_to_next_is_iso\n";
  for (const auto &e : report.entries) {
    os << e.r << ',' << e.h0.free_rank << ',';
    for (std::size_t i = 0; i < e.h0.invariant_factors.size(); ++i)
      os << (i ? ";" : "") << e.h0.invariant_factors[i];
    os << ',';
    if (e.map_to_next_is_iso)
      os << (*e.map_to_next_is_iso ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

} // namespace nilstab
