#include "nilstab/glmod.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nilstab {

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  ModuleSpec parse() {
    ModuleSpec out = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("module spec: " + what + " at position " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token))
      fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  ModuleSpec expr() {
    ModuleSpec out = term();
    while (accept("+"))
      out = ModuleSpec::sum(out, term());
    return out;
  }

  ModuleSpec term() {
    ModuleSpec out = factor();
    while (accept("(x)"))
      out = ModuleSpec::tensor(out, factor());
    return out;
  }

  ModuleSpec factor() {
    skip_space();
    // "(x)" is only a tensor sign between factors; here '(' opens a group.
    if (accept("("))
      return finish_paren();
    std::size_t at = pos_;
    std::string name = identifier();
    if (name == "std")
      return ModuleSpec::standard();
    if (name == "dual")
      return ModuleSpec::dual_standard();
    if (name == "const") {
      if (!accept("("))
        return ModuleSpec::constant();
      FinAbPresentation g = group();
      expect(")");
      return ModuleSpec::constant(std::move(g));
    }
    if (name == "lie") {
      expect("(");
      unsigned long n = number();
      expect(")");
      if (n == 0)
        fail("lie degree must be at least 1");
      return ModuleSpec::lie_layer(static_cast<unsigned>(n));
    }
    if (name == "ext") {
      expect("(");
      unsigned long t = number();
      expect(",");
      ModuleSpec a = expr();
      expect(")");
      return ModuleSpec::exterior(static_cast<unsigned>(t), a);
    }
    if (name == "hom" || name == "tensor" || name == "sum") {
      expect("(");
      ModuleSpec a = expr();
      expect(",");
      ModuleSpec b = expr();
      expect(")");
      if (name == "hom")
        return ModuleSpec::hom(a, b);
      if (name == "tensor")
        return ModuleSpec::tensor(a, b);
      return ModuleSpec::sum(a, b);
    }
    pos_ = at;
    fail(name.empty() ? "expected a module constructor" : "unknown constructor '" + name + "'");
  }

  ModuleSpec finish_paren() {
    ModuleSpec inner = expr();
    expect(")");
    return inner;
  }

  FinAbPresentation group() {
    FinAbPresentation g;
    std::vector<Integer> torsion;
    do {
      skip_space();
      if (accept("0"))
        continue;
      expect("Z");
      if (accept("^")) {
        g.free_rank += number();
      } else if (accept("/")) {
        unsigned long d = number();
        if (d == 0)
          g.free_rank += 1;
        else if (d > 1)
          torsion.emplace_back(d);
      } else {
        g.free_rank += 1;
      }
    } while (accept("+"));
    // Normalize the torsion part to invariant factors.
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
      diag(i, i) = torsion[i];
    for (const auto &d : smith_diagonal(diag))
      if (d > 1)
        g.invariant_factors.push_back(d);
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

ModuleSpec parse_module_spec(std::string_view text) { return SpecParser(text).parse(); }

} // namespace nilstab
