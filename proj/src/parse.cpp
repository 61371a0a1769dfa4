#include "polarmaps/parse.hpp"

#include <cctype>
#include <string>

#include "polarmaps/errors.hpp"

namespace polarmaps {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "' (multiplication needs '*')",
                       pos_);
    }
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 6) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigRat value{BigInt(digits())};
      std::size_t save = pos_;
      if (accept('/')) {
        std::size_t at = pos_;
        BigInt den(digits());
        if (den == 0) throw ParseError("zero denominator", at);
        value /= den;
      } else {
        pos_ = save;
      }
      return Poly::constant(num_vars_, value);
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("unknown variable", at);
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string idx(text_.substr(start, pos_ - start));
      if (idx.size() > 6 || std::stoul(idx) >= num_vars_) {
        throw ParseError("variable x" + idx + " outside x0..x" + std::to_string(num_vars_ - 1),
                         at);
      }
      return Poly::variable(num_vars_, std::stoul(idx));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown variable", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw DimensionError("polynomial ring needs at least one variable");
  return Parser(text, num_vars).parse();
}

std::size_t infer_num_vars(std::string_view text) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 7)
      idx = idx * 10 + static_cast<std::size_t>(text[j++] - '0');
    if (j > i + 1) n = std::max(n, idx + 1);
  }
  return n;
}

ProjPoint parse_point(std::string_view text) {
  std::vector<BigRat> coords;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string part(text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                          : comma - start));
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    try {
      coords.push_back(parse_rational(part));
    } catch (const PreconditionError&) {
      throw ParseError("bad point coordinate '" + part + "'", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProjPoint(std::move(coords));
}

}  // namespace polarmaps
