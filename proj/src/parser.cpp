#include "superfed/parser.hpp"

#include <cctype>

#include "superfed/errors.hpp"

namespace superfed {

namespace {

constexpr unsigned max_exponent = 256;
constexpr unsigned max_depth = 256;

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart) : text_(text), chart_(chart) {}

  Superfunction parse() {
    Superfunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

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

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > max_depth) parser.fail("expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Superfunction expr() {
    DepthGuard guard(*this);
    Superfunction value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Superfunction term() {
    Superfunction value = unary();
    while (true) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_ - 1;
        Superfunction divisor = unary();
        if (!divisor.has_invertible_body()) {
          throw parse_error("division by a superfunction with zero body", at);
        }
        value = value * invert(divisor);
      } else {
        return value;
      }
    }
  }

  Superfunction unary() {
    DepthGuard guard(*this);
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Superfunction power() {
    Superfunction base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.size() > 3 || std::stoul(std::string(digits)) > max_exponent) {
      pos_ = start;
      fail("exponent too large");
    }
    unsigned e = static_cast<unsigned>(std::stoul(std::string(digits)));
    Superfunction result = chart_.constant(Rational(1));
    Superfunction square = base;
    while (e > 0) {
      if (e & 1U) result = result * square;
      e >>= 1U;
      if (e > 0) square = square * square;
    }
    return result;
  }

  Superfunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Superfunction value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return chart_.constant(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = chart_.index_of(name);
      if (!index) throw parse_error("unknown identifier '" + std::string(name) + "'", start);
      return chart_.coordinate_function(*index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Chart& chart_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

}  // namespace

Superfunction parse_expression(std::string_view text, const Chart& chart) {
  return Parser(text, chart).parse();
}

}  // namespace superfed
