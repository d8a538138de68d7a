#include "flexcore/parser.hpp"

#include <cctype>
#include <string>

#include "flexcore/errors.hpp"

namespace flexcore {

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // ident spelling or digit run
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, start, ""};
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_ = {Tok::integer, start,
                  std::string(text_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::ident, start,
                  std::string(text_.substr(start, pos_ - start))};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Tok::plus, start, "+"}; return;
      case '-': current_ = {Tok::minus, start, "-"}; return;
      case '*': current_ = {Tok::star, start, "*"}; return;
      case '^': current_ = {Tok::caret, start, "^"}; return;
      case '/': current_ = {Tok::slash, start, "/"}; return;
      case '(': current_ = {Tok::lparen, start, "("}; return;
      case ')': current_ = {Tok::rparen, start, ")"}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, 0, ""};
};

class Parser {
 public:
  Parser(std::string_view text, UniversePtr universe)
      : lexer_(text), universe_(std::move(universe)) {}

  Polynomial run() {
    Polynomial p = expr();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::end)
      throw ParseError("trailing input after expression", t.pos);
    return p;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (lexer_.peek().kind == Tok::plus) {
      lexer_.take();
    } else if (lexer_.peek().kind == Tok::minus) {
      lexer_.take();
      negate = true;
    }
    Polynomial sum = term();
    if (negate) sum = -sum;
    for (;;) {
      const Tok k = lexer_.peek().kind;
      if (k == Tok::plus) {
        lexer_.take();
        sum += term();
      } else if (k == Tok::minus) {
        lexer_.take();
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  Polynomial term() {
    Polynomial prod = factor();
    while (lexer_.peek().kind == Tok::star) {
      lexer_.take();
      prod *= factor();
    }
    return prod;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lexer_.peek().kind == Tok::caret) {
      lexer_.take();
      const Token e = lexer_.peek();
      if (e.kind != Tok::integer)
        throw ParseError("expected a non-negative integer exponent", e.pos);
      lexer_.take();
      base = base.pow(uint_value(e));
    }
    return base;
  }

  Polynomial atom() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case Tok::integer: {
        lexer_.take();
        BigInt num(t.text);
        if (lexer_.peek().kind == Tok::slash) {  // rational literal
          lexer_.take();
          const Token d = lexer_.peek();
          if (d.kind != Tok::integer)
            throw ParseError("expected an integer denominator", d.pos);
          lexer_.take();
          BigInt den(d.text);
          if (den.is_zero()) throw ParseError("zero denominator", d.pos);
          return Polynomial(universe_, Scalar(num, den));
        }
        return Polynomial(universe_, Scalar(std::move(num)));
      }
      case Tok::ident: {
        lexer_.take();
        const auto var = universe_->find(t.text);
        if (!var)
          throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return Polynomial::variable(universe_, *var);
      }
      case Tok::lparen: {
        lexer_.take();
        Polynomial inner = expr();
        const Token close = lexer_.peek();
        if (close.kind != Tok::rparen)
          throw ParseError("expected ')'", close.pos);
        lexer_.take();
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '('", t.pos);
    }
  }

  int uint_value(const Token& t) {
    // Exponents beyond the monomial range are rejected later anyway;
    // cap the conversion to avoid overflow on absurd literals.
    if (t.text.size() > 4)
      throw ParseError("exponent literal too large", t.pos);
    return std::stoi(t.text);
  }

  Lexer lexer_;
  UniversePtr universe_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            const UniversePtr& universe) {
  return Parser(text, universe).run();
}

}  // namespace flexcore
