#include "dismal/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace dismal {

namespace {

struct Token {
  enum Kind { Num, Plus, Star, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '*' || c == '(' || c == ')') {
      const auto kind = c == '+' ? Token::Plus : c == '*' ? Token::Star : c == '(' ? Token::LParen : Token::RParen;
      out.push_back({kind, std::string(1, c), i++});
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '@') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Num, std::string(s.substr(start, i - start)), start});
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Base base) : tokens_(std::move(tokens)), base_(base) {}

  Number parse_all() {
    Number v = sum();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(peek().pos));
  }

  Number sum() {
    Number v = product();
    while (peek().kind == Token::Plus) {
      ++pos_;
      v = add(v, product());
    }
    return v;
  }

  Number product() {
    Number v = atom();
    while (peek().kind == Token::Star) {
      ++pos_;
      v = mul(v, atom());
    }
    return v;
  }

  Number atom() {
    const Token& t = peek();
    if (t.kind == Token::Num) {
      ++pos_;
      return parse(t.text, base_);
    }
    if (t.kind == Token::LParen) {
      ++pos_;
      Number v = sum();
      if (peek().kind != Token::RParen) fail("expected ')'");
      ++pos_;
      return v;
    }
    fail(t.kind == Token::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  Base base_;
  std::size_t pos_ = 0;
};

}  // namespace

Number evaluate(std::string_view expr, std::optional<Base> default_base) {
  auto tokens = tokenize(expr);
  std::optional<Base> explicit_base;
  for (const auto& t : tokens) {
    if (t.kind != Token::Num) continue;
    const auto at = t.text.find('@');
    if (at == std::string::npos) continue;
    const Base b = parse(t.text).base();
    if (explicit_base && *explicit_base != b) {
      throw BaseMismatch("expression mixes bases " + std::to_string(explicit_base->radix()) + " and " +
                         std::to_string(b.radix()));
    }
    explicit_base = b;
  }
  const Base base = explicit_base.value_or(default_base.value_or(kDecimal));
  return Parser(std::move(tokens), base).parse_all();
}

}  // namespace dismal
