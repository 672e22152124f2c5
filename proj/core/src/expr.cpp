#include "isotypic/expr.hpp"

#include <cctype>
#include <optional>

namespace isotypic {

namespace {

struct Token {
  enum class Type { number, ident, op, end };
  Type type = Type::end;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::number, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Type::ident, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::string_view("+-*/^(){}").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::op, std::string(1, c)});
      ++i;
    } else {
      throw ValidationError("unexpected character '" + std::string(1, c) + "' in expression '" + std::string(s) + "'");
    }
  }
  out.push_back({Token::Type::end, ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().type != Token::Type::end) fail("trailing input '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_op(const char* op) const { return peek().type == Token::Type::op && peek().text == op; }
  Token take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse expression '" + std::string(text_) + "': " + why);
  }
  void expect(const char* op) {
    if (!is_op(op)) fail(std::string("expected '") + op + "'");
    ++pos_;
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (is_op("+") || is_op("-")) {
      bool plus = take().text == "+";
      lhs = binary(plus ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), term());
    }
    return lhs;
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.type == Token::Type::number || t.type == Token::Type::ident ||
           (t.type == Token::Type::op && (t.text == "(" || t.text == "{"));
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (is_op("*")) {
        ++pos_;
        lhs = binary(Expr::Kind::mul, std::move(lhs), unary());
      } else if (is_op("/")) {
        ++pos_;
        lhs = binary(Expr::Kind::div, std::move(lhs), unary());
      } else if (starts_primary()) {
        lhs = binary(Expr::Kind::mul, std::move(lhs), power());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (is_op("-")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::neg;
      e.args.push_back(unary());
      return e;
    }
    if (is_op("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  long exponent() {
    const char* close = nullptr;
    if (is_op("{")) close = "}";
    else if (is_op("(")) close = ")";
    if (close) ++pos_;
    bool negative = false;
    if (is_op("-") || is_op("+")) negative = take().text == "-";
    if (peek().type != Token::Type::number) fail("expected an integer exponent");
    long v = std::stol(take().text);
    if (close) expect(close);
    return negative ? -v : v;
  }

  Expr power() {
    Expr base = primary();
    if (is_op("^")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::pow;
      e.exponent = exponent();
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.type == Token::Type::number) {
      Expr e;
      e.kind = Expr::Kind::number;
      e.number = Rational(Integer(take().text));
      return e;
    }
    if (t.type == Token::Type::ident) {
      std::string name = take().text;
      if (is_op("(")) {
        ++pos_;
        Expr e;
        e.kind = Expr::Kind::call;
        e.name = std::move(name);
        e.args.push_back(expr());
        expect(")");
        return e;
      }
      Expr e;
      e.kind = Expr::Kind::symbol;
      e.name = std::move(name);
      return e;
    }
    if (is_op("(")) {
      ++pos_;
      Expr e = expr();
      expect(")");
      return e;
    }
    if (is_op("{")) {
      ++pos_;
      Expr e = expr();
      expect("}");
      return e;
    }
    fail(t.type == Token::Type::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> split_identifier(const std::string& ident, const std::vector<std::string>& known) {
  // best[i]: a split of the suffix starting at i, found right to left.
  const std::size_t n = ident.size();
  std::vector<std::optional<std::vector<std::string>>> best(n + 1);
  best[n] = std::vector<std::string>{};
  for (std::size_t i = n; i-- > 0;) {
    std::size_t longest = 0;
    for (const auto& k : known) {
      if (k.empty() || k.size() <= longest || ident.compare(i, k.size(), k) != 0 || !best[i + k.size()]) continue;
      longest = k.size();
      std::vector<std::string> split{k};
      split.insert(split.end(), best[i + k.size()]->begin(), best[i + k.size()]->end());
      best[i] = std::move(split);
    }
  }
  return best[0] ? *best[0] : std::vector<std::string>{};
}

}  // namespace isotypic
