#include <cctype>
#include <regex>

#include "ncdioph/system.hpp"

namespace ncd {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Int, Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += advance();
    } else if (std::string("+-*^/()=;,").find(c) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = advance();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    return t;
  }

  /// Raw text up to the next ';' outside parentheses, consuming the ';'.
  std::string raw_until_semicolon() {
    std::string out;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        skip_space_and_comments();
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ';' && depth == 0) {
        advance();
        return out;
      }
      out += advance();
    }
    throw ParseError("missing ';' after structure descriptor", line_, column_);
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

bool is_variable_name(const std::string& name) {
  static const std::regex var("x[0-9]+|_y[0-9]+");
  return std::regex_match(name, var);
}

class Parser {
 public:
  Parser(Lexer& lex, const Structure& s) : lex_(lex), s_(s) { tok_ = lex_.next(); }

  const Token& peek() const { return tok_; }
  bool at_punct(const char* p) const { return tok_.kind == Token::Kind::Punct && tok_.text == p; }
  bool at_end() const { return tok_.kind == Token::Kind::End; }
  Token take() {
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }
  void expect(const char* p) {
    if (!at_punct(p)) fail(std::string("expected '") + p + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string found = tok_.kind == Token::Kind::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError(msg + ", found " + found, tok_.line, tok_.column);
  }

  Term expr() {
    Term t = product();
    while (at_punct("+") || at_punct("-")) {
      bool plus = take().text == "+";
      Term rhs = product();
      t = plus ? make_add(t, rhs) : make_sub(t, rhs);
    }
    return t;
  }

 private:
  Term product() {
    Term t = unary();
    while (at_punct("*")) {
      take();
      t = make_mul(t, unary());
    }
    return t;
  }

  Term unary() {
    if (at_punct("-")) {
      take();
      return make_neg(unary());
    }
    return power();
  }

  Term power() {
    Term base = atom();
    if (!at_punct("^")) return base;
    Token caret = take();
    bool negative = false;
    if (at_punct("-")) {
      take();
      negative = true;
    }
    if (peek().kind != Token::Kind::Int) fail("expected an integer exponent");
    Token e = take();
    unsigned long k = std::stoul(e.text);
    if (!negative) return make_pow(base, k);
    if (!is_const(base)) throw ParseError("negative exponent on a non-constant", caret.line, caret.column);
    auto inv = base->value->unit_inverse();
    if (!inv) throw ParseError(base->value->to_string() + " is not a unit", caret.line, caret.column);
    return make_const(inv->pow(k));
  }

  Term atom() {
    if (at_punct("(")) {
      take();
      Term t = expr();
      expect(")");
      take();
      return t;
    }
    if (peek().kind == Token::Kind::Int) return literal();
    if (peek().kind == Token::Kind::Ident) {
      Token id = take();
      if (is_variable_name(id.text)) return make_var(id.text);
      auto e = Element::named(s_, id.text);
      if (!e) throw ParseError("unknown identifier '" + id.text + "' in " + s_.describe(), id.line, id.column);
      return make_const(*e);
    }
    fail("expected an operand");
  }

  Term literal() {
    Token n = take();
    mpq_class q(mpz_class(n.text));
    if (at_punct("/")) {
      take();
      if (peek().kind != Token::Kind::Int) fail("expected a denominator");
      mpz_class den(take().text);
      if (den == 0) throw ParseError("zero denominator", n.line, n.column);
      q = mpq_class(q.get_num(), den);
      q.canonicalize();
    }
    if (peek().kind == Token::Kind::Ident && peek().text == "mod") {
      take();
      if (peek().kind != Token::Kind::Int) fail("expected a modulus");
      Token p = take();
      if (s_.field.kind != Field::Kind::Prime || std::to_string(s_.field.modulus) != p.text)
        throw ParseError("literal mod " + p.text + " does not belong to " + s_.describe(), p.line, p.column);
    }
    try {
      return make_const(Element::scalar(s_, Scalar::rational(s_.field, q)));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), n.line, n.column);
    }
  }

  Lexer& lex_;
  const Structure& s_;
  Token tok_;
};

}  // namespace

EqSystem parse_system(const std::string& text) {
  Lexer lex(text);
  Token head = lex.next();
  if (head.kind != Token::Kind::Ident || head.text != "structure")
    throw ParseError("expected 'structure <desc>;' header", head.line, head.column);
  std::string desc = lex.raw_until_semicolon();
  Structure s;
  try {
    s = Structure::parse(desc);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), head.line, head.column);
  }
  EqSystem sys(s);
  Parser p(lex, sys.structure);
  while (!p.at_end()) {
    if (p.at_punct(";")) {
      p.take();
      continue;
    }
    Term lhs = p.expr();
    p.expect("=");
    p.take();
    Term rhs = p.expr();
    sys.add_equation(is_zero_const(rhs) ? lhs : make_sub(lhs, rhs));
    if (!p.at_end()) {
      p.expect(";");
      p.take();
    }
  }
  return sys;
}

Term parse_term(const std::string& text, const Structure& s) {
  Lexer lex(text);
  Parser p(lex, s);
  Term t = p.expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

Assignment parse_assignment(const std::string& text, const Structure& s) {
  Lexer lex(text);
  Parser p(lex, s);
  Assignment out;
  while (!p.at_end()) {
    if (p.at_punct(",") || p.at_punct(";")) {
      p.take();
      continue;
    }
    Token name = p.take();
    if (name.kind != Token::Kind::Ident || !is_variable_name(name.text))
      throw ParseError("expected a variable name", name.line, name.column);
    p.expect("=");
    p.take();
    Term value = p.expr();
    if (!is_const(value)) throw ParseError("binding for " + name.text + " is not constant", name.line, name.column);
    out.insert_or_assign(name.text, *value->value);
  }
  return out;
}

}  // namespace ncd
