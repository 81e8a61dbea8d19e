#include "parsers.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace fixcalc {

using fixpoint::analyses::Expr;
using fixpoint::analyses::FunctionDef;
using fixpoint::analyses::Grammar;
using fixpoint::analyses::GrammarElem;
using fixpoint::analyses::Production;
using fixpoint::analyses::Program;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Token {
  enum class Kind { ident, number, string, punct, end };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

// Shared tokenizer. Punctuation is single characters; `#` runs to end of
// line. Strings are double-quoted with \" and \\ escapes.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t l = line_, c = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Kind::end, "", l, c});
        return out;
      }
      char ch = text_[pos_];
      if (ident_start(ch)) {
        std::string s;
        while (pos_ < text_.size() && ident_char(text_[pos_])) s += advance();
        out.push_back({Token::Kind::ident, s, l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          s += advance();
        }
        out.push_back({Token::Kind::number, s, l, c});
      } else if (ch == '"') {
        advance();
        std::string s;
        for (;;) {
          if (pos_ >= text_.size() || text_[pos_] == '\n') {
            throw ParseError(l, c, "unterminated string");
          }
          char d = advance();
          if (d == '"') break;
          if (d == '\\' && pos_ < text_.size()) d = advance();
          s += d;
        }
        out.push_back({Token::Kind::string, s, l, c});
      } else {
        out.push_back({Token::Kind::punct, std::string(1, advance()), l, c});
      }
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::end: return "end of input";
    case Token::Kind::string: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::vector<Production> prods;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                             : nl - start);
    ++line_no;
    std::vector<Token> toks = Lexer(line).run();
    for (auto& t : toks) t.line = line_no;
    if (toks.front().kind != Token::Kind::end) {
      std::size_t i = 0;
      if (toks[i].kind != Token::Kind::ident) {
        throw ParseError(line_no, toks[i].column, "expected nonterminal, got " + describe(toks[i]));
      }
      Production p{toks[i++].text, {}};
      if (toks[i].kind != Token::Kind::punct || toks[i].text != ":") {
        throw ParseError(line_no, toks[i].column, "expected ':', got " + describe(toks[i]));
      }
      ++i;
      for (; toks[i].kind != Token::Kind::end; ++i) {
        const Token& t = toks[i];
        if (t.kind == Token::Kind::ident) {
          p.rhs.push_back(GrammarElem::nonterminal(t.text));
        } else if (t.kind == Token::Kind::string) {
          p.rhs.push_back(GrammarElem::terminal(t.text));
        } else if (t.kind == Token::Kind::punct && t.text == ";" &&
                   toks[i + 1].kind == Token::Kind::end) {
          // optional terminator
        } else {
          throw ParseError(line_no, t.column, "unexpected " + describe(t));
        }
      }
      prods.push_back(std::move(p));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return Grammar(std::move(prods));
}

namespace {

class ProgramParser {
 public:
  explicit ProgramParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    std::vector<FunctionDef> defs;
    while (peek().kind != Token::Kind::end) defs.push_back(definition());
    return Program(std::move(defs));
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, "expected " + what + ", got " + describe(t));
  }

  bool is_punct(const char* p) const {
    return peek().kind == Token::Kind::punct && peek().text == p;
  }
  bool is_keyword(const char* k) const {
    return peek().kind == Token::Kind::ident && peek().text == k;
  }
  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(peek(), std::string("'") + p + "'");
    next();
  }
  void expect_keyword(const char* k) {
    if (!is_keyword(k)) fail(peek(), std::string("'") + k + "'");
    next();
  }
  static bool reserved(const std::string& s) {
    return s == "fun" || s == "if" || s == "then" || s == "else";
  }
  std::string identifier() {
    if (peek().kind != Token::Kind::ident || reserved(peek().text)) fail(peek(), "identifier");
    return next().text;
  }

  FunctionDef definition() {
    expect_keyword("fun");
    FunctionDef d;
    d.name = identifier();
    expect_punct("(");
    if (!is_punct(")")) {
      d.params.push_back(identifier());
      while (is_punct(",")) {
        next();
        d.params.push_back(identifier());
      }
    }
    expect_punct(")");
    expect_punct("=");
    d.body = expr();
    return d;
  }

  Expr expr() {
    if (is_keyword("if")) {
      next();
      Expr c = expr();
      expect_keyword("then");
      Expr a = expr();
      expect_keyword("else");
      Expr b = expr();
      return Expr::cond(std::move(c), std::move(a), std::move(b));
    }
    Expr e = primary();
    while (is_punct("+")) {
      next();
      e = Expr::add(std::move(e), primary());
    }
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      next();
      try {
        return Expr::constant(std::stoll(t.text));
      } catch (const std::out_of_range&) {
        throw ParseError(t.line, t.column, "integer literal out of range");
      }
    }
    if (is_punct("(")) {
      next();
      Expr e = expr();
      expect_punct(")");
      return e;
    }
    std::string name = identifier();
    if (!is_punct("(")) return Expr::param(std::move(name));
    next();
    std::vector<Expr> args;
    if (!is_punct(")")) {
      args.push_back(expr());
      while (is_punct(",")) {
        next();
        args.push_back(expr());
      }
    }
    expect_punct(")");
    return Expr::call(std::move(name), std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return ProgramParser(Lexer(text).run()).run(); }

}  // namespace fixcalc
