#include "geomul/dsl/parser.hpp"

#include <array>

#include "geomul/dsl/lexer.hpp"

namespace geomul::dsl {

namespace {

constexpr std::array<std::string_view, 17> kKeywords{
    "point", "line", "num", "assert", "through", "parallel", "perp", "to", "xintercept",
    "gmul", "ginv", "gfracmul", "eq", "lt", "congruent", "area_eq", "intersect",
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ScriptAst script() {
    ScriptAst ast;
    skip_separators();
    while (peek().kind != TokenKind::end) {
      ast.statements.push_back(statement());
      if (peek().kind != TokenKind::end) {
        if (peek().kind != TokenKind::separator) fail("expected end of statement, found " + describe(peek()));
        skip_separators();
      }
    }
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }

  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SourceError(SourceErrorKind::parse, peek().pos, message);
  }

  void skip_separators() {
    while (peek().kind == TokenKind::separator) next();
  }

  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::ident && peek().text == word;
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) fail("expected '" + std::string(word) + "', found " + describe(peek()));
    next();
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  std::string identifier() {
    const Token& t = expect(TokenKind::ident, "an identifier");
    if (is_keyword(t.text)) {
      throw SourceError(SourceErrorKind::parse, t.pos, "'" + t.text + "' is a reserved word");
    }
    return t.text;
  }

  Statement statement() {
    SourcePos pos = peek().pos;
    if (at_word("point")) {
      next();
      PointDecl d;
      d.pos = pos;
      d.name = identifier();
      expect(TokenKind::equals, "'='");
      if (at_word("intersect")) {
        next();
        expect(TokenKind::lparen, "'('");
        d.intersect.push_back(line_ref());
        expect(TokenKind::comma, "','");
        d.intersect.push_back(line_ref());
        expect(TokenKind::rparen, "')'");
      } else {
        if (peek().kind != TokenKind::lparen) {
          fail("expected '(' or 'intersect', found " + describe(peek()));
        }
        d.literal = point_literal();
      }
      return d;
    }
    if (at_word("line")) {
      next();
      LineDecl d;
      d.pos = pos;
      d.name = identifier();
      expect(TokenKind::equals, "'='");
      d.expr = line_expr();
      return d;
    }
    if (at_word("num")) {
      next();
      NumDecl d;
      d.pos = pos;
      d.name = identifier();
      expect(TokenKind::equals, "'='");
      d.expr = num_expr();
      return d;
    }
    if (at_word("assert")) {
      next();
      AssertStmt a;
      a.pos = pos;
      a.pred = predicate();
      return a;
    }
    fail("expected 'point', 'line', 'num' or 'assert', found " + describe(peek()));
  }

  Rational number() {
    SourcePos pos = peek().pos;
    bool negative = false;
    if (peek().kind == TokenKind::minus) {
      negative = true;
      next();
    }
    std::string text = expect(TokenKind::integer, "a number").text;
    if (peek().kind == TokenKind::slash) {
      next();
      const Token& den = expect(TokenKind::integer, "a denominator");
      if (den.text.find_first_not_of('0') == std::string::npos) {
        throw SourceError(SourceErrorKind::parse, den.pos, "zero denominator");
      }
      text += "/" + den.text;
    }
    try {
      return Rational::parse((negative ? "-" : "") + text);
    } catch (const std::invalid_argument& e) {
      throw SourceError(SourceErrorKind::parse, pos, e.what());
    }
  }

  PointExpr point_literal() {
    PointExpr p;
    p.kind = PointExpr::Kind::literal;
    p.pos = expect(TokenKind::lparen, "'('").pos;
    p.x = number();
    expect(TokenKind::comma, "','");
    p.y = number();
    expect(TokenKind::rparen, "')'");
    return p;
  }

  PointExpr point() {
    if (peek().kind == TokenKind::lparen) return point_literal();
    if (peek().kind != TokenKind::ident) fail("expected a point, found " + describe(peek()));
    PointExpr p;
    p.kind = PointExpr::Kind::name;
    p.pos = peek().pos;
    p.name = identifier();
    return p;
  }

  LineRef line_ref() {
    LineRef r;
    r.pos = peek().pos;
    if (at_word("through")) {
      next();
      r.kind = LineRef::Kind::through;
      r.points.push_back(point());
      r.points.push_back(point());
      return r;
    }
    if (peek().kind != TokenKind::ident) fail("expected a line, found " + describe(peek()));
    r.kind = LineRef::Kind::name;
    r.name = identifier();
    return r;
  }

  LineExpr line_expr() {
    LineExpr e;
    e.pos = peek().pos;
    if (at_word("through")) {
      next();
      e.kind = LineExpr::Kind::through;
      e.points.push_back(point());
      e.points.push_back(point());
      return e;
    }
    if (at_word("parallel") || at_word("perp")) {
      e.kind = at_word("parallel") ? LineExpr::Kind::parallel : LineExpr::Kind::perp;
      next();
      expect_word("through");
      e.points.push_back(point());
      expect_word("to");
      e.target.push_back(line_ref());
      return e;
    }
    fail("expected 'through', 'parallel' or 'perp', found " + describe(peek()));
  }

  NumExpr num_expr() {
    NumExpr e;
    e.pos = peek().pos;
    if (peek().kind == TokenKind::minus || peek().kind == TokenKind::integer) {
      e.kind = NumExpr::Kind::literal;
      e.value = number();
      return e;
    }
    if (peek().kind != TokenKind::ident) fail("expected a number, found " + describe(peek()));
    auto call = [&](NumExpr::Kind kind, std::size_t arity) {
      next();
      e.kind = kind;
      expect(TokenKind::lparen, "'('");
      for (std::size_t k = 0; k < arity; ++k) {
        if (k > 0) expect(TokenKind::comma, "','");
        e.args.push_back(num_expr());
      }
      expect(TokenKind::rparen, "')'");
    };
    if (at_word("xintercept")) {
      next();
      e.kind = NumExpr::Kind::xintercept;
      expect(TokenKind::lparen, "'('");
      e.line.push_back(line_ref());
      expect(TokenKind::rparen, "')'");
    } else if (at_word("gmul")) {
      call(NumExpr::Kind::gmul, 2);
    } else if (at_word("ginv")) {
      call(NumExpr::Kind::ginv, 1);
    } else if (at_word("gfracmul")) {
      call(NumExpr::Kind::gfracmul, 4);
    } else {
      e.kind = NumExpr::Kind::name;
      e.name = identifier();
    }
    return e;
  }

  void triangle(Predicate& p) {
    for (int k = 0; k < 3; ++k) p.points.push_back(point());
  }

  Predicate predicate() {
    Predicate p;
    p.pos = peek().pos;
    if (peek().kind != TokenKind::ident) fail("expected a predicate, found " + describe(peek()));
    std::string word = peek().text;
    if (word == "eq" || word == "lt") {
      p.kind = word == "eq" ? Predicate::Kind::eq : Predicate::Kind::lt;
      next();
      expect(TokenKind::lparen, "'('");
      p.nums.push_back(num_expr());
      expect(TokenKind::comma, "','");
      p.nums.push_back(num_expr());
    } else if (word == "parallel") {
      p.kind = Predicate::Kind::parallel;
      next();
      expect(TokenKind::lparen, "'('");
      p.lines.push_back(line_ref());
      expect(TokenKind::comma, "','");
      p.lines.push_back(line_ref());
    } else if (word == "congruent" || word == "area_eq") {
      p.kind = word == "congruent" ? Predicate::Kind::congruent : Predicate::Kind::area_eq;
      next();
      expect(TokenKind::lparen, "'('");
      triangle(p);
      expect(TokenKind::comma, "','");
      triangle(p);
    } else {
      fail("expected 'eq', 'lt', 'parallel', 'congruent' or 'area_eq', found " + describe(peek()));
    }
    expect(TokenKind::rparen, "')'");
    return p;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) noexcept {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

ScriptAst parse(std::string_view source) { return Parser(tokenize(source)).script(); }

}  // namespace geomul::dsl
