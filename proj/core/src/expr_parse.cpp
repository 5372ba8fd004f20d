#include <optional>
#include <sstream>

#include "jetgal/expr.hpp"

namespace jetgal::expr {

namespace {

enum class Tok {
  ident, integer, plus, minus, star, slash, caret,
  lparen, rparen, comma, lbracket, rbracket, wedge, end,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1, col = 1;
};

[[noreturn]] void bad(const Token& t, const std::string& what) {
  std::ostringstream os;
  os << t.line << ":" << t.col << ": " << what;
  if (t.kind != Tok::end) os << " at '" << t.text << "'";
  raise(errc::syntax_error, os.str());
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
      ++pos_;
    }
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::end;
      cur_.text.clear();
      return;
    }
    char c = text_[pos_];
    auto one = [&](Tok k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      cur_.kind = Tok::ident;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        ++pos_;
        ++col_;
      }
      cur_.kind = Tok::integer;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    switch (c) {
      case '+': one(Tok::plus); return;
      case '-': one(Tok::minus); return;
      case '*': one(Tok::star); return;
      case '^': one(Tok::caret); return;
      case '(': one(Tok::lparen); return;
      case ')': one(Tok::rparen); return;
      case ',': one(Tok::comma); return;
      case '[': one(Tok::lbracket); return;
      case ']': one(Tok::rbracket); return;
      case '/':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
          cur_.kind = Tok::wedge;
          cur_.text = "/\\";
          pos_ += 2;
          col_ += 2;
        } else {
          one(Tok::slash);
        }
        return;
      default: {
        cur_.kind = Tok::end;
        cur_.text = std::string(1, c);
        Token t = cur_;
        raise(errc::syntax_error, std::to_string(line_) + ":" + std::to_string(col_) +
                                      ": unexpected character '" + t.text + "'");
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
public:
  Parser(const std::string& text, const ParseContext& ctx)
      : lex_(text), ctx_(ctx), jets_(ctx.chart, 0) {}

  Value parse_all() {
    Value v = parse_wedge();
    if (lex_.peek().kind != Tok::end) bad(lex_.peek(), "trailing input");
    return v;
  }

private:
  // value helpers --------------------------------------------------------
  static bool is_rf(const Value& v) { return std::holds_alternative<RationalFunction>(v); }
  static const RationalFunction& rf(const Value& v) { return std::get<RationalFunction>(v); }
  static const DifferentialForm& form(const Value& v) { return std::get<DifferentialForm>(v); }

  DifferentialForm as_form(const Value& v) {
    if (is_rf(v)) return DifferentialForm::function(ctx_.chart, rf(v));
    return form(v);
  }

  Value neg(const Value& v) {
    if (is_rf(v)) return Value(-rf(v));
    return Value(-form(v));
  }

  Value add(const Value& a, const Value& b, const Token& at, int sign) {
    if (is_rf(a) && is_rf(b))
      return Value(sign > 0 ? rf(a) + rf(b) : rf(a) - rf(b));
    if (!is_rf(a) && !is_rf(b))
      return Value(sign > 0 ? form(a) + form(b) : form(a) - form(b));
    bad(at, "cannot add a form and a function");
  }

  Value mul(const Value& a, const Value& b, const Token& at) {
    if (is_rf(a) && is_rf(b)) return Value(rf(a) * rf(b));
    if (is_rf(a)) return Value(form(b).scaled(rf(a)));
    if (is_rf(b)) return Value(form(a).scaled(rf(b)));
    bad(at, "use /\\ to multiply forms");
  }

  Value div(const Value& a, const Value& b, const Token& at) {
    if (!is_rf(b)) bad(at, "cannot divide by a form");
    if (rf(b).is_zero()) bad(at, "division by zero");
    if (is_rf(a)) return Value(rf(a) / rf(b));
    return Value(form(a).scaled(rf(b).inverse()));
  }

  // grammar ---------------------------------------------------------------
  Value parse_wedge() {
    Value v = parse_sum();
    while (lex_.peek().kind == Tok::wedge) {
      lex_.take();
      Value r = parse_sum();
      v = Value(wedge(as_form(v), as_form(r)));
    }
    return v;
  }

  Value parse_sum() {
    Value v = parse_product();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      Token op = lex_.take();
      Value r = parse_product();
      v = add(v, r, op, op.kind == Tok::plus ? 1 : -1);
    }
    return v;
  }

  Value parse_product() {
    Value v = parse_unary();
    while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
      Token op = lex_.take();
      Value r = parse_unary();
      v = op.kind == Tok::star ? mul(v, r, op) : div(v, r, op);
    }
    return v;
  }

  Value parse_unary() {
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      return neg(parse_unary());
    }
    return parse_power();
  }

  long parse_exponent() {
    Token t = lex_.take();
    if (t.kind != Tok::integer) bad(t, "exponent must be an integer literal");
    long e = std::stol(t.text);
    if (lex_.peek().kind == Tok::caret) { // right-associative chain
      lex_.take();
      long rest = parse_exponent();
      long acc = 1;
      for (long i = 0; i < rest; ++i) {
        acc *= e;
        if (acc > 1'000'000) bad(t, "exponent too large");
      }
      e = acc;
    }
    return e;
  }

  Value parse_power() {
    Value v = parse_primary();
    if (lex_.peek().kind == Tok::caret) {
      Token op = lex_.take();
      long e = parse_exponent();
      if (!is_rf(v)) bad(op, "cannot exponentiate a form");
      return Value(rf(v).pow(e));
    }
    return v;
  }

  Value parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::integer:
        return Value(RationalFunction(Scalar::from_string(t.text)));
      case Tok::lparen: {
        Value v = parse_wedge();
        Token close = lex_.take();
        if (close.kind != Tok::rparen) bad(close, "expected ')'");
        return v;
      }
      case Tok::ident:
        return parse_ident(t);
      default:
        bad(t, "expected an expression");
    }
  }

  Value parse_ident(const Token& t) {
    if (t.text == "d" && lex_.peek().kind == Tok::lparen) {
      lex_.take();
      Token name = lex_.take();
      if (name.kind != Tok::ident) bad(name, "expected a coordinate name in d(...)");
      Token close = lex_.take();
      if (close.kind != Tok::rparen) bad(close, "expected ')'");
      Symbol s(name.text);
      if (!ctx_.chart.fiber_index(s))
        bad(name, "'" + name.text + "' is not a fiber coordinate");
      return Value(DifferentialForm::coordinate(ctx_.chart, s));
    }
    if (lex_.peek().kind == Tok::lbracket) {
      if (!ctx_.allow_jets) bad(t, "jet variables are not allowed here");
      lex_.take();
      std::vector<unsigned> idx;
      for (;;) {
        Token n = lex_.take();
        if (n.kind != Tok::integer) bad(n, "expected an integer jet index");
        idx.push_back((unsigned)std::stoul(n.text));
        Token sep = lex_.take();
        if (sep.kind == Tok::rbracket) break;
        if (sep.kind != Tok::comma) bad(sep, "expected ',' or ']'");
      }
      Symbol base(t.text);
      auto fiber = ctx_.chart.fiber_index(base);
      if (!fiber) {
        std::ostringstream os;
        os << t.line << ":" << t.col << ": '" << t.text << "' is not a fiber coordinate";
        raise(errc::unknown_symbol, os.str());
      }
      if (idx.size() != ctx_.chart.fiber_dim())
        bad(t, "jet index length must equal the fiber dimension");
      return Value(RationalFunction::variable(
          jets_.jet_symbol(*fiber, MultiIndex(std::move(idx)))));
    }
    Symbol s(t.text);
    if (ctx_.chart.contains(s)) return Value(RationalFunction::variable(s));
    if (auto ext = current_extension(); ext && ext->generator() == t.text)
      return Value(RationalFunction(Scalar::generator_power(1)));
    std::ostringstream os;
    os << t.line << ":" << t.col << ": unknown symbol '" << t.text << "'";
    raise(errc::unknown_symbol, os.str());
  }

  Lexer lex_;
  const ParseContext& ctx_;
  JetContext jets_;
};

} // namespace

Value parse(const std::string& text, const ParseContext& ctx) {
  Parser p(text, ctx);
  return p.parse_all();
}

RationalFunction parse_rational(const std::string& text, const ParseContext& ctx) {
  Value v = parse(text, ctx);
  if (auto* f = std::get_if<RationalFunction>(&v)) return *f;
  raise(errc::syntax_error, "expected a function, got a form");
}

DifferentialForm parse_form(const std::string& text, const ParseContext& ctx) {
  Value v = parse(text, ctx);
  if (auto* w = std::get_if<DifferentialForm>(&v)) return *w;
  return DifferentialForm::function(ctx.chart, std::get<RationalFunction>(v));
}

} // namespace jetgal::expr
