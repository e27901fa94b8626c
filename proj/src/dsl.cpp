#include "dunklcas/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace dunklcas {

namespace {

constexpr int kMaxExponent = 64;

struct Token {
  enum class Type { number, ident, symbol, end };
  Type type = Type::end;
  std::string text;
  Rational value;
  std::size_t position = 0;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token &peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_ = Token{};
    current_.position = pos_;
    if (pos_ >= text_.size())
      return;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
      current_.type = Token::Type::number;
      current_.text = std::string(text_.substr(start, pos_ - start));
      try {
        current_.value = parse_rational(current_.text);
      } catch (const std::exception &) {
        throw ParseError("invalid number '" + current_.text + "'", start);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_]))
        ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      // J+, A1-, F+ ... carry their sign inside the identifier.
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-') &&
          parse_operator_name(ident + text_[pos_])) {
        ident += text_[pos_];
        ++pos_;
      }
      current_.type = Token::Type::ident;
      current_.text = std::move(ident);
      return;
    }
    if (std::string_view("+-*^(),").find(c) != std::string_view::npos) {
      current_.type = Token::Type::symbol;
      current_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

bool is_symbol(const Token &t, char c) {
  return t.type == Token::Type::symbol && t.text.size() == 1 && t.text[0] == c;
}

std::optional<std::size_t> mu_index(std::string_view ident) {
  if (ident.size() < 3 || !ident.starts_with("mu"))
    return std::nullopt;
  std::size_t k = 0;
  auto digits = ident.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits[0] == '0')
    return std::nullopt;
  return k;
}

class Parser {
public:
  Parser(std::string_view text, std::size_t dims) : lex_(text), dims_(dims) {}

  Expr parse_all() {
    Expr e = expr();
    const Token &t = lex_.peek();
    if (t.type != Token::Type::end)
      throw ParseError("unexpected '" + t.text + "'", t.position);
    return e;
  }

private:
  Expr expr() {
    Expr e = term();
    while (is_symbol(lex_.peek(), '+') || is_symbol(lex_.peek(), '-')) {
      Expr::Kind k = lex_.take().text == "+" ? Expr::Kind::add : Expr::Kind::sub;
      e = Expr::binary(k, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (is_symbol(lex_.peek(), '*')) {
      lex_.take();
      e = Expr::binary(Expr::Kind::mul, std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (is_symbol(lex_.peek(), '-')) {
      lex_.take();
      return Expr::unary(Expr::Kind::neg, unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!is_symbol(lex_.peek(), '^'))
      return base;
    lex_.take();
    bool negative = false;
    if (is_symbol(lex_.peek(), '-')) {
      lex_.take();
      negative = true;
    }
    Token t = lex_.take();
    if (t.type != Token::Type::number || t.value.get_den() != 1)
      throw ParseError("expected an integer exponent", t.position);
    if (t.value > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), t.position);
    int k = static_cast<int>(t.value.get_num().get_si());
    return Expr::pow(std::move(base), negative ? -k : k);
  }

  void expect(char c) {
    Token t = lex_.take();
    if (!is_symbol(t, c))
      throw ParseError(std::string("expected '") + c + "'", t.position);
  }

  Expr primary() {
    Token t = lex_.take();
    switch (t.type) {
    case Token::Type::end:
      throw ParseError("unexpected end of input", t.position);
    case Token::Type::number:
      return Expr::constant(BaseNumber(t.value));
    case Token::Type::symbol:
      if (t.text == "(") {
        Expr e = expr();
        expect(')');
        return e;
      }
      throw ParseError("unexpected '" + t.text + "'", t.position);
    case Token::Type::ident:
      break;
    }
    const std::string &id = t.text;
    if (id == "comm" || id == "acomm") {
      expect('(');
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(')');
      return Expr::binary(id == "comm" ? Expr::Kind::comm : Expr::Kind::acomm, std::move(a),
                          std::move(b));
    }
    if (id == "adjoint") {
      expect('(');
      Expr a = expr();
      expect(')');
      return Expr::unary(Expr::Kind::adjoint, std::move(a));
    }
    if (id == "i")
      return Expr::constant(BaseNumber::imaginary_unit());
    if (id == "sqrt2")
      return Expr::constant(BaseNumber::sqrt2());
    if (auto k = mu_index(id)) {
      if (*k > dims_)
        throw ParseError(id + " exceeds the " + std::to_string(dims_) + " parameters",
                         t.position);
      return Expr::mu(*k);
    }
    std::optional<OperatorName> name = parse_operator_name(id);
    if (!name)
      throw ParseError("unknown identifier '" + id + "'", t.position);
    if (is_indexed(name->kind) && name->index == 0)
      throw ParseError("variable index of '" + id + "' must be at least 1", t.position);
    if (required_dims(*name) > dims_)
      throw ParseError("'" + id + "' needs " + std::to_string(required_dims(*name)) +
                           " dimensions, have " + std::to_string(dims_),
                       t.position);
    return Expr::op(*name);
  }

  Lexer lex_;
  std::size_t dims_;
};

OperatorElement identity(std::size_t dims, const Scalar &c) {
  return OperatorElement(dims, c);
}

// Exact inverse of c * prod x_v^a_v R_v^e_v; nullopt if there is none.
std::optional<OperatorElement> invert(const OperatorElement &a) {
  if (a.term_count() != 1)
    return std::nullopt;
  const auto &[m, c] = *a.terms().begin();
  if (!c.constant_value())
    return std::nullopt;
  const std::size_t dims = a.vars();
  OperatorElement inv = identity(dims, Scalar(a.params(), c.constant_value()->inverse()));
  for (std::size_t v = 0; v < dims; ++v) {
    if (m[v].d != 0)
      return std::nullopt;
    // (x^a R)^-1 = R x^-a
    if (m[v].r)
      inv = inv * OperatorElement::reflection(dims, a.params(), v);
    if (m[v].x != 0)
      inv = inv * OperatorElement::coordinate(dims, a.params(), v, -m[v].x);
  }
  return inv;
}

bool atomic(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::parameter:
  case Expr::Kind::name:
  case Expr::Kind::comm:
  case Expr::Kind::acomm:
  case Expr::Kind::adjoint:
    return true;
  case Expr::Kind::number:
    return e.number.support() <= 1 && e.number.is_rational() &&
           sgn(e.number[BaseNumber::kOne]) >= 0;
  default:
    return false;
  }
}

std::string wrapped(const Expr &e) { return atomic(e) ? render(e) : "(" + render(e) + ")"; }

} // namespace

Expr Expr::constant(BaseNumber value) {
  Expr e;
  e.kind = Kind::number;
  e.number = std::move(value);
  return e;
}

Expr Expr::mu(std::size_t index) {
  Expr e;
  e.kind = Kind::parameter;
  e.parameter = index;
  return e;
}

Expr Expr::op(OperatorName name) {
  Expr e;
  e.kind = Kind::name;
  e.name = name;
  return e;
}

Expr Expr::unary(Kind kind, Expr a) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(a));
  return e;
}

Expr Expr::binary(Kind kind, Expr a, Expr b) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Expr Expr::pow(Expr base, int exponent) {
  Expr e = unary(Kind::pow, std::move(base));
  e.exponent = exponent;
  return e;
}

std::size_t Expr::required_dims() const {
  std::size_t need = 1;
  if (kind == Kind::parameter)
    need = parameter;
  else if (kind == Kind::name)
    need = dunklcas::required_dims(name);
  for (const Expr &a : args)
    need = std::max(need, a.required_dims());
  return need;
}

Expr parse(std::string_view text, std::size_t dims) {
  if (dims == 0 || dims > kMaxVariables)
    throw std::out_of_range("dimension must be between 1 and " + std::to_string(kMaxVariables));
  return Parser(text, dims).parse_all();
}

OperatorElement evaluate(const Expr &e, std::size_t dims) {
  auto arg = [&](std::size_t k) { return evaluate(e.args[k], dims); };
  switch (e.kind) {
  case Expr::Kind::number:
    return identity(dims, Scalar(dims, e.number));
  case Expr::Kind::parameter:
    return identity(dims, Scalar::parameter(dims, e.parameter - 1));
  case Expr::Kind::name:
    return build(e.name, dims);
  case Expr::Kind::neg:
    return arg(0) * BaseNumber(-1);
  case Expr::Kind::add:
    return arg(0) + arg(1);
  case Expr::Kind::sub:
    return arg(0) - arg(1);
  case Expr::Kind::mul:
    return arg(0) * arg(1);
  case Expr::Kind::comm:
    return commutator(arg(0), arg(1));
  case Expr::Kind::acomm:
    return anticommutator(arg(0), arg(1));
  case Expr::Kind::adjoint:
    return adjoint(arg(0));
  case Expr::Kind::pow: {
    OperatorElement base = arg(0);
    if (e.exponent >= 0)
      return power(base, static_cast<unsigned>(e.exponent));
    std::optional<OperatorElement> inv = invert(base);
    if (!inv)
      throw std::domain_error("negative power of a non-invertible element: " + base.str());
    return power(*inv, static_cast<unsigned>(-e.exponent));
  }
  }
  throw std::logic_error("unhandled expression kind");
}

std::string render(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::number:
    return e.number.str();
  case Expr::Kind::parameter:
    return "mu" + std::to_string(e.parameter);
  case Expr::Kind::name:
    return display_name(e.name);
  case Expr::Kind::neg:
    return "-" + wrapped(e.args[0]);
  case Expr::Kind::add:
    return render(e.args[0]) + " + " + wrapped(e.args[1]);
  case Expr::Kind::sub:
    return render(e.args[0]) + " - " + wrapped(e.args[1]);
  case Expr::Kind::mul:
    return wrapped(e.args[0]) + "*" + wrapped(e.args[1]);
  case Expr::Kind::pow:
    return wrapped(e.args[0]) + "^" + std::to_string(e.exponent);
  case Expr::Kind::comm:
    return "comm(" + render(e.args[0]) + ", " + render(e.args[1]) + ")";
  case Expr::Kind::acomm:
    return "acomm(" + render(e.args[0]) + ", " + render(e.args[1]) + ")";
  case Expr::Kind::adjoint:
    return "adjoint(" + render(e.args[0]) + ")";
  }
  throw std::logic_error("unhandled expression kind");
}

} // namespace dunklcas
