#include "arith/expr.hpp"

#include <cctype>
#include <cmath>
#include <variant>

#include "arith/catalogue.hpp"
#include "arith/dirichlet.hpp"
#include "arith/io.hpp"
#include "arith/transcend.hpp"

namespace arith::expr {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorKind::kParse,
            "offset " + std::to_string(offset) + ": " + message +
                (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kIdent, kNumber, kString, kLParen, kRParen, kComma, kPlus, kStar, kDot, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;
  std::size_t end;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kString: return "string";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kPlus: return "'+'";
    case Tok::kStar: return "'*'";
    case Tok::kDot: return "'.'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t& j) {
    while (j < s.size() && is_digit(s[j])) ++j;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    if (is_digit(c) || (c == '-' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      ++i;
      digits(i);
      if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
        ++i;
        digits(i);
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && is_digit(s[j])) {
          i = j;
          digits(i);
        }
      }
      if (i + 1 < s.size() && s[i] == '/' && is_digit(s[i + 1])) {
        ++i;
        digits(i);
      }
      out.push_back({Tok::kNumber, std::string(s.substr(start, i - start)), start, i});
      continue;
    }
    if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError(start, {"'\"'"}, "unterminated string");
      }
      out.push_back({Tok::kString, std::string(s.substr(i + 1, close - i - 1)), start, close + 1});
      i = close + 1;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '+': kind = Tok::kPlus; break;
      case '*': kind = Tok::kStar; break;
      case '.': kind = Tok::kDot; break;
      default:
        throw ParseError(start, {}, std::string("unexpected character '") + c + "'");
    }
    ++i;
    out.push_back({kind, std::string(1, c), start, i});
  }
  out.push_back({Tok::kEnd, "", s.size(), s.size()});
  return out;
}

struct UnaryOp {
  std::string_view name;
  Expr::Kind kind;
};

constexpr UnaryOp kUnaryOps[] = {
    {"inv", Expr::Kind::kInv},     {"log", Expr::Kind::kLog},
    {"exp", Expr::Kind::kExp},     {"psi", Expr::Kind::kPsi},
    {"psiinv", Expr::Kind::kPsiInv}, {"deriv", Expr::Kind::kDeriv},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse() {
    Expr e = parse_sum();
    expect(Tok::kEnd, {"'+'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, std::vector<std::string> expected = {}) {
    if (peek().kind != kind) {
      if (expected.empty()) expected.push_back(describe(kind));
      const Token& t = peek();
      throw ParseError(t.begin, std::move(expected),
                       t.kind == Tok::kEnd ? "unexpected end of input"
                                           : "unexpected " + std::string(describe(t.kind)) +
                                                 " '" + t.text + "'");
    }
    return next();
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.span = {lhs.span.begin, rhs.span.end};
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    while (peek().kind == Tok::kPlus) {
      next();
      lhs = binary(Expr::Kind::kAdd, std::move(lhs), parse_product());
    }
    return lhs;
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    while (peek().kind == Tok::kStar) {
      next();
      lhs = binary(Expr::Kind::kMul, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().kind == Tok::kNumber) {
      const Token number = next();
      expect(Tok::kDot);
      Expr operand = parse_unary();
      Expr e;
      e.kind = Expr::Kind::kScalar;
      e.text = number.text;
      e.span = {number.begin, operand.span.end};
      e.children.push_back(std::move(operand));
      return e;
    }
    return parse_primary();
  }

  // Counts further top-level arguments for an arity diagnostic.
  [[noreturn]] void arity_error(const Token& name, std::size_t expected) {
    throw ParseError(peek().begin, {"')'"},
                     "'" + name.text + "' takes " + std::to_string(expected) + " argument" +
                         (expected == 1 ? "" : "s"));
  }

  Expr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) {
      next();
      Expr inner = parse_sum();
      expect(Tok::kRParen, {"'+'", "'*'", "')'"});
      return inner;
    }
    if (t.kind != Tok::kIdent) {
      throw ParseError(t.begin, {"identifier", "number", "'('"},
                       t.kind == Tok::kEnd ? "unexpected end of input"
                                           : "unexpected " + std::string(describe(t.kind)));
    }
    const Token name = next();
    for (const auto& op : kUnaryOps) {
      if (op.name == name.text) {
        expect(Tok::kLParen);
        Expr e;
        e.kind = op.kind;
        e.children.push_back(parse_sum());
        if (peek().kind == Tok::kComma) arity_error(name, 1);
        e.span = {name.begin, expect(Tok::kRParen, {"'+'", "'*'", "')'"}).end};
        return e;
      }
    }
    if (name.text == "pow") {
      expect(Tok::kLParen);
      Expr e;
      e.kind = Expr::Kind::kPow;
      e.children.push_back(parse_sum());
      if (peek().kind == Tok::kRParen) arity_error(name, 2);
      expect(Tok::kComma, {"','"});
      const Token& k = expect(Tok::kNumber, {"non-negative integer"});
      if (k.text.find_first_not_of("0123456789") != std::string::npos || k.text.size() > 18) {
        throw ParseError(k.begin, {"non-negative integer"}, "bad exponent '" + k.text + "'");
      }
      e.power = std::stoull(k.text);
      if (peek().kind == Tok::kComma) arity_error(name, 2);
      e.span = {name.begin, expect(Tok::kRParen).end};
      return e;
    }
    if (name.text == "file") {
      expect(Tok::kLParen);
      Expr e;
      e.kind = Expr::Kind::kFile;
      e.text = expect(Tok::kString, {"quoted path"}).text;
      if (peek().kind == Tok::kComma) arity_error(name, 1);
      e.span = {name.begin, expect(Tok::kRParen).end};
      return e;
    }
    const auto catalogue = parse_catalogue_name(name.text);
    if (!catalogue) {
      throw ParseError(name.begin, {"function name"}, "unknown identifier '" + name.text + "'");
    }
    Expr e;
    e.kind = Expr::Kind::kNamed;
    e.text = std::string(arith::catalogue_name(*catalogue));
    e.span = {name.begin, name.end};
    if (*catalogue == CatalogueName::kSigma) {
      if (peek().kind != Tok::kLParen) {
        throw ParseError(peek().begin, {"'('"}, "'sigma' takes 1 argument");
      }
      next();
      e.argument = expect(Tok::kNumber, {"number"}).text;
      if (peek().kind == Tok::kComma) arity_error(name, 1);
      e.span.end = expect(Tok::kRParen).end;
    } else if (peek().kind == Tok::kLParen) {
      throw ParseError(peek().begin, {}, "'" + name.text + "' takes no arguments");
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view unary_name(Expr::Kind kind) {
  for (const auto& op : kUnaryOps) {
    if (op.kind == kind) return op.name;
  }
  return "?";
}

// Precedence levels: 1 sum, 2 product, 3 unary/atom.
std::string print(const Expr& e, int context) {
  auto wrap = [&](std::string s, int level) { return level < context ? "(" + s + ")" : s; };
  switch (e.kind) {
    case Expr::Kind::kAdd:
      return wrap(print(e.children[0], 1) + " + " + print(e.children[1], 2), 1);
    case Expr::Kind::kMul:
      return wrap(print(e.children[0], 2) + " * " + print(e.children[1], 3), 2);
    case Expr::Kind::kScalar:
      return e.text + " . " + print(e.children[0], 3);
    case Expr::Kind::kNamed:
      return e.argument ? e.text + "(" + *e.argument + ")" : e.text;
    case Expr::Kind::kFile:
      return "file(\"" + e.text + "\")";
    case Expr::Kind::kPow:
      return "pow(" + print(e.children[0], 1) + ", " + std::to_string(e.power) + ")";
    default:
      return std::string(unary_name(e.kind)) + "(" + print(e.children[0], 1) + ")";
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) { return print(e, 1); }

namespace {

std::string locate(const Expr& e, const EvalContext& ctx) {
  std::string where = "offset " + std::to_string(e.span.begin) + ".." + std::to_string(e.span.end);
  if (e.span.end <= ctx.source.size() && e.span.begin < e.span.end) {
    where = "'" + std::string(ctx.source.substr(e.span.begin, e.span.end - e.span.begin)) +
            "' at " + where;
  }
  return where;
}

[[noreturn]] void needs_complex(const Expr& e, const EvalContext& ctx, const std::string& what) {
  throw Error(ErrorKind::kUnsupportedBackend,
              what + " (" + locate(e, ctx) + ") needs --backend complex");
}

template <Coefficient T>
ArithFn<T> load(const Expr& e, const EvalContext& ctx) {
  io::AnyFn data = io::load_file(e.text);
  if (io::bound_of(data) != ctx.bound) {
    throw Error(ErrorKind::kShape, "file \"" + e.text + "\" has bound " +
                                       std::to_string(io::bound_of(data)) + ", expected " +
                                       std::to_string(ctx.bound));
  }
  if (auto* exact = std::get_if<RationalFn>(&data)) {
    if constexpr (CoefficientTraits<T>::kExact) {
      return *exact;
    } else {
      return to_complex(*exact);
    }
  }
  if constexpr (CoefficientTraits<T>::kExact) {
    needs_complex(e, ctx, "file \"" + e.text + "\" holds complex values and");
  } else {
    return std::get<ComplexFn>(data);
  }
}

template <Coefficient T>
ArithFn<T> named(const Expr& e, const EvalContext& ctx) {
  const CatalogueName name = *parse_catalogue_name(e.text);
  double exponent = 0.0;
  if (e.argument) {
    const Rational exact = Rational::parse(*e.argument);
    exponent = exact.to_double();
    if constexpr (CoefficientTraits<T>::kExact) {
      if (!exact.is_integer() || exact.sign() < 0) {
        needs_complex(e, ctx, "sigma with non-integer or negative exponent");
      }
    }
  }
  if constexpr (CoefficientTraits<T>::kExact) {
    if (name == CatalogueName::kMangoldt) needs_complex(e, ctx, "Lambda");
  }
  return make<T>(name, ctx.sieve, ctx.bound, exponent);
}

}  // namespace

template <Coefficient T>
ArithFn<T> evaluate(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::kNamed:
      return named<T>(e, ctx);
    case Expr::Kind::kFile:
      return load<T>(e, ctx);
    case Expr::Kind::kDeriv:
      if constexpr (CoefficientTraits<T>::kExact) {
        needs_complex(e, ctx, "deriv");
      }
      break;
    default:
      break;
  }
  std::vector<ArithFn<T>> args;
  for (const Expr& child : e.children) args.push_back(evaluate<T>(child, ctx));
  try {
    switch (e.kind) {
      case Expr::Kind::kAdd:
        return point_add(args[0], args[1]);
      case Expr::Kind::kMul:
        return dirichlet_mul(args[0], args[1]);
      case Expr::Kind::kScalar:
        return scalar_mul(CoefficientTraits<T>::parse(e.text), args[0]);
      case Expr::Kind::kInv:
        return dirichlet_inv(args[0], ctx.eps);
      case Expr::Kind::kLog:
        return dlog(ctx.normalize_unit ? normalize_unit(args[0], ctx.eps) : args[0], ctx.eps);
      case Expr::Kind::kExp:
        return dexp(args[0], ctx.eps);
      case Expr::Kind::kPsi:
        return psi(ctx.normalize_unit ? normalize_unit(args[0], ctx.eps) : args[0], ctx.eps);
      case Expr::Kind::kPsiInv:
        return psi_inv(args[0], ctx.eps);
      case Expr::Kind::kDeriv:
        return derivative(args[0]);
      case Expr::Kind::kPow:
        return dirichlet_pow(args[0], e.power);
      default:
        break;
    }
  } catch (const Error& err) {
    throw Error(err.kind(), std::string(err.what()) + " [in " + locate(e, ctx) + "]");
  }
  throw Error(ErrorKind::kInvalidValue, "unhandled expression node");
}

template ArithFn<Rational> evaluate(const Expr&, const EvalContext&);
template ArithFn<Complex> evaluate(const Expr&, const EvalContext&);

}  // namespace arith::expr
