#pragma once

// Expression language over arithmetical functions:
//
//   expr    := term ('+' term)*                 pointwise sum
//   term    := unary ('*' unary)*               Dirichlet product
//   unary   := NUMBER '.' unary | primary       scalar multiple
//   primary := '(' expr ')'
//            | NAME                             catalogue function
//            | 'sigma' '(' NUMBER ')'
//            | ('inv'|'log'|'exp'|'psi'|'psiinv'|'deriv') '(' expr ')'
//            | 'pow' '(' expr ',' INTEGER ')'
//            | 'file' '(' STRING ')'
//
// NUMBER is an integer, decimal or p/q literal with optional leading '-'.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/arith_fn.hpp"
#include "arith/sieve.hpp"

namespace arith::expr {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr {
  enum class Kind {
    kNamed,   // text = catalogue spelling, argument = sigma exponent
    kFile,    // text = path
    kAdd,
    kMul,
    kScalar,  // text = literal
    kInv,
    kLog,
    kExp,
    kPsi,
    kPsiInv,
    kDeriv,
    kPow,     // power = exponent
  };

  Kind kind = Kind::kNamed;
  std::string text;
  std::optional<std::string> argument;
  std::uint64_t power = 0;
  std::vector<Expr> children;
  Span span;

  // Structural equality; spans are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.argument == b.argument &&
           a.power == b.power && a.children == b.children;
  }
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

struct EvalContext {
  const SpfSieve& sieve;
  std::int64_t bound;
  double eps = kDefaultEpsilon;
  bool normalize_unit = false;
  std::string_view source;  // original text, for error spans
};

/// Bottom-up evaluation. Nodes that need floats (Lambda, deriv, non-integer
/// sigma, complex file data) fail under the rational backend with a
/// kUnsupportedBackend error naming the node; operation errors are rethrown
/// with the node's source span attached.
template <Coefficient T>
ArithFn<T> evaluate(const Expr& e, const EvalContext& ctx);

}  // namespace arith::expr
