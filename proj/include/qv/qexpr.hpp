#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qv/qlaurent.hpp"

namespace qv {

// Parse failure with a 1-based byte offset into the input.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::string expected);
    std::size_t position;
    std::string expected;
};

enum class ExprKind { Int, QPow, Neg, Add, Sub, Mul, Div, Pow, Poch, QBin };

// coef * q^qexp; the grammar only produces coef in {-1, +1} when qexp > 0.
struct QMono {
    long coef = 1;
    long qexp = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind = ExprKind::Int;
    long ival = 0;                // Int value, QPow exponent, or Pow exponent
    ExprPtr a, b;                 // operands
    std::vector<QMono> args;      // Poch arguments
    QMono base{1, 1};             // Poch / QBin base monomial
    std::optional<long> length;   // Poch length; nullopt means infinite
    long top = 0, bottom = 0;     // QBin
};

// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ('^' int)?
//   atom   := int | 'q' | '(' expr ')'
//           | 'P(' mono (',' mono)* ';' mono (';' (nat|'inf'))? ')'
//           | 'qbin(' int ',' int (';' mono)? ')'
//   mono   := ['-'] ('q' ('^' int)? | int)
// Omitted Pochhammer length means infinite; omitted qbin base means q.
ExprPtr parse_expr(const std::string& text);

// Fully parenthesized form; parse_expr(print_expr(e)) reproduces e.
std::string print_expr(const Expr& e);

bool ast_equal(const Expr& x, const Expr& y);

// Exact evaluation in the truncated series ring. Throws ZeroConstantTerm on
// division by a non-unit and DivergentSpec on an infinite Pochhammer whose
// factor exponents do not increase.
QSeries eval_expr(const Expr& e, long trunc);

// Node builders. To match what the parser produces, make_pow folds powers of
// bare q into a single QPow node and make_neg folds the sign of an integer
// literal into the literal.
ExprPtr make_int(long v);
ExprPtr make_qpow(long e);
ExprPtr make_neg(ExprPtr x);
ExprPtr make_binary(ExprKind k, ExprPtr x, ExprPtr y);
ExprPtr make_pow(ExprPtr x, long n);
ExprPtr make_poch(std::vector<QMono> args, QMono base, std::optional<long> length);
ExprPtr make_qbin(long top, long bottom, QMono base);

}  // namespace qv
