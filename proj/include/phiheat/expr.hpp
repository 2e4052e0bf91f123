#pragma once

#include <memory>
#include <string>

namespace phiheat {

// Small arithmetic expression grammar over x, y, z, t (and u for nonlinear
// right-hand sides):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-' unary | primary
//   primary:= number | ident | ident '(' expr ')' | '(' expr ')'
// Functions: sin cos exp sqrt abs log. Special primary gradsq(u) marks the
// Phi-gradient square; the evaluator supplies its value per point.
struct ExprVars {
    double x = 0, y = 0, z = 0, t = 0;
    double u = 0;
    double gradsq_u = 0;
    bool has_u = false;       // whether 'u' may appear
    bool has_gradsq = false;  // whether 'gradsq' may appear
};

class Expr {
public:
    virtual ~Expr() = default;
    virtual double eval(const ExprVars& v) const = 0;
    virtual bool uses_u() const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws std::invalid_argument with position info on malformed input.
ExprPtr parse_expr(const std::string& text, bool allow_u);

}  // namespace phiheat
