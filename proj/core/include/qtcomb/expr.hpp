#pragma once

#include <string_view>

#include "qtcomb/macdonald.hpp"

namespace qtcomb {

// Result of evaluating a symfunc expression: either a scalar in Q(q,t) or a
// symmetric function (normalized to the power-sum basis internally).
struct ExprValue {
    bool is_scalar = false;
    QTRational scalar;
    SymFunc func;
};

// Minimal function-call expression language over the registered constructors
// e, h, p, m, s, H, E and operators nabla, delta, deltaprime, theta, pi,
// piinv, omega, hperp, inner, starinner, with infix + - * and parentheses.
ExprValue eval_expression(const SymEngine& eng, const MacdonaldOps& mac,
                          std::string_view text);

// canonical text: scalars in the polynomial format, functions in the Schur
// basis
std::string expr_text(const SymEngine& eng, const ExprValue& v);
std::string expr_json(const SymEngine& eng, const ExprValue& v);

}  // namespace qtcomb
