#ifndef EXERGEN_SIMPLIFY_HPP
#define EXERGEN_SIMPLIFY_HPP

#include "exergen/expr.hpp"

namespace exergen {

// Bottom-up algebraic simplification: exact rational constant folding (folds
// that would divide by zero, overflow, or leave the rationals are skipped)
// plus the identity rules x+0, 0+x, x-0, x*1, 1*x, x*0, 0*x, x/1, x^1 and
// neg(neg x). Total; semantically equal to the input wherever both evaluate.
ExprPtr simplify(const ExprPtr& e);

} // namespace exergen

#endif
