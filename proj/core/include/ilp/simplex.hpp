#pragma once

#include "ilp/point_lp.hpp"

namespace ilp {

/// Exact two-phase simplex with Bland's rule. Deterministic: identical
/// input yields the identical outcome, including the chosen vertex.
/// The returned outcome has already passed validate_outcome.
LpOutcome solve(const PointLp& lp);

/// Textbook dual with the sign conventions used throughout:
/// for a minimization program,
///   Ax <= b row  -> dual variable y <= 0,
///   Ax  = b row  -> y free,
///   Ax >= b row  -> y >= 0,
///   x >= 0 column -> dual row A^T y <= c,
///   x free column -> A^T y = c,
///   x <= 0 column -> A^T y >= c,
/// and the dual objective is max b^T y. For a maximization program the
/// conventions mirror so that dual_of(dual_of(lp)) == lp up to nothing
/// at all — the round trip is the identity with this index mapping.
PointLp dual_of(const PointLp& lp);

/// Exact certificate checks; throws PropertyViolation with a description
/// when the outcome does not certify. solve() runs this internally on
/// every result, tests call it directly on certificates they construct.
void validate_outcome(const PointLp& lp, const LpOutcome& outcome);

/// True iff x satisfies every row relation and sign restriction of lp.
bool is_feasible_point(const PointLp& lp, const RationalVector& x);

} // namespace ilp
