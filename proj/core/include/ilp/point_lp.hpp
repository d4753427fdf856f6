#pragma once

#include "ilp/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ilp {

enum class Sense { Min, Max };
enum class Relation { Eq, Le, Ge };

/// Variable sign restriction. NonPos exists so that duals of <=-rows in
/// minimization programs (y <= 0) are first-class; interval programs
/// themselves only use Free and NonNeg.
enum class VarSign { Free, NonNeg, NonPos };

std::string to_string(Sense s);
std::string to_string(Relation r);
std::string to_string(VarSign s);

/// One concrete (point) linear program, the object the simplex engine
/// consumes. Every theorem check in the library bottoms out in these.
struct PointLp {
    struct Row {
        RationalVector coeffs;
        Relation rel = Relation::Le;
        Rational rhs;
    };

    Sense sense = Sense::Min;
    RationalVector objective;
    std::vector<Row> rows;
    std::vector<VarSign> signs;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    /// Throws std::invalid_argument on inconsistent dimensions.
    void check_consistent() const;
};

/// x attains the optimum with matching dual certificate y:
/// primal feasible, dual feasible, c^T x == b^T y, complementary
/// slackness — all exact, asserted after every solve.
struct Optimal {
    Rational value;
    RationalVector primal;
    RationalVector dual;
};

/// Certificate of infeasibility: multipliers v with
///   v_i >= 0 on <= rows, v_i <= 0 on >= rows, v_i free on = rows,
///   (A^T v)_j >= 0 / = 0 / <= 0 for NonNeg / Free / NonPos columns,
///   b^T v < 0.
struct Infeasible {
    RationalVector farkas;
};

/// Certificate of unboundedness: a feasible point plus an improving ray
/// in the recession cone.
struct Unbounded {
    RationalVector point;
    RationalVector ray;
};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

bool is_optimal(const LpOutcome& o);
bool is_infeasible(const LpOutcome& o);
bool is_unbounded(const LpOutcome& o);

/// Optimal value as an extended rational: -inf for unbounded
/// minimization (+inf for unbounded maximization), +inf for infeasible
/// minimization (-inf for maximization).
ExtendedRational outcome_value(const PointLp& lp, const LpOutcome& o);

std::string to_string(const PointLp& lp);
std::string to_string(const LpOutcome& o);

} // namespace ilp
