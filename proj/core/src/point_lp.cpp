#include "ilp/point_lp.hpp"

#include <sstream>
#include <stdexcept>

namespace ilp {

std::string to_string(Sense s) { return s == Sense::Min ? "min" : "max"; }

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Eq: return "eq";
        case Relation::Le: return "le";
        case Relation::Ge: return "ge";
    }
    return "?";
}

std::string to_string(VarSign s) {
    switch (s) {
        case VarSign::Free: return "free";
        case VarSign::NonNeg: return "nonneg";
        case VarSign::NonPos: return "nonpos";
    }
    return "?";
}

void PointLp::check_consistent() const {
    if (signs.size() != objective.size()) {
        throw std::invalid_argument("PointLp: signs/objective size mismatch");
    }
    for (const Row& row : rows) {
        if (row.coeffs.size() != objective.size()) {
            throw std::invalid_argument("PointLp: row width mismatch");
        }
    }
}

bool is_optimal(const LpOutcome& o) { return std::holds_alternative<Optimal>(o); }
bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<Infeasible>(o); }
bool is_unbounded(const LpOutcome& o) { return std::holds_alternative<Unbounded>(o); }

ExtendedRational outcome_value(const PointLp& lp, const LpOutcome& o) {
    if (const auto* opt = std::get_if<Optimal>(&o)) {
        return ExtendedRational(opt->value);
    }
    const bool minimizing = lp.sense == Sense::Min;
    if (is_infeasible(o)) {
        return minimizing ? ExtendedRational::pos_infinity() : ExtendedRational::neg_infinity();
    }
    return minimizing ? ExtendedRational::neg_infinity() : ExtendedRational::pos_infinity();
}

std::string to_string(const PointLp& lp) {
    std::ostringstream os;
    os << to_string(lp.sense);
    for (std::size_t j = 0; j < lp.objective.size(); ++j) {
        os << (j == 0 ? " " : " + ") << to_string(lp.objective[j]) << "*x" << j;
    }
    if (lp.objective.empty()) os << " 0";
    os << " s.t.";
    for (const PointLp::Row& row : lp.rows) {
        os << " [";
        for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
            if (j > 0) os << " ";
            os << to_string(row.coeffs[j]);
        }
        os << "] " << to_string(row.rel) << " " << to_string(row.rhs) << ";";
    }
    os << " signs(";
    for (std::size_t j = 0; j < lp.signs.size(); ++j) {
        if (j > 0) os << ",";
        os << to_string(lp.signs[j]);
    }
    os << ")";
    return os.str();
}

std::string to_string(const LpOutcome& o) {
    if (const auto* opt = std::get_if<Optimal>(&o)) {
        return "Optimal(value " + to_string(opt->value) + " at " + to_string(opt->primal) + ")";
    }
    if (is_infeasible(o)) return "Infeasible";
    return "Unbounded(ray " + to_string(std::get<Unbounded>(o).ray) + ")";
}

} // namespace ilp
