#include "ilp/simplex.hpp"

#include "ilp/errors.hpp"
#include "ilp/interval.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>

namespace ilp {

namespace {

// Internal standard form: min cost^T z, A z = b, z >= 0, b >= 0.
// Free variables split into a plus/minus column pair, NonPos variables
// become a single negated column, <= / >= rows gain slack / surplus
// columns, rows with negative rhs are flipped (sigma tracks the flip).
struct Column {
    enum class Kind { Structural, Slack, Surplus };
    Kind kind;
    std::size_t index; // variable index (Structural) or row index (Slack/Surplus)
    bool negated = false;
};

class Tableau {
public:
    explicit Tableau(const PointLp& lp) : lp_(lp) {
        build_columns();
        build_rows();
        add_artificials();
    }

    LpOutcome run() {
        if (!phase_one()) {
            return make_infeasible();
        }
        remove_basic_artificials();
        return phase_two();
    }

private:
    const PointLp& lp_;
    std::vector<Column> cols_;
    std::vector<Rational> cost_; // internal min-form cost per real column
    std::size_t n_real_ = 0;
    std::size_t n_total_ = 0; // real + artificial
    std::size_t rhs_ = 0;     // rhs column index == n_total_

    std::vector<std::vector<Rational>> t_; // tableau rows
    std::vector<Rational> cost_row_;       // reduced costs, last cell = -objective
    std::vector<std::size_t> basis_;       // basic column per tableau row
    std::vector<int> sigma_;               // +-1 per original row
    std::vector<std::size_t> art_col_;     // artificial column per original row

    void build_columns() {
        const bool flip = lp_.sense == Sense::Max;
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
            const Rational c = flip ? Rational(-lp_.objective[j]) : lp_.objective[j];
            switch (lp_.signs[j]) {
                case VarSign::NonNeg:
                    cols_.push_back({Column::Kind::Structural, j, false});
                    cost_.push_back(c);
                    break;
                case VarSign::NonPos:
                    cols_.push_back({Column::Kind::Structural, j, true});
                    cost_.push_back(-c);
                    break;
                case VarSign::Free:
                    cols_.push_back({Column::Kind::Structural, j, false});
                    cost_.push_back(c);
                    cols_.push_back({Column::Kind::Structural, j, true});
                    cost_.push_back(-c);
                    break;
            }
        }
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            if (lp_.rows[i].rel == Relation::Le) {
                cols_.push_back({Column::Kind::Slack, i, false});
                cost_.push_back(Rational(0));
            } else if (lp_.rows[i].rel == Relation::Ge) {
                cols_.push_back({Column::Kind::Surplus, i, false});
                cost_.push_back(Rational(0));
            }
        }
        n_real_ = cols_.size();
    }

    void build_rows() {
        const std::size_t m = lp_.num_rows();
        sigma_.assign(m, 1);
        t_.assign(m, std::vector<Rational>());
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> row(n_real_, Rational(0));
            for (std::size_t k = 0; k < n_real_; ++k) {
                const Column& col = cols_[k];
                if (col.kind == Column::Kind::Structural) {
                    const Rational& a = lp_.rows[i].coeffs[col.index];
                    row[k] = col.negated ? Rational(-a) : a;
                } else if (col.index == i) {
                    row[k] = col.kind == Column::Kind::Slack ? Rational(1) : Rational(-1);
                }
            }
            Rational rhs = lp_.rows[i].rhs;
            if (rhs < 0) {
                sigma_[i] = -1;
                for (Rational& v : row) v = -v;
                rhs = -rhs;
            }
            row.push_back(std::move(rhs));
            t_[i] = std::move(row);
        }
    }

    void add_artificials() {
        const std::size_t m = t_.size();
        n_total_ = n_real_ + m;
        rhs_ = n_total_;
        art_col_.resize(m);
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Rational rhs = std::move(t_[i].back());
            t_[i].pop_back();
            t_[i].resize(n_total_, Rational(0));
            art_col_[i] = n_real_ + i;
            t_[i][n_real_ + i] = 1;
            t_[i].push_back(std::move(rhs));
            basis_[i] = n_real_ + i;
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational p = t_[row][col];
        for (Rational& v : t_[row]) v /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == row || t_[i][col] == 0) continue;
            const Rational f = t_[i][col];
            for (std::size_t j = 0; j <= rhs_; ++j) t_[i][j] -= f * t_[row][j];
        }
        if (cost_row_[col] != 0) {
            const Rational f = cost_row_[col];
            for (std::size_t j = 0; j <= rhs_; ++j) cost_row_[j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland: entering = lowest eligible column with negative reduced
    // cost, leaving = lowest basic variable among the minimum ratios.
    // Returns false when optimal, throws the unbounded column out.
    std::optional<std::size_t> entering(bool allow_artificial) const {
        const std::size_t limit = allow_artificial ? n_total_ : n_real_;
        for (std::size_t j = 0; j < limit; ++j) {
            if (cost_row_[j] < 0) return j;
        }
        return std::nullopt;
    }

    std::optional<std::size_t> leaving(std::size_t e) const {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (t_[i][e] <= 0) continue;
            Rational ratio = t_[i][rhs_] / t_[i][e];
            if (!best || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[*best])) {
                best = i;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    // Minimizes the artificial sum. True iff the optimum is zero.
    bool phase_one() {
        cost_row_.assign(n_total_ + 1, Rational(0));
        for (std::size_t j = 0; j <= rhs_; ++j) {
            Rational sum = 0;
            for (const auto& row : t_) sum += row[j];
            cost_row_[j] = (j >= n_real_ && j < n_total_) ? Rational(1) - sum : -sum;
        }
        while (auto e = entering(true)) {
            auto l = leaving(*e);
            if (!l) {
                // The artificial sum is bounded below by zero; no
                // entering column can be ratio-free.
                throw std::logic_error("phase one unbounded");
            }
            pivot(*l, *e);
        }
        return -cost_row_[rhs_] == 0;
    }

    LpOutcome make_infeasible() const {
        // Phase-one duals certify: y^T col <= 0 for every real column
        // and y^T b > 0; mapped through sigma and negated this is the
        // Farkas vector for the original orientation.
        RationalVector farkas(lp_.num_rows());
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            const Rational y1 = Rational(1) - cost_row_[art_col_[i]];
            farkas[i] = Rational(-sigma_[i]) * y1;
        }
        return Infeasible{std::move(farkas)};
    }

    void remove_basic_artificials() {
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < n_real_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < n_real_ && t_[i][j] == 0) ++j;
            if (j < n_real_) {
                pivot(i, j); // degenerate pivot, basic value stays zero
                ++i;
            } else {
                // Redundant original row; drop it. Its artificial column
                // stays so dual extraction still spans all original rows.
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    LpOutcome phase_two() {
        cost_row_.assign(n_total_ + 1, Rational(0));
        for (std::size_t j = 0; j <= rhs_; ++j) {
            Rational r = j < n_real_ ? cost_[j] : Rational(0);
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (cost_[basis_[i]] != 0) r -= cost_[basis_[i]] * t_[i][j];
            }
            cost_row_[j] = std::move(r);
        }
        while (auto e = entering(false)) {
            auto l = leaving(*e);
            if (!l) return make_unbounded(*e);
            pivot(*l, *e);
        }
        return make_optimal();
    }

    RationalVector internal_values() const {
        RationalVector z(n_real_, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < n_real_) z[basis_[i]] = t_[i][rhs_];
        }
        return z;
    }

    RationalVector to_original_point(const RationalVector& z) const {
        RationalVector x(lp_.num_vars(), Rational(0));
        for (std::size_t k = 0; k < n_real_; ++k) {
            if (cols_[k].kind != Column::Kind::Structural || z[k] == 0) continue;
            if (cols_[k].negated) {
                x[cols_[k].index] -= z[k];
            } else {
                x[cols_[k].index] += z[k];
            }
        }
        return x;
    }

    LpOutcome make_optimal() const {
        RationalVector x = to_original_point(internal_values());
        RationalVector y(lp_.num_rows());
        const Rational dual_flip(lp_.sense == Sense::Max ? -1 : 1);
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            y[i] = dual_flip * Rational(sigma_[i]) * -cost_row_[art_col_[i]];
        }
        Rational value = dot(lp_.objective, x);
        return Optimal{std::move(value), std::move(x), std::move(y)};
    }

    LpOutcome make_unbounded(std::size_t e) const {
        RationalVector z_ray(n_real_, Rational(0));
        z_ray[e] = 1;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < n_real_) z_ray[basis_[i]] = -t_[i][e];
        }
        return Unbounded{to_original_point(internal_values()), to_original_point(z_ray)};
    }
};

Relation dual_row_relation(Sense primal_sense, VarSign sign) {
    if (sign == VarSign::Free) return Relation::Eq;
    const bool nonneg = sign == VarSign::NonNeg;
    if (primal_sense == Sense::Min) return nonneg ? Relation::Le : Relation::Ge;
    return nonneg ? Relation::Ge : Relation::Le;
}

VarSign dual_var_sign(Sense primal_sense, Relation rel) {
    if (rel == Relation::Eq) return VarSign::Free;
    const bool le = rel == Relation::Le;
    if (primal_sense == Sense::Min) return le ? VarSign::NonPos : VarSign::NonNeg;
    return le ? VarSign::NonNeg : VarSign::NonPos;
}

void require(bool condition, const char* what) {
    if (!condition) throw PropertyViolation(std::string("certificate check failed: ") + what);
}

} // namespace

LpOutcome solve(const PointLp& lp) {
    lp.check_consistent();
    LpOutcome outcome = Tableau(lp).run();
    validate_outcome(lp, outcome);
    return outcome;
}

PointLp dual_of(const PointLp& lp) {
    lp.check_consistent();
    PointLp dual;
    dual.sense = lp.sense == Sense::Min ? Sense::Max : Sense::Min;
    dual.objective.reserve(lp.num_rows());
    for (const PointLp::Row& row : lp.rows) dual.objective.push_back(row.rhs);
    dual.signs.reserve(lp.num_rows());
    for (const PointLp::Row& row : lp.rows) {
        dual.signs.push_back(dual_var_sign(lp.sense, row.rel));
    }
    dual.rows.reserve(lp.num_vars());
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        PointLp::Row row;
        row.coeffs.reserve(lp.num_rows());
        for (const PointLp::Row& prow : lp.rows) row.coeffs.push_back(prow.coeffs[j]);
        row.rel = dual_row_relation(lp.sense, lp.signs[j]);
        row.rhs = lp.objective[j];
        dual.rows.push_back(std::move(row));
    }
    return dual;
}

bool is_feasible_point(const PointLp& lp, const RationalVector& x) {
    if (x.size() != lp.num_vars()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (lp.signs[j] == VarSign::NonNeg && x[j] < 0) return false;
        if (lp.signs[j] == VarSign::NonPos && x[j] > 0) return false;
    }
    for (const PointLp::Row& row : lp.rows) {
        const Rational lhs = dot(row.coeffs, x);
        switch (row.rel) {
            case Relation::Eq:
                if (lhs != row.rhs) return false;
                break;
            case Relation::Le:
                if (lhs > row.rhs) return false;
                break;
            case Relation::Ge:
                if (lhs < row.rhs) return false;
                break;
        }
    }
    return true;
}

void validate_outcome(const PointLp& lp, const LpOutcome& outcome) {
    const bool minimizing = lp.sense == Sense::Min;
    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        require(opt->primal.size() == lp.num_vars(), "primal size");
        require(opt->dual.size() == lp.num_rows(), "dual size");
        require(is_feasible_point(lp, opt->primal), "primal feasibility");
        require(dot(lp.objective, opt->primal) == opt->value, "objective value");

        Rational dual_value = 0;
        for (std::size_t i = 0; i < lp.num_rows(); ++i) {
            const PointLp::Row& row = lp.rows[i];
            const Rational& y = opt->dual[i];
            if (row.rel == Relation::Le) {
                require(minimizing ? y <= 0 : y >= 0, "dual sign on <= row");
            } else if (row.rel == Relation::Ge) {
                require(minimizing ? y >= 0 : y <= 0, "dual sign on >= row");
            }
            dual_value += row.rhs * y;
            const Rational slack = row.rhs - dot(row.coeffs, opt->primal);
            require(y * slack == 0, "complementary slackness on rows");
        }
        require(dual_value == opt->value, "strong duality");

        for (std::size_t j = 0; j < lp.num_vars(); ++j) {
            Rational aty = 0;
            for (std::size_t i = 0; i < lp.num_rows(); ++i) {
                aty += lp.rows[i].coeffs[j] * opt->dual[i];
            }
            const Rational reduced = lp.objective[j] - aty;
            switch (lp.signs[j]) {
                case VarSign::NonNeg:
                    require(minimizing ? reduced >= 0 : reduced <= 0, "dual feasibility");
                    break;
                case VarSign::NonPos:
                    require(minimizing ? reduced <= 0 : reduced >= 0, "dual feasibility");
                    break;
                case VarSign::Free:
                    require(reduced == 0, "dual feasibility on free column");
                    break;
            }
            require(opt->primal[j] * reduced == 0, "complementary slackness on columns");
        }
        return;
    }

    if (const auto* inf = std::get_if<Infeasible>(&outcome)) {
        require(inf->farkas.size() == lp.num_rows(), "farkas size");
        Rational bv = 0;
        for (std::size_t i = 0; i < lp.num_rows(); ++i) {
            const PointLp::Row& row = lp.rows[i];
            const Rational& v = inf->farkas[i];
            if (row.rel == Relation::Le) require(v >= 0, "farkas sign on <= row");
            if (row.rel == Relation::Ge) require(v <= 0, "farkas sign on >= row");
            bv += row.rhs * v;
        }
        require(bv < 0, "farkas b^T v < 0");
        for (std::size_t j = 0; j < lp.num_vars(); ++j) {
            Rational atv = 0;
            for (std::size_t i = 0; i < lp.num_rows(); ++i) {
                atv += lp.rows[i].coeffs[j] * inf->farkas[i];
            }
            switch (lp.signs[j]) {
                case VarSign::NonNeg: require(atv >= 0, "farkas column condition"); break;
                case VarSign::NonPos: require(atv <= 0, "farkas column condition"); break;
                case VarSign::Free: require(atv == 0, "farkas free column condition"); break;
            }
        }
        return;
    }

    const auto& unb = std::get<Unbounded>(outcome);
    require(unb.point.size() == lp.num_vars(), "unbounded point size");
    require(unb.ray.size() == lp.num_vars(), "ray size");
    require(is_feasible_point(lp, unb.point), "unbounded feasible point");
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.signs[j] == VarSign::NonNeg) require(unb.ray[j] >= 0, "ray sign");
        if (lp.signs[j] == VarSign::NonPos) require(unb.ray[j] <= 0, "ray sign");
    }
    for (const PointLp::Row& row : lp.rows) {
        const Rational ad = dot(row.coeffs, unb.ray);
        switch (row.rel) {
            case Relation::Eq: require(ad == 0, "ray on = row"); break;
            case Relation::Le: require(ad <= 0, "ray on <= row"); break;
            case Relation::Ge: require(ad >= 0, "ray on >= row"); break;
        }
    }
    const Rational cd = dot(lp.objective, unb.ray);
    require(minimizing ? cd < 0 : cd > 0, "ray improves objective");
}

} // namespace ilp
