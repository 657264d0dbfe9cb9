#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fanocone/rat.hpp"

namespace fanocone {

enum class Relation { Less, LessEq };

/// One row `sum(coeffs[v] * v) + constant REL 0`. Zero coefficients are never
/// stored, so two rows describing the same half-space in the same scaling
/// compare equal.
class LinIneq {
public:
    LinIneq() = default;
    LinIneq(std::map<std::string, Rat> coeffs, Rat constant, Relation rel);

    [[nodiscard]] const std::map<std::string, Rat>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rat& constant() const { return constant_; }
    [[nodiscard]] Relation relation() const { return rel_; }
    [[nodiscard]] bool strict() const { return rel_ == Relation::Less; }
    [[nodiscard]] bool has_vars() const { return !coeffs_.empty(); }

    /// Coefficient of `var`, zero when absent.
    [[nodiscard]] Rat coeff(const std::string& var) const;

    /// Left-hand side evaluated at `point`; variables missing from the point read as 0.
    [[nodiscard]] Rat evaluate(const std::map<std::string, Rat>& point) const;
    [[nodiscard]] bool satisfied_by(const std::map<std::string, Rat>& point) const;

    /// For a variable-free row: whether `constant REL 0` holds.
    [[nodiscard]] bool holds_trivially() const;

    /// Positive rescaling so that the first coefficient has magnitude 1
    /// (or, with no variables, the constant is -1, 0 or 1).
    [[nodiscard]] LinIneq normalized() const;

    friend auto operator<=>(const LinIneq&, const LinIneq&) = default;
    friend bool operator==(const LinIneq&, const LinIneq&) = default;

private:
    std::map<std::string, Rat> coeffs_;
    Rat constant_;
    Relation rel_ = Relation::LessEq;
};

std::ostream& operator<<(std::ostream& os, const LinIneq& row);

/// Convenience builders for rows written as `lhs REL rhs`.
LinIneq less(std::map<std::string, Rat> lhs, const Rat& rhs);
LinIneq less_eq(std::map<std::string, Rat> lhs, const Rat& rhs);

class LinIneqSystem {
public:
    LinIneqSystem() = default;
    explicit LinIneqSystem(std::vector<std::string> vars);
    LinIneqSystem(std::vector<std::string> vars, std::vector<LinIneq> rows);

    /// Throws std::invalid_argument if the row mentions an undeclared variable.
    void add(LinIneq row);

    [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
    [[nodiscard]] const std::vector<LinIneq>& rows() const { return rows_; }
    [[nodiscard]] bool has_var(const std::string& var) const;

private:
    std::vector<std::string> vars_;
    std::vector<LinIneq> rows_;
};

std::ostream& operator<<(std::ostream& os, const LinIneqSystem& sys);

struct Witness {
    std::map<std::string, Rat> assignment;

    [[nodiscard]] const Rat& at(const std::string& var) const { return assignment.at(var); }
};

/// True iff every row of `sys` holds at the witness point.
bool satisfies(const LinIneqSystem& sys, const Witness& w);

namespace fm {

/// One Fourier-Motzkin step. The result has `var` removed from the variable
/// list and is feasible iff `sys` is. A combined row is strict iff one of its
/// parents is. Rows are normalized and exact duplicates dropped.
/// Throws std::invalid_argument for an unknown variable.
LinIneqSystem eliminate(const LinIneqSystem& sys, const std::string& var);

/// Eliminates every variable in declaration order, then checks the
/// remaining constant rows.
bool feasible(const LinIneqSystem& sys);

/// Feasible point by back-substitution through the elimination chain, or
/// nullopt when the system is infeasible. Per variable the allowed interval is
/// resolved as: midpoint when bounded on both sides, lower+1 / upper-1 when
/// half-infinite, 0 when unconstrained, the single point when degenerate.
/// The witness is checked against every row before returning.
std::optional<Witness> find_witness(const LinIneqSystem& sys);

}  // namespace fm
}  // namespace fanocone
