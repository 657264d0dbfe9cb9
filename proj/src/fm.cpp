#include "fanocone/fm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fanocone {

LinIneq::LinIneq(std::map<std::string, Rat> coeffs, Rat constant, Relation rel)
    : coeffs_(std::move(coeffs)), constant_(std::move(constant)), rel_(rel) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [name, _] : coeffs_)
        if (name.empty()) throw std::invalid_argument("empty variable name in inequality");
}

Rat LinIneq::coeff(const std::string& var) const {
    auto it = coeffs_.find(var);
    return it == coeffs_.end() ? Rat{} : it->second;
}

Rat LinIneq::evaluate(const std::map<std::string, Rat>& point) const {
    Rat sum = constant_;
    for (const auto& [name, c] : coeffs_) {
        auto it = point.find(name);
        if (it != point.end()) sum += c * it->second;
    }
    return sum;
}

bool LinIneq::satisfied_by(const std::map<std::string, Rat>& point) const {
    const int s = evaluate(point).sign();
    return strict() ? s < 0 : s <= 0;
}

bool LinIneq::holds_trivially() const {
    if (has_vars()) throw std::logic_error("holds_trivially on a row with variables");
    return strict() ? constant_.sign() < 0 : constant_.sign() <= 0;
}

LinIneq LinIneq::normalized() const {
    if (coeffs_.empty()) return LinIneq({}, Rat(constant_.sign()), rel_);
    const Rat scale = abs(coeffs_.begin()->second);
    std::map<std::string, Rat> scaled;
    for (const auto& [name, c] : coeffs_) scaled.emplace(name, c / scale);
    return LinIneq(std::move(scaled), constant_ / scale, rel_);
}

std::ostream& operator<<(std::ostream& os, const LinIneq& row) {
    bool first = true;
    for (const auto& [name, c] : row.coeffs()) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rat mag = abs(c);
        if (mag != Rat(1)) os << mag << "*";
        os << name;
        first = false;
    }
    if (first) {
        os << row.constant();
    } else if (!row.constant().is_zero()) {
        os << (row.constant().sign() < 0 ? " - " : " + ") << abs(row.constant());
    }
    return os << (row.strict() ? " < 0" : " <= 0");
}

namespace {

LinIneq make_row(std::map<std::string, Rat> lhs, const Rat& rhs, Relation rel) {
    return LinIneq(std::move(lhs), -rhs, rel);
}

}  // namespace

LinIneq less(std::map<std::string, Rat> lhs, const Rat& rhs) {
    return make_row(std::move(lhs), rhs, Relation::Less);
}

LinIneq less_eq(std::map<std::string, Rat> lhs, const Rat& rhs) {
    return make_row(std::move(lhs), rhs, Relation::LessEq);
}

LinIneqSystem::LinIneqSystem(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
}

LinIneqSystem::LinIneqSystem(std::vector<std::string> vars, std::vector<LinIneq> rows)
    : LinIneqSystem(std::move(vars)) {
    for (auto& r : rows) add(std::move(r));
}

bool LinIneqSystem::has_var(const std::string& var) const {
    return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

void LinIneqSystem::add(LinIneq row) {
    for (const auto& [name, _] : row.coeffs())
        if (!has_var(name)) throw std::invalid_argument("row references undeclared variable '" + name + "'");
    rows_.push_back(std::move(row));
}

std::ostream& operator<<(std::ostream& os, const LinIneqSystem& sys) {
    os << "vars:";
    for (const auto& v : sys.vars()) os << ' ' << v;
    os << '\n';
    for (const auto& r : sys.rows()) os << "  " << r << '\n';
    return os;
}

bool satisfies(const LinIneqSystem& sys, const Witness& w) {
    return std::all_of(sys.rows().begin(), sys.rows().end(),
                       [&](const LinIneq& r) { return r.satisfied_by(w.assignment); });
}

namespace fm {

namespace {

// a*p + b*q with a, b > 0; the combined row is strict if either parent is.
LinIneq combine(const LinIneq& p, const Rat& a, const LinIneq& q, const Rat& b) {
    std::map<std::string, Rat> coeffs;
    for (const auto& [name, c] : p.coeffs()) coeffs[name] += a * c;
    for (const auto& [name, c] : q.coeffs()) coeffs[name] += b * c;
    const Relation rel = (p.strict() || q.strict()) ? Relation::Less : Relation::LessEq;
    return LinIneq(std::move(coeffs), a * p.constant() + b * q.constant(), rel);
}

struct Bound {
    Rat value;
    bool strict = false;
};

Rat pick_in_interval(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
    if (lo && hi) {
        if (lo->value == hi->value) return lo->value;
        return (lo->value + hi->value) / Rat(2);
    }
    if (lo) return lo->value + Rat(1);
    if (hi) return hi->value - Rat(1);
    return Rat{};
}

}  // namespace

LinIneqSystem eliminate(const LinIneqSystem& sys, const std::string& var) {
    if (!sys.has_var(var)) throw std::invalid_argument("cannot eliminate unknown variable '" + var + "'");

    std::vector<std::string> rest;
    std::copy_if(sys.vars().begin(), sys.vars().end(), std::back_inserter(rest),
                 [&](const std::string& v) { return v != var; });

    std::vector<const LinIneq*> upper;  // positive coefficient: bounds var from above
    std::vector<const LinIneq*> lower;  // negative coefficient: bounds var from below
    std::set<LinIneq> seen;
    LinIneqSystem out(std::move(rest));
    auto emit = [&](const LinIneq& row) {
        LinIneq n = row.normalized();
        if (seen.insert(n).second) out.add(std::move(n));
    };

    for (const auto& row : sys.rows()) {
        const int s = row.coeff(var).sign();
        if (s > 0) upper.push_back(&row);
        else if (s < 0) lower.push_back(&row);
        else emit(row);
    }
    for (const LinIneq* u : upper) {
        const Rat cu = u->coeff(var);
        for (const LinIneq* l : lower) {
            const Rat cl = -l->coeff(var);
            emit(combine(*u, cl, *l, cu));
        }
    }
    return out;
}

bool feasible(const LinIneqSystem& sys) {
    LinIneqSystem cur = sys;
    for (const auto& v : sys.vars()) cur = eliminate(cur, v);
    return std::all_of(cur.rows().begin(), cur.rows().end(),
                       [](const LinIneq& r) { return r.holds_trivially(); });
}

std::optional<Witness> find_witness(const LinIneqSystem& sys) {
    // chain[i] still contains sys.vars()[i..]; chain.back() is variable-free.
    std::vector<LinIneqSystem> chain{sys};
    chain.reserve(sys.vars().size() + 1);
    for (const auto& v : sys.vars()) chain.push_back(eliminate(chain.back(), v));

    for (const auto& r : chain.back().rows())
        if (!r.holds_trivially()) return std::nullopt;

    Witness w;
    for (std::size_t i = sys.vars().size(); i-- > 0;) {
        const std::string& var = sys.vars()[i];
        std::optional<Bound> lo;
        std::optional<Bound> hi;
        for (const auto& row : chain[i].rows()) {
            const Rat a = row.coeff(var);
            if (a.is_zero()) continue;
            // a*var + rest REL 0  =>  var REL' -rest/a
            const Rat bound = -(row.evaluate(w.assignment)) / a;
            if (a.sign() > 0) {
                if (!hi || bound < hi->value || (bound == hi->value && row.strict()))
                    hi = Bound{bound, row.strict()};
            } else {
                if (!lo || bound > lo->value || (bound == lo->value && row.strict()))
                    lo = Bound{bound, row.strict()};
            }
        }
        w.assignment[var] = pick_in_interval(lo, hi);
    }

    if (!satisfies(sys, w)) throw std::logic_error("Fourier-Motzkin back-substitution produced an invalid witness");
    return w;
}

}  // namespace fm
}  // namespace fanocone
