#include "fanocone/logfano.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanocone/positivity.hpp"

namespace fanocone {

namespace {

const std::vector<std::string> kDeltaVars{"x", "y", "z", "w", "u"};

DeltaCoeffs checked(const DeltaCoeffs& c, const Geometry& g) {
    if (!satisfies(logfano_system(g), to_witness(c)))
        throw std::logic_error("boundary witness fails the log Fano system");
    return c;
}

}  // namespace

std::string_view to_string(LogFanoStatus s) {
    return s == LogFanoStatus::YesWithWitness ? "yes" : "unknown";
}

std::string_view to_string(WitnessSource s) {
    return s == WitnessSource::Table ? "table" : "fm_search";
}

bool klt_check(const DeltaCoeffs& c) {
    const auto v = c.coords();
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.sign() >= 0 && r < Rat(1); });
}

LinIneqSystem logfano_system(const Geometry& g) {
    const long n = g.n();
    const long k = g.k();
    const long d = g.d();
    LinIneqSystem sys(kDeltaVars);
    for (const auto& v : kDeltaVars) sys.add(less_eq({{v, Rat(-1)}}, Rat(0)));
    for (const auto& v : kDeltaVars) sys.add(less({{v, Rat(1)}}, Rat(1)));
    sys.add(less({{"z", Rat(1)}, {"u", Rat(-1)}}, Rat(1)));
    sys.add(less({{"y", Rat(1)}, {"x", Rat(-d)}, {"z", Rat(d)}}, Rat(k + 1 - (n - k) * d)));
    sys.add(less({{"x", Rat(1)}, {"y", Rat(-1)}, {"z", Rat(-1)}, {"w", Rat(1)}}, Rat(n - 2 * k + 1)));
    sys.add(less({{"y", Rat(1)}, {"w", Rat(-1)}, {"u", Rat(1)}}, Rat(k - 1)));
    return sys;
}

Witness to_witness(const DeltaCoeffs& c) {
    return Witness{{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"w", c.w}, {"u", c.u}}};
}

DeltaCoeffs from_witness(const Witness& w) {
    return DeltaCoeffs{w.at("x"), w.at("y"), w.at("z"), w.at("w"), w.at("u")};
}

bool is_log_fano_pair(const DeltaCoeffs& c, const Geometry& g) {
    return klt_check(c) && ample_criterion(delta_to_greek(c, g), g);
}

LogFanoVerdict find_boundary(const Geometry& g) {
    const auto w = fm::find_witness(logfano_system(g));
    if (!w) return LogFanoVerdict{LogFanoStatus::Unknown, std::nullopt, WitnessSource::FmSearch};
    return LogFanoVerdict{LogFanoStatus::YesWithWitness, checked(from_witness(*w), g), WitnessSource::FmSearch};
}

bool closed_form_feasible(const Geometry& g) {
    const int n = g.n();
    const int k = g.k();
    const int d = g.d();
    if (n == 3) return true;
    if (d == 1) return 2 * k - 2 <= n && n <= 2 * k + 1;
    return (n == 4 && k == 2 && d == 2) || (n == 4 && k == 3 && d == 2) || (n == 5 && k == 3 && d == 2);
}

std::optional<DeltaCoeffs> table_witness(const Geometry& g) {
    const int n = g.n();
    const int k = g.k();
    const int d = g.d();
    const Rat O(0);

    if (n == 3) {
        if (d == 1) return checked({O, O, Rat(1, 2), O, O}, g);
        const Rat xy(d - 2, d - 1);
        return checked({xy, xy, Rat(1, 2L * d), O, O}, g);
    }
    if (d == 1) {
        if (n == 2 * k - 2) return checked({O, Rat(1, 2), Rat(3, 4), O, O}, g);
        if (n == 2 * k - 1) return checked({O, Rat(1, 2), O, O, O}, g);
        if (n == 2 * k) return checked({O, O, O, O, O}, g);
        if (n == 2 * k + 1) return checked({Rat(1, 2), O, O, O, O}, g);
        return std::nullopt;
    }
    if (d == 2) {
        if (n == 4 && k == 2) return checked({Rat(3, 4), O, O, O, O}, g);
        if (n == 4 && k == 3) return checked({Rat(1, 8), Rat(1, 2), Rat(3, 4), O, O}, g);
        if (n == 5 && k == 3) return checked({Rat(1, 2), Rat(1, 2), Rat(1, 8), O, O}, g);
    }
    return std::nullopt;
}

}  // namespace fanocone
