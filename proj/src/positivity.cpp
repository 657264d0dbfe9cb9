#include "fanocone/positivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanocone {

std::array<CriterionRow, 4> ampleness_rows(const GreekCoeffs& greek, const Geometry& g) {
    const long n = g.n();
    const long k = g.k();
    const long d = g.d();
    return {{
        {greek.alpha + greek.gamma, Rat(1)},
        {greek.beta + Rat(d) * greek.gamma, Rat(k + 1 - (n - k) * d)},
        {-greek.gamma + greek.delta, Rat(n - 2 * k + 1)},
        {-greek.delta, Rat(k - 1)},
    }};
}

bool ample_criterion(const GreekCoeffs& greek, const Geometry& g) {
    const auto rows = ampleness_rows(greek, g);
    return std::all_of(rows.begin(), rows.end(), [](const CriterionRow& r) { return r.lhs < r.rhs; });
}

bool nef_criterion(const GreekCoeffs& greek, const Geometry& g) {
    const auto rows = ampleness_rows(greek, g);
    return std::all_of(rows.begin(), rows.end(), [](const CriterionRow& r) { return r.lhs <= r.rhs; });
}

std::string_view to_string(MinusKStatus s) {
    switch (s) {
        case MinusKStatus::Ample: return "ample";
        case MinusKStatus::NefNotAmple: return "nef_not_ample";
        case MinusKStatus::NotNef: return "not_nef";
    }
    return "?";
}

MinusKStatus minus_K_status(const Geometry& g) {
    const long n = g.n();
    const long k = g.k();
    const long d = g.d();
    const long first = k + 1 - (n - k) * d;
    const long second = n - 2 * k + 1;
    if (first > 0 && second > 0) return MinusKStatus::Ample;
    if (first >= 0 && second >= 0) return MinusKStatus::NefNotAmple;
    return MinusKStatus::NotNef;
}

BigDecomposition big_decomposition(const Geometry& g) {
    const Rat n(g.n());
    const Rat k(g.k());
    const Rat d(g.d());
    const Rat one(1);
    const Rat half(1, 2);

    const DivClass A{half + one / d, one + one / (Rat(2) * d), -(one / d), -(one / (Rat(2) * d))};
    const DivClass B{n - k + half - one / d, k - one / (Rat(2) * d), -(n - k - one / d),
                     -(k - one - one / (Rat(2) * d))};
    const EffCertificate cert{n - k + half - one / d, k - one / (Rat(2) * d), half, one, Rat(0)};

    if (A + B != anticanonical(g)) throw std::logic_error("A + B != -K");
    if (!is_ample(A, g)) throw std::logic_error("A is not ample");
    if (std::any_of(cert.begin(), cert.end(), [](const Rat& r) { return r.sign() < 0; }))
        throw std::logic_error("negative coefficient in the effective certificate of B");
    if (combine(cert, effective_generators(g)) != B) throw std::logic_error("certificate does not reproduce B");

    return BigDecomposition{A, B, cert};
}

PositivityReport positivity_report(const DivClass& D, const Geometry& g) {
    return PositivityReport{is_ample(D, g), is_nef(D, g), is_big(D, g), nef_coords(D, g)};
}

PositivityReport minus_K_report(const Geometry& g) {
    const DivClass K = anticanonical(g);
    big_decomposition(g);  // throws if the decomposition fails its checks
    return PositivityReport{is_ample(K, g), is_nef(K, g), true, nef_coords(K, g)};
}

}  // namespace fanocone
