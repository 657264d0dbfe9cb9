#include "fanocone/cones.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fanocone/fm.hpp"

namespace fanocone {

namespace {

const std::array<std::string, 5> kCoeffNames{"a1", "a2", "a3", "a4", "a5"};

// Rows encoding sum(a[i]*gens[i]) + extra == D coordinatewise as paired <=,
// plus a[i] >= 0.
void add_cone_rows(LinIneqSystem& sys, const DivClass& D, const EffGens& gens,
                   const std::map<std::string, DivClass>& extra) {
    for (std::size_t j = 0; j < 4; ++j) {
        std::map<std::string, Rat> lhs;
        for (std::size_t i = 0; i < gens.size(); ++i) lhs[kCoeffNames[i]] = gens[i].coords()[j];
        for (const auto& [name, cls] : extra) lhs[name] = cls.coords()[j];
        std::map<std::string, Rat> neg;
        for (const auto& [name, c] : lhs) neg[name] = -c;
        const Rat target = D.coords()[j];
        sys.add(less_eq(lhs, target));
        sys.add(less_eq(neg, -target));
    }
    for (const auto& name : kCoeffNames) sys.add(less_eq({{name, Rat(-1)}}, Rat(0)));
}

}  // namespace

NefBasis nef_basis(const Geometry& g) {
    const Rat d(g.d());
    const DivClass N3 = DivClass::H() + d * DivClass::L() - DivClass::E();
    return NefBasis{DivClass::H(), DivClass::L(), N3, N3 - DivClass::F()};
}

EffGens effective_generators(const Geometry& g) {
    const NamedDivisors nd = named_divisors(g);
    return {nd.H0, nd.L0, DivClass::E(), DivClass::F(), nd.D};
}

NefCoords nef_coords(const DivClass& D, const Geometry& g) {
    const NamedCurves c = named_curves(g);
    return {pair(D, c.l0), pair(D, c.h0), pair(D, c.e0), pair(D, c.f)};
}

bool is_nef(const DivClass& D, const Geometry& g) {
    const NefCoords c = nef_coords(D, g);
    return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r.sign() >= 0; });
}

bool is_ample(const DivClass& D, const Geometry& g) {
    const NefCoords c = nef_coords(D, g);
    return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r.sign() > 0; });
}

DivClass combine(const EffCertificate& a, const EffGens& gens) {
    DivClass out{};
    for (std::size_t i = 0; i < gens.size(); ++i) out += a[i] * gens[i];
    return out;
}

std::optional<EffCertificate> effective_membership(const DivClass& D, const Geometry& g) {
    const EffGens gens = effective_generators(g);
    LinIneqSystem sys({kCoeffNames.begin(), kCoeffNames.end()});
    add_cone_rows(sys, D, gens, {});

    const auto w = fm::find_witness(sys);
    if (!w) return std::nullopt;

    EffCertificate a;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = w->at(kCoeffNames[i]);
    if (combine(a, gens) != D) throw std::logic_error("effective certificate does not reproduce the class");
    return a;
}

bool is_big(const DivClass& D, const Geometry& g) {
    const EffGens gens = effective_generators(g);
    DivClass total{};
    for (const auto& gen : gens) total += gen;

    std::vector<std::string> vars(kCoeffNames.begin(), kCoeffNames.end());
    vars.emplace_back("eps");
    LinIneqSystem sys(std::move(vars));
    add_cone_rows(sys, D, gens, {{"eps", total}});
    sys.add(less({{"eps", Rat(-1)}}, Rat(0)));
    return fm::feasible(sys);
}

}  // namespace fanocone
