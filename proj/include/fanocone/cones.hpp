#pragma once

#include <array>
#include <optional>

#include "fanocone/lattice.hpp"

namespace fanocone {

/// Extremal rays of the nef cone. Dual to (l0, h0, e0, f) under the pairing.
struct NefBasis {
    DivClass N1;  // H
    DivClass N2;  // L
    DivClass N3;  // H + dL - E
    DivClass N4;  // H + dL - E - F

    [[nodiscard]] std::array<DivClass, 4> as_array() const { return {N1, N2, N3, N4}; }
};

NefBasis nef_basis(const Geometry& g);

/// Effective cone generators in the fixed order [H0, L0, E, F, D].
using EffGens = std::array<DivClass, 5>;

EffGens effective_generators(const Geometry& g);

using NefCoords = std::array<Rat, 4>;
using EffCertificate = std::array<Rat, 5>;

/// Coordinates of D in the nef basis; each equals the pairing of D with the
/// dual curve, so D == sum(c[i] * N[i]) exactly.
NefCoords nef_coords(const DivClass& D, const Geometry& g);

bool is_nef(const DivClass& D, const Geometry& g);
bool is_ample(const DivClass& D, const Geometry& g);

/// Nonnegative a[0..4] with D == sum(a[i] * EffGens[i]), or nullopt when D is
/// outside the effective cone. The certificate is whatever Fourier-Motzkin
/// back-substitution returns; it is not unique.
std::optional<EffCertificate> effective_membership(const DivClass& D, const Geometry& g);

/// Interior of the effective cone: D - eps*(sum of generators) is effective
/// for some rational eps > 0.
bool is_big(const DivClass& D, const Geometry& g);

/// sum(a[i] * gens[i]).
DivClass combine(const EffCertificate& a, const EffGens& gens);

}  // namespace fanocone
