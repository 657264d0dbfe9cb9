#pragma once

#include <array>
#include <string_view>

#include "fanocone/cones.hpp"
#include "fanocone/lattice.hpp"

namespace fanocone {

/// One row `lhs < rhs` (or `<=`) of the ampleness system for -(K + Delta).
struct CriterionRow {
    Rat lhs;
    Rat rhs;
};

/// The four rows alpha+gamma < 1, beta+d*gamma < k+1-(n-k)d,
/// -gamma+delta < n-2k+1, -delta < k-1, evaluated at `greek`.
std::array<CriterionRow, 4> ampleness_rows(const GreekCoeffs& greek, const Geometry& g);

/// -(K + Delta) ample: all four rows strict.
bool ample_criterion(const GreekCoeffs& greek, const Geometry& g);
/// -(K + Delta) nef: all four rows non-strict.
bool nef_criterion(const GreekCoeffs& greek, const Geometry& g);

enum class MinusKStatus { Ample, NefNotAmple, NotNef };

std::string_view to_string(MinusKStatus s);

/// Sign pattern of k+1-(n-k)d and n-2k+1.
MinusKStatus minus_K_status(const Geometry& g);

/// -K = A + B with A ample and B effective, which makes -K big for every
/// valid geometry.
struct BigDecomposition {
    DivClass A;
    DivClass B;
    /// B over [H0, L0, E, F, D]: (n-k+1/2-1/d, k-1/(2d), 1/2, 1, 0).
    EffCertificate b_certificate;
};

/// Builds the decomposition and checks it before returning (throws
/// std::logic_error on any failed check).
BigDecomposition big_decomposition(const Geometry& g);

struct PositivityReport {
    bool ample = false;
    bool nef = false;
    bool big = false;
    NefCoords nef_coords;
};

/// Report for an arbitrary class; bigness comes from the effective-cone
/// interior test.
PositivityReport positivity_report(const DivClass& D, const Geometry& g);

/// Report for -K; bigness comes from the A + B decomposition.
PositivityReport minus_K_report(const Geometry& g);

}  // namespace fanocone
