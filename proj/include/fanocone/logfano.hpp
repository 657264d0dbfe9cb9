#pragma once

#include <optional>
#include <string_view>

#include "fanocone/fm.hpp"
#include "fanocone/lattice.hpp"

namespace fanocone {

enum class LogFanoStatus { YesWithWitness, Unknown };
enum class WitnessSource { Table, FmSearch };

std::string_view to_string(LogFanoStatus s);
std::string_view to_string(WitnessSource s);

/// Infeasibility of the five-generator system is reported as Unknown, never
/// as "not log Fano": boundaries of other shapes are not searched.
struct LogFanoVerdict {
    LogFanoStatus status = LogFanoStatus::Unknown;
    std::optional<DeltaCoeffs> witness;
    WitnessSource source = WitnessSource::FmSearch;
};

/// klt for simple-normal-crossing support: every coefficient in [0, 1).
bool klt_check(const DeltaCoeffs& c);

/// Fourteen rows in variables x, y, z, w, u:
///   0 <= x,y,z,w,u < 1, z-u < 1, y-dx+dz < k+1-(n-k)d,
///   x-y-z+w < n-2k+1, y-w+u < k-1.
LinIneqSystem logfano_system(const Geometry& g);

Witness to_witness(const DeltaCoeffs& c);
DeltaCoeffs from_witness(const Witness& w);

/// klt and -(K + Delta) ample, checked through the greek rewrite rather than
/// the combined system.
bool is_log_fano_pair(const DeltaCoeffs& c, const Geometry& g);

/// Fourier-Motzkin search over logfano_system(g).
LogFanoVerdict find_boundary(const Geometry& g);

/// Closed-form answer: always for n = 3; for n >= 4 exactly when d = 1 and
/// n is in {2k-2, ..., 2k+1}, or (n,k,d) is (4,2,2), (4,3,2) or (5,3,2).
bool closed_form_feasible(const Geometry& g);

/// Tabulated closed-form boundary for the triple, when one is known.
std::optional<DeltaCoeffs> table_witness(const Geometry& g);

}  // namespace fanocone
