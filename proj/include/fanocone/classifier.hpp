#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanocone/lattice.hpp"
#include "fanocone/logfano.hpp"

namespace fanocone {

struct ClassificationRow {
    int n = 0;
    int k = 0;
    int d = 0;
    bool fano = false;
    bool weak_fano = false;
    LogFanoStatus log_fano = LogFanoStatus::Unknown;
    bool minus_k_big = true;
    std::optional<DeltaCoeffs> witness;
    WitnessSource witness_source = WitnessSource::FmSearch;
};

/// Fano / weak Fano from the sign pattern of -K, log Fano from the
/// Fourier-Motzkin boundary search. The reported boundary is the tabulated one
/// when available, otherwise the search result.
/// Throws std::logic_error if Fano => weak Fano => log Fano is violated.
ClassificationRow classify(const Geometry& g);

/// Every valid (n, k, d) with n <= n_max and d <= d_max, ordered by n, k, d.
/// `threads` > 1 spreads the triples over worker threads; the output is
/// identical either way. Throws std::invalid_argument if n_max < 3 or d_max < 1.
std::vector<ClassificationRow> sweep(int n_max, int d_max, unsigned threads = 1);

enum class Format { Table, Csv, Json };

/// Accepts "table", "csv", "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// CSV and JSON columns: n,k,d,fano,weak_fano,log_fano,minus_k_big,witness.
/// Rationals are written as "p/q" strings.
std::string render(const std::vector<ClassificationRow>& rows, Format format);

/// "(x,y,z,w,u)" with each entry in p/q form.
std::string format_witness(const DeltaCoeffs& c);

}  // namespace fanocone
