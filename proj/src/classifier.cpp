#include "fanocone/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fanocone/positivity.hpp"

namespace fanocone {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> row_cells(const ClassificationRow& r) {
    return {std::to_string(r.n),
            std::to_string(r.k),
            std::to_string(r.d),
            bool_str(r.fano),
            bool_str(r.weak_fano),
            std::string(to_string(r.log_fano)),
            bool_str(r.minus_k_big),
            r.witness ? format_witness(*r.witness) : std::string{}};
}

const std::vector<std::string> kColumns{"n", "k", "d", "fano", "weak_fano", "log_fano", "minus_k_big", "witness"};

std::string render_csv(const std::vector<ClassificationRow>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < kColumns.size(); ++i) os << (i ? "," : "") << kColumns[i];
    os << '\n';
    for (const auto& r : rows) {
        const auto cells = row_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "");
            // the witness contains commas
            if (i == cells.size() - 1 && !cells[i].empty()) os << '"' << cells[i] << '"';
            else os << cells[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<ClassificationRow>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["n"] = r.n;
        obj["k"] = r.k;
        obj["d"] = r.d;
        obj["fano"] = r.fano;
        obj["weak_fano"] = r.weak_fano;
        obj["log_fano"] = std::string(to_string(r.log_fano));
        obj["minus_k_big"] = r.minus_k_big;
        if (r.witness) {
            obj["witness"] = {{"x", r.witness->x.str()}, {"y", r.witness->y.str()}, {"z", r.witness->z.str()},
                              {"w", r.witness->w.str()}, {"u", r.witness->u.str()}};
        } else {
            obj["witness"] = nullptr;
        }
        out.push_back(std::move(obj));
    }
    return out.dump(2) + "\n";
}

std::string render_table(const std::vector<ClassificationRow>& rows) {
    std::vector<std::vector<std::string>> cells{kColumns};
    for (const auto& r : rows) cells.push_back(row_cells(r));

    std::vector<std::size_t> width(kColumns.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());

    std::ostringstream os;
    for (const auto& line : cells) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) text += "  ";
            text += line[i];
            if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
        }
        os << text << '\n';
    }
    return os.str();
}

}  // namespace

std::string format_witness(const DeltaCoeffs& c) {
    return "(" + c.x.str() + "," + c.y.str() + "," + c.z.str() + "," + c.w.str() + "," + c.u.str() + ")";
}

ClassificationRow classify(const Geometry& g) {
    ClassificationRow row;
    row.n = g.n();
    row.k = g.k();
    row.d = g.d();

    const MinusKStatus status = minus_K_status(g);
    row.fano = status == MinusKStatus::Ample;
    row.weak_fano = status != MinusKStatus::NotNef;
    row.minus_k_big = minus_K_report(g).big;

    const LogFanoVerdict verdict = find_boundary(g);
    row.log_fano = verdict.status;
    if (verdict.status == LogFanoStatus::YesWithWitness) {
        if (auto tabulated = table_witness(g)) {
            row.witness = std::move(tabulated);
            row.witness_source = WitnessSource::Table;
        } else {
            row.witness = verdict.witness;
            row.witness_source = verdict.source;
        }
    }

    if (row.fano && !row.weak_fano) throw std::logic_error("Fano but not weak Fano");
    if (row.weak_fano && row.log_fano != LogFanoStatus::YesWithWitness)
        throw std::logic_error("weak Fano but no boundary found");
    if (row.log_fano == LogFanoStatus::YesWithWitness && !row.witness)
        throw std::logic_error("log Fano verdict without a witness");
    return row;
}

std::vector<ClassificationRow> sweep(int n_max, int d_max, unsigned threads) {
    if (n_max < 3) throw std::invalid_argument("n-max must be >= 3");
    if (d_max < 1) throw std::invalid_argument("d-max must be >= 1");

    std::vector<Geometry> triples;
    for (int n = 3; n <= n_max; ++n)
        for (int k = 2; k <= n - 1; ++k)
            for (int d = 1; d <= d_max; ++d) triples.emplace_back(n, k, d);

    std::vector<ClassificationRow> rows(triples.size());
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(triples.size()));
    if (threads == 1) {
        for (std::size_t i = 0; i < triples.size(); ++i) rows[i] = classify(triples[i]);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < triples.size() && !failed; i = next++) rows[i] = classify(triples[i]);
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

Format parse_format(std::string_view name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string render(const std::vector<ClassificationRow>& rows, Format format) {
    switch (format) {
        case Format::Table: return render_table(rows);
        case Format::Csv: return render_csv(rows);
        case Format::Json: return render_json(rows);
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace fanocone
