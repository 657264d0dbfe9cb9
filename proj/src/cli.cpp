#include "fanocone/cli.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "fanocone/classifier.hpp"
#include "fanocone/cones.hpp"
#include "fanocone/logfano.hpp"
#include "fanocone/positivity.hpp"

namespace fanocone::cli {

namespace {

/// Input problem detected after CLI11 parsing; reported as a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Geometry make_geometry(int n, int k, int d) {
    try {
        return Geometry(n, k, d);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid triple: ") + e.what());
    }
}

Rat parse_rat(const std::string& s) {
    try {
        return Rat::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

unsigned thread_count(const std::string& env) {
    if (env.empty()) return std::max(1u, std::thread::hardware_concurrency());
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != env.size() || v < 1) throw UsageError("FANOCONE_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string tuple(const std::array<Rat, 4>& v) {
    return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str() + ")";
}

int cmd_classify(int n_max, int d_max, const std::string& format, const std::string& threads_env,
                 std::ostream& out) {
    if (n_max < 3) throw UsageError("n-max must be ≥ 3");
    if (d_max < 1) throw UsageError("d-max must be ≥ 1");
    Format fmt{};
    try {
        fmt = parse_format(format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << render(sweep(n_max, d_max, thread_count(threads_env)), fmt);
    return kYes;
}

int cmd_witness(const Geometry& g, std::ostream& out) {
    const LogFanoVerdict v = find_boundary(g);
    out << "triple: " << g << '\n';
    if (v.status != LogFanoStatus::YesWithWitness) {
        out << "unknown (no boundary of the 5-generator form)\n";
        return kNo;
    }
    const DeltaCoeffs& c = *v.witness;
    const GreekCoeffs gr = delta_to_greek(c, g);
    out << "status: log Fano (boundary found)\n"
        << "source: " << to_string(v.source) << '\n'
        << "x = " << c.x << "\ny = " << c.y << "\nz = " << c.z << "\nw = " << c.w << "\nu = " << c.u << '\n'
        << "delta class (H,L,E,F): alpha = " << gr.alpha << ", beta = " << gr.beta << ", gamma = " << gr.gamma
        << ", delta = " << gr.delta << '\n'
        << "verified: " << yes_no(satisfies(logfano_system(g), to_witness(c))) << '\n';
    if (auto t = table_witness(g)) out << "tabulated boundary: " << format_witness(*t) << '\n';
    return kYes;
}

int cmd_check_delta(const Geometry& g, const DeltaCoeffs& c, std::ostream& out) {
    static constexpr std::array<const char*, 4> kLabels{"alpha+gamma", "beta+d*gamma", "-gamma+delta", "-delta"};
    const bool klt = klt_check(c);
    const auto rows = ampleness_rows(delta_to_greek(c, g), g);

    out << "triple: " << g << '\n' << "boundary (x,y,z,w,u): " << format_witness(c) << '\n';
    out << "klt (0 <= x,y,z,w,u < 1): " << yes_no(klt) << '\n';
    out << "ampleness of -(K+Delta):\n";
    bool ample = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool ok = rows[i].lhs < rows[i].rhs;
        ample = ample && ok;
        out << "  row " << i + 1 << ": " << kLabels[i] << " = " << rows[i].lhs << " < " << rows[i].rhs << "  "
            << (ok ? "ok" : "FAIL") << '\n';
    }
    const bool pair = klt && ample;
    out << "log Fano pair: " << yes_no(pair) << '\n';
    return pair ? kYes : kNo;
}

int cmd_cone(const Geometry& g, const DivClass& D, std::ostream& out) {
    const PositivityReport rep = positivity_report(D, g);
    out << "triple: " << g << '\n'
        << "class (H,L,E,F): " << D << '\n'
        << "nef coords (H, L, H+dL-E, H+dL-E-F): " << tuple(rep.nef_coords) << '\n'
        << "nef: " << yes_no(rep.nef) << '\n'
        << "ample: " << yes_no(rep.ample) << '\n';
    if (auto cert = effective_membership(D, g)) {
        out << "effective: yes, certificate (H0,L0,E,F,D) = (" << (*cert)[0] << ',' << (*cert)[1] << ','
            << (*cert)[2] << ',' << (*cert)[3] << ',' << (*cert)[4] << ")\n";
    } else {
        out << "effective: not effective\n";
    }
    out << "big: " << yes_no(rep.big) << '\n';
    return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& threads_env) {
    CLI::App app{"Positivity and log Fano classification of double blow-ups of P^{n-k} x P^k", "fanocone"};
    app.require_subcommand(1);

    int n_max = 0;
    int d_max = 0;
    std::string format = "table";
    auto* classify_cmd = app.add_subcommand("classify", "Classify every triple up to the given bounds");
    classify_cmd->add_option("--n-max", n_max, "Largest n")->required();
    classify_cmd->add_option("--d-max", d_max, "Largest d")->required();
    classify_cmd->add_option("--format", format, "table, csv or json");

    int n = 0;
    int k = 0;
    int d = 0;
    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("n", n, "Dimension of the ambient product")->required();
        sub->add_option("k", k, "Dimension of the second factor")->required();
        sub->add_option("d", d, "Degree of the hypersurface")->required();
    };

    auto* witness_cmd = app.add_subcommand("witness", "Search for a boundary divisor of the 5-generator form");
    add_triple(witness_cmd);

    std::vector<std::string> delta_args;
    auto* check_cmd = app.add_subcommand("check-delta", "Check whether x,y,z,w,u give a log Fano pair");
    add_triple(check_cmd);
    check_cmd->add_option("coeffs", delta_args, "x y z w u as p/q or integers")->required()->expected(5);

    std::vector<std::string> class_args;
    auto* cone_cmd = app.add_subcommand("cone", "Nef, effective and big tests for a divisor class");
    add_triple(cone_cmd);
    cone_cmd->add_option("--class", class_args, "H L E F coordinates")->required()->expected(4);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(n_max, d_max, format, threads_env, out);
        if (witness_cmd->parsed()) return cmd_witness(make_geometry(n, k, d), out);
        if (check_cmd->parsed()) {
            const Geometry g = make_geometry(n, k, d);
            const DeltaCoeffs c{parse_rat(delta_args[0]), parse_rat(delta_args[1]), parse_rat(delta_args[2]),
                                parse_rat(delta_args[3]), parse_rat(delta_args[4])};
            return cmd_check_delta(g, c, out);
        }
        if (cone_cmd->parsed()) {
            const Geometry g = make_geometry(n, k, d);
            const DivClass D{parse_rat(class_args[0]), parse_rat(class_args[1]), parse_rat(class_args[2]),
                             parse_rat(class_args[3])};
            return cmd_cone(g, D, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace fanocone::cli
