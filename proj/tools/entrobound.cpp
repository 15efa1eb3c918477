// Batch front-end: named-state construction, density/counts ingestion, witness
// evaluation, Werner and triple-Gaussian parameter sweeps with reproducibility
// manifests.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/entrobound.hpp"

namespace eb = entrobound;

namespace {

struct QuantityUnit {
    const char* suffix;
    double scale;
};

// Longest suffix first so "mm" wins over "m" and "GHz" over "Hz".
constexpr QuantityUnit units[] = {
    {"THz", 1e12}, {"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0},
    {"mm", 1e-3},  {"um", 1e-6}, {"nm", 1e-9}, {"m", 1.0},   {"s", 1.0},
};

double parse_quantity(const std::string& text) {
    std::string body = text;
    double scale = 1.0;
    for (const auto& u : units) {
        const std::string suffix = u.suffix;
        if (body.size() > suffix.size() &&
            body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
            body = body.substr(0, body.size() - suffix.size());
            scale = u.scale;
            break;
        }
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception&) {
        throw eb::ValidationError("cannot parse quantity '" + text + "'");
    }
    if (used != body.size())
        throw eb::ValidationError("cannot parse quantity '" + text + "'");
    return value * scale;
}

eb::SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw eb::ValidationError("sweep must look like var=start:stop:points[:log]");
    eb::SweepSpec spec;
    spec.variable = text.substr(0, eq);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text.substr(eq + 1)) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3 && parts.size() != 4)
        throw eb::ValidationError("sweep must look like var=start:stop:points[:log]");
    spec.start = parse_quantity(parts[0]);
    spec.stop = parse_quantity(parts[1]);
    spec.points = static_cast<std::size_t>(std::stoul(parts[2]));
    if (parts.size() == 4) {
        if (parts[3] == "log")
            spec.log_spaced = true;
        else if (parts[3] != "lin" && parts[3] != "linear")
            throw eb::ValidationError("sweep spacing must be 'log' or 'linear'");
    }
    spec.validate();
    return spec;
}

// Named states: ghz3, ghz(n,d), w3, mm, mm(n), insep, gw(p), ww(p).
eb::DensityMatrix parse_state(const std::string& name) {
    auto args_of = [&](const std::string& prefix) -> std::optional<std::vector<double>> {
        if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
            name[prefix.size()] != '(' || name.back() != ')')
            return std::nullopt;
        std::vector<double> args;
        std::string cur;
        for (std::size_t i = prefix.size() + 1; i + 1 < name.size(); ++i) {
            if (name[i] == ',') {
                args.push_back(parse_quantity(cur));
                cur.clear();
            } else {
                cur.push_back(name[i]);
            }
        }
        args.push_back(parse_quantity(cur));
        return args;
    };

    if (name == "ghz3") return eb::DensityMatrix::from_pure(eb::ghz(3, 2));
    if (name == "w3") return eb::DensityMatrix::from_pure(eb::w3());
    if (name == "mm") return eb::maximally_mixed(eb::SubsystemSignature({2, 2, 2}));
    if (name == "insep") return eb::rho_insep();
    if (auto a = args_of("ghz")) {
        if (a->size() != 2) throw eb::ValidationError("ghz(n,d) takes two arguments");
        return eb::DensityMatrix::from_pure(
            eb::ghz(static_cast<std::size_t>((*a)[0]), static_cast<std::size_t>((*a)[1])));
    }
    if (auto a = args_of("mm")) {
        if (a->size() != 1) throw eb::ValidationError("mm(n) takes one argument");
        return eb::maximally_mixed(
            eb::SubsystemSignature(std::vector<std::size_t>(static_cast<std::size_t>((*a)[0]), 2)));
    }
    if (auto a = args_of("gw")) {
        if (a->size() != 1) throw eb::ValidationError("gw(p) takes one argument");
        return eb::werner(eb::ghz(3, 2), (*a)[0]);
    }
    if (auto a = args_of("ww")) {
        if (a->size() != 1) throw eb::ValidationError("ww(p) takes one argument");
        return eb::werner(eb::w3(), (*a)[0]);
    }
    throw eb::ValidationError("unknown state name '" + name +
                              "' (try ghz3, ghz(n,d), w3, mm, insep, gw(p), ww(p))");
}

eb::MeasurementPair parse_pair(const std::string& names, const std::string& file) {
    if (!file.empty()) return eb::read_pair_json(file);
    const auto comma = names.find(',');
    if (comma == std::string::npos)
        throw eb::ValidationError("--bases must be two names like x,z or a --bases-file");
    return eb::MeasurementPair(eb::pauli_basis(names.substr(0, comma)),
                               eb::pauli_basis(names.substr(comma + 1)));
}

struct InputRecord {
    std::string path;
    std::string hash;
};

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

struct OutputSink {
    std::string out_path;  // empty -> stdout
    std::string format;    // "csv" or "json"; empty -> subcommand default
    std::vector<InputRecord> inputs;
    std::vector<std::pair<std::string, std::string>> parameters;  // key -> literal JSON value
    std::string command;
    std::uint64_t seed = 1;

    bool wants(const std::string& fmt, const std::string& fallback) const {
        const std::string chosen = format.empty() ? fallback : format;
        if (chosen != "csv" && chosen != "json")
            throw eb::ValidationError("--format must be csv or json");
        return chosen == fmt;
    }

    void note_input(const std::string& path) {
        inputs.push_back({path, eb::fnv1a64_hex(eb::read_file(path))});
    }
    void param(const std::string& key, double value) {
        parameters.emplace_back(key, eb::fmt_g17(value));
    }
    void param_str(const std::string& key, const std::string& value) {
        parameters.emplace_back(key, "\"" + json_escape(value) + "\"");
    }
    void param_int(const std::string& key, long long value) {
        parameters.emplace_back(key, std::to_string(value));
    }

    std::string manifest_json() const {
        std::ostringstream out;
        out << "{\n";
        out << "  \"tool\": \"entrobound\",\n";
        out << "  \"version\": \"" << eb::version << "\",\n";
        out << "  \"command\": \"" << json_escape(command) << "\",\n";
        out << "  \"inputs\": [";
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            out << (i ? "," : "") << "\n    {\"path\": \"" << json_escape(inputs[i].path)
                << "\", \"fnv1a64\": \"" << inputs[i].hash << "\"}";
        }
        out << (inputs.empty() ? "]" : "\n  ]") << ",\n";
        out << "  \"parameters\": {";
        for (std::size_t i = 0; i < parameters.size(); ++i) {
            out << (i ? "," : "") << "\n    \"" << parameters[i].first
                << "\": " << parameters[i].second;
        }
        out << (parameters.empty() ? "}" : "\n  }") << ",\n";
        out << "  \"seed\": " << seed << "\n";
        out << "}\n";
        return out.str();
    }

    void deliver(const std::string& payload) const {
        if (out_path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw eb::ValidationError("cannot write output file: " + out_path);
        out << payload;
        std::ofstream man(out_path + ".manifest.json", std::ios::binary);
        if (!man) throw eb::ValidationError("cannot write manifest next to: " + out_path);
        man << manifest_json();
    }
};

std::string join_command(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

using Thresholds = std::vector<std::pair<std::string, std::optional<double>>>;

// Sweep tables carry their root-found summary either as trailing CSV comment
// lines or as a JSON object.
std::string sweep_payload(bool json, const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& rows,
                          const Thresholds& thresholds) {
    std::ostringstream out;
    if (!json) {
        for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << eb::fmt_g17(row[c]);
            out << "\n";
        }
        for (const auto& [name, root] : thresholds)
            out << "# " << name << " = " << (root ? eb::fmt_g17(*root) : "none") << "\n";
        return out.str();
    }
    out << "{\n  \"columns\": [";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? ", " : "") << "\"" << columns[c] << "\"";
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            out << (c ? ", " : "") << eb::fmt_g17(rows[r][c]);
        out << "]";
    }
    out << (rows.empty() ? "]" : "\n  ]") << ",\n  \"summary\": {";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        out << (i ? ",\n    \"" : "\n    \"") << thresholds[i].first << "\": "
            << (thresholds[i].second ? eb::fmt_g17(*thresholds[i].second) : "null");
    }
    out << (thresholds.empty() ? "}" : "\n  }") << "\n}\n";
    return out.str();
}

void witness_report_csv(std::ostringstream& out, const std::string& section,
                        const eb::WitnessReport& rep) {
    out << section << ",method," << to_string(rep.method) << "\n";
    out << section << ",d_max," << rep.d_max << "\n";
    for (std::size_t p = 0; p < rep.per_party_terms_bits.size(); ++p)
        out << section << ",term_" << static_cast<char>('A' + p) << "_bits,"
            << eb::fmt_g17(rep.per_party_terms_bits[p]) << "\n";
    for (std::size_t p = 0; p < rep.omegas.size(); ++p)
        out << section << ",omega_" << static_cast<char>('A' + p) << ","
            << eb::fmt_g17(rep.omegas[p]) << "\n";
    out << section << ",v_bound_bits," << eb::fmt_g17(rep.v_bound_bits) << "\n";
    out << section << ",e3f_lower_bits," << eb::fmt_g17(rep.e3f_lower_bits) << "\n";
    for (const auto& w : rep.warnings) out << section << ",warning," << w << "\n";
}

// ---- subcommand bodies

int run_state(OutputSink& sink, const std::string& name) {
    const auto rho = parse_state(name);
    sink.param_str("state", name);
    sink.deliver(eb::density_to_json(rho));
    return 0;
}

int run_witness(OutputSink& sink, const std::string& in, const std::string& state_name,
                const std::string& counts, const std::string& bases,
                const std::string& bases_file, double min_counts) {
    std::optional<eb::DensityMatrix> rho;
    std::optional<eb::MeasurementPair> pair;
    std::optional<eb::JointDistribution> dist_q, dist_r;
    std::vector<std::string> warnings;

    if (!bases.empty() || !bases_file.empty()) pair = parse_pair(bases, bases_file);

    if (!counts.empty()) {
        sink.note_input(counts);
        auto data = eb::read_counts_csv(counts, min_counts);
        dist_q = data.dist_q;
        dist_r = data.dist_r;
        warnings = data.warnings;
        sink.param("total_counts_q", data.total_q);
        sink.param("total_counts_r", data.total_r);
    } else if (!in.empty()) {
        sink.note_input(in);
        rho = eb::read_density_json(in);
    } else if (!state_name.empty()) {
        rho = parse_state(state_name);
        sink.param_str("state", state_name);
    } else {
        throw eb::ValidationError("witness: provide --in, --state, or --counts");
    }

    if (rho && pair) {
        // D_max comes from the state signature; the measurement must agree.
        if (pair->dim() != rho->signature().max_dim())
            throw eb::ValidationError(
                "witness: measurement dimension differs from the state's party dimension");
        dist_q = eb::distribution_in_basis(*rho, pair->q);
        dist_r = eb::distribution_in_basis(*rho, pair->r);
    }

    std::optional<eb::WitnessReport> exact, measured;
    std::optional<std::optional<double>> pure_min;
    if (rho) {
        exact = eb::quantum_witness_v(*rho);
        exact->warnings = warnings;
    }
    if (pair && dist_q) {
        measured = eb::measured_witness_v(*dist_q, *dist_r, *pair);
        measured->warnings = warnings;
        if (rho && rho->purity() > 1.0 - 1e-9)
            pure_min = eb::pure_min_bound(*dist_q, *dist_r, *pair);
    }
    if (!exact && !measured)
        throw eb::ValidationError("witness: nothing to compute (need a state or counts)");

    std::ostringstream out;
    if (sink.wants("csv", "json")) {
        out << "report,field,value\n";
        if (exact) witness_report_csv(out, "exact", *exact);
        if (measured) witness_report_csv(out, "measured", *measured);
        if (pure_min)
            out << "measured,pure_min_bound_bits,"
                << (*pure_min ? eb::fmt_g17(**pure_min) : "n/a") << "\n";
    } else {
        out << "{\n";
        if (exact) out << "  \"exact\": " << eb::witness_report_json(*exact, 2).substr(2);
        if (measured) {
            if (exact) out << ",\n";
            out << "  \"measured\": " << eb::witness_report_json(*measured, 2).substr(2);
            if (pure_min)
                out << ",\n  \"pure_min_bound_bits\": "
                    << (*pure_min ? eb::fmt_g17(**pure_min) : "null");
        }
        out << "\n}\n";
    }
    sink.deliver(out.str());
    return 0;
}

int run_werner(OutputSink& sink, const std::string& family, const std::string& sweep_text,
               const std::string& bases) {
    if (family != "gw" && family != "ww")
        throw eb::ValidationError("werner: --state must be gw or ww");
    const eb::SweepSpec sweep = sweep_text.empty()
                                    ? eb::SweepSpec{"p", 0.0, 1.0, 201, false}
                                    : parse_sweep(sweep_text);
    if (sweep.variable != "p") throw eb::ValidationError("werner: sweep variable must be p");
    const auto pair = parse_pair(bases, "");
    const eb::PureState target = (family == "gw") ? eb::ghz(3, 2) : eb::w3();

    sink.param_str("family", family);
    sink.param_str("bases", bases);
    sink.param("sweep_start", sweep.start);
    sink.param("sweep_stop", sweep.stop);
    sink.param_int("sweep_points", static_cast<long long>(sweep.points));

    struct Row {
        double p, v_exact, v_measured, b_full, b_corner;
    };
    auto eval = [&](double p) {
        const auto rho = eb::werner(target, p);
        const auto dq = eb::distribution_in_basis(rho, pair.q);
        const auto dr = eb::distribution_in_basis(rho, pair.r);
        return Row{p, eb::quantum_witness_v(rho).v_bound_bits,
                   eb::measured_witness_v(dq, dr, pair).v_bound_bits, eb::bound_b_full(rho),
                   eb::bound_b_corner(rho)};
    };
    const auto values = sweep.values();
    const auto computed = eb::parallel_map<Row>(
        values.size(), [&](std::size_t i) { return eval(values[i]); });
    std::vector<std::vector<double>> rows;
    for (const auto& r : computed)
        rows.push_back({r.p, r.v_exact, r.v_measured, r.b_full, r.b_corner});

    const double lo = sweep.start, hi = sweep.stop;
    const Thresholds thresholds = {
        {"threshold_v_exact_p",
         eb::bisect([&](double p) { return eval(p).v_exact; }, lo, hi, 1e-6)},
        {"threshold_v_measured_p",
         eb::bisect([&](double p) { return eval(p).v_measured; }, lo, hi, 1e-6)},
        {"threshold_b_full_p",
         eb::bisect([&](double p) { return eval(p).b_full; }, lo, hi, 1e-6)},
        {"threshold_b_corner_p",
         eb::bisect([&](double p) { return eval(p).b_corner; }, lo, hi, 1e-6)},
    };
    sink.deliver(sweep_payload(sink.wants("json", "csv"),
                               {"p", "v_exact", "v_measured", "b_full", "b_corner"}, rows,
                               thresholds));
    return 0;
}

int run_element_bound(OutputSink& sink, const std::string& in, const std::string& state_name) {
    std::optional<eb::DensityMatrix> rho;
    if (!in.empty()) {
        sink.note_input(in);
        rho = eb::read_density_json(in);
    } else if (!state_name.empty()) {
        rho = parse_state(state_name);
        sink.param_str("state", state_name);
    } else {
        throw eb::ValidationError("element-bound: provide --in or --state");
    }
    const auto rep = eb::element_bound_report(*rho);
    if (sink.wants("csv", "json")) {
        std::ostringstream out;
        out << "field,value\n";
        out << "b_full," << eb::fmt_g17(rep.b_full) << "\n";
        out << "b_corner," << eb::fmt_g17(rep.b_corner) << "\n";
        out << "enf_lower_bits," << eb::fmt_g17(rep.enf_lower_bits) << "\n";
        sink.deliver(out.str());
    } else {
        sink.deliver(eb::element_report_json(rep));
    }
    return 0;
}

int run_npartite(OutputSink& sink, const std::string& counts, const std::string& state_name,
                 long long n, const std::string& bases, double min_counts) {
    const auto pair = parse_pair(bases, "");
    std::optional<eb::JointDistribution> dist_q, dist_r;
    std::vector<std::string> warnings;
    if (!counts.empty()) {
        sink.note_input(counts);
        auto data = eb::read_counts_csv(counts, min_counts);
        dist_q = data.dist_q;
        dist_r = data.dist_r;
        warnings = data.warnings;
        sink.param("total_counts_q", data.total_q);
        sink.param("total_counts_r", data.total_r);
    } else if (!state_name.empty()) {
        eb::DensityMatrix rho = [&] {
            if (state_name == "ghz" || state_name == "mm") {
                if (n < 3) throw eb::ValidationError("npartite: --n must be at least 3");
                if (state_name == "ghz")
                    return eb::DensityMatrix::from_pure(eb::ghz(static_cast<std::size_t>(n), 2));
                return eb::maximally_mixed(eb::SubsystemSignature(
                    std::vector<std::size_t>(static_cast<std::size_t>(n), 2)));
            }
            return parse_state(state_name);
        }();
        dist_q = eb::distribution_in_basis(rho, pair.q);
        dist_r = eb::distribution_in_basis(rho, pair.r);
        sink.param_str("state", state_name);
        sink.param_int("n", n);
    } else {
        throw eb::ValidationError("npartite: provide --counts or --state");
    }
    sink.param_str("bases", bases);
    const auto rep = eb::cyclic_witness(*dist_q, *dist_r, pair);
    if (sink.wants("csv", "json")) {
        std::ostringstream out;
        out << "field,value\n";
        out << "n," << rep.n << "\n";
        out << "lhs_bits," << eb::fmt_g17(rep.lhs_bits) << "\n";
        out << "rhs_bits," << eb::fmt_g17(rep.rhs_bits) << "\n";
        out << "violated," << (rep.violated ? "true" : "false") << "\n";
        for (const auto& w : warnings) out << "warning," << w << "\n";
        sink.deliver(out.str());
    } else {
        sink.deliver(eb::cyclic_report_json(rep, warnings));
    }
    return 0;
}

int run_cv(OutputSink& sink, bool spatial, double lz, double lambda_p, double n_p,
           double sigma_p, double kappa, double sigma_wp, bool hz_convention,
           const std::string& sweep_text) {
    if (hz_convention) sigma_wp *= 2.0 * std::numbers::pi;

    const std::string var = spatial ? "sigma_p" : "sigma_wp";
    std::vector<double> values;
    if (!sweep_text.empty()) {
        auto sweep = parse_sweep(sweep_text);
        if (sweep.variable != var)
            throw eb::ValidationError("cv sweep variable must be " + var);
        if (!spatial && hz_convention) {
            sweep.start *= 2.0 * std::numbers::pi;
            sweep.stop *= 2.0 * std::numbers::pi;
        }
        values = sweep.values();
        sink.param("sweep_start", sweep.start);
        sink.param("sweep_stop", sweep.stop);
        sink.param_int("sweep_points", static_cast<long long>(sweep.points));
    } else {
        values = {spatial ? sigma_p : sigma_wp};
    }

    sink.param("length_z_m", lz);
    if (spatial) {
        sink.param("lambda_pump_m", lambda_p);
        sink.param("n_pump", n_p);
        sink.param("sigma_pump_m", sigma_p);
    } else {
        sink.param("kappa_s2_per_m", kappa);
        sink.param("sigma_omega_pump_rad_per_s", sigma_wp);
        sink.param_str("frequency_convention", hz_convention ? "ordinary(x2pi)" : "angular");
    }

    struct Row {
        double x, exact, bare, caption;
    };
    auto eval = [&](double x) {
        if (spatial) {
            const eb::SpatialParams p{lz, lambda_p, n_p, x};
            const auto a = eb::e3f_cv_approx_spatial(p);
            return Row{x, eb::e3f_cv_exact_bound(eb::model_spatial(p)), a.bare_bits,
                       a.caption_bits};
        }
        const eb::TimeParams p{lz, kappa, x};
        const auto a = eb::e3f_cv_approx_time(p);
        return Row{x, eb::e3f_cv_exact_bound(eb::model_time(p)), a.bare_bits, a.caption_bits};
    };
    const auto computed =
        eb::parallel_map<Row>(values.size(), [&](std::size_t i) { return eval(values[i]); });
    std::vector<std::vector<double>> rows;
    for (const auto& r : computed) rows.push_back({r.x, r.exact, r.bare, r.caption});

    Thresholds thresholds;
    const double lo = values.front(), hi = values.back();
    if (lo < hi) {
        thresholds.emplace_back(
            "exact_zero_intercept_" + var,
            eb::bisect([&](double x) { return eval(x).exact; }, lo, hi, 0.0, 200));
        thresholds.emplace_back(
            "exact_one_gebit_" + var,
            eb::bisect([&](double x) { return eval(x).exact - 1.0; }, lo, hi, 0.0, 200));
    }
    sink.deliver(sweep_payload(sink.wants("json", "csv"),
                               {spatial ? "sigma_p_m" : "sigma_wp_rad_per_s",
                                "exact_bound_bits", "approx_bare_bits", "approx_caption_bits"},
                               rows, thresholds));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entrobound: entropic lower bounds on multipartite entanglement of formation"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for stochastic paths (recorded in manifests)");

    std::string out_path;
    app.add_option("--out", out_path, "output file (stdout when omitted)")->configurable(false);

    std::string format;
    app.add_option("--format", format,
                   "csv or json (default: csv for sweeps, json for reports)");

    // state
    auto* c_state = app.add_subcommand("state", "emit a named state as density-matrix JSON");
    c_state->fallthrough();
    std::string state_name;
    c_state->add_option("--name", state_name, "ghz3|ghz(n,d)|w3|mm|insep|gw(p)|ww(p)")->required();

    // witness
    auto* c_wit = app.add_subcommand("witness", "tripartite witness reports (exact and measured)");
    c_wit->fallthrough();
    std::string wit_in, wit_state, wit_counts, wit_bases = "x,z", wit_bases_file;
    double wit_min_counts = 1000.0;
    c_wit->add_option("--in", wit_in, "density-matrix JSON file");
    c_wit->add_option("--state", wit_state, "built-in state name");
    c_wit->add_option("--counts", wit_counts, "counts CSV (setting,outcome_A,...,count)");
    c_wit->add_option("--bases", wit_bases, "Pauli pair Q,R (default x,z)");
    c_wit->add_option("--bases-file", wit_bases_file, "measurement pair JSON file");
    c_wit->add_option("--min-counts", wit_min_counts, "warning threshold per setting");

    // werner
    auto* c_wer = app.add_subcommand("werner", "GHZ-/W-Werner sweep: exact, measured, element bounds");
    c_wer->fallthrough();
    std::string wer_family, wer_sweep, wer_bases = "x,z";
    c_wer->add_option("--state", wer_family, "gw or ww")->required();
    c_wer->add_option("--sweep", wer_sweep, "p=start:stop:points (default p=0:1:201)");
    c_wer->add_option("--bases", wer_bases, "Pauli pair Q,R (default x,z)");

    // element-bound
    auto* c_el = app.add_subcommand("element-bound", "GHZ-element bounds B and E_NF lower bound");
    c_el->fallthrough();
    std::string el_in, el_state;
    c_el->add_option("--in", el_in, "density-matrix JSON file");
    c_el->add_option("--state", el_state, "built-in state name");

    // npartite
    auto* c_np = app.add_subcommand("npartite", "cyclic N-party entropic witness");
    c_np->fallthrough();
    std::string np_counts, np_state, np_bases = "z,x";
    long long np_n = 0;
    double np_min_counts = 1000.0;
    c_np->add_option("--counts", np_counts, "counts CSV with N outcome columns");
    c_np->add_option("--state", np_state, "built-in state (ghz or mm with --n)");
    c_np->add_option("--n", np_n, "party count for built-in states");
    c_np->add_option("--bases", np_bases, "Pauli pair Q,R (default z,x)");
    c_np->add_option("--min-counts", np_min_counts, "warning threshold per setting");

    // cv-spatial / cv-time
    auto* c_cvs = app.add_subcommand("cv-spatial", "triple-Gaussian spatial E3F bounds");
    c_cvs->fallthrough();
    std::string cvs_lz = "10mm", cvs_lambda = "325nm", cvs_sigma = "1.0mm", cvs_sweep;
    double cvs_np = 2.247;
    c_cvs->add_option("--lz", cvs_lz, "crystal length (default 10mm)");
    c_cvs->add_option("--lambda-p", cvs_lambda, "pump wavelength (default 325nm)");
    c_cvs->add_option("--n-p", cvs_np, "pump refractive index (default 2.247)");
    c_cvs->add_option("--sigma-p", cvs_sigma, "pump width (default 1.0mm)");
    c_cvs->add_option("--sweep", cvs_sweep, "sigma_p=start:stop:points[:log]");

    auto* c_cvt = app.add_subcommand("cv-time", "triple-Gaussian energy-time E3F bounds");
    c_cvt->fallthrough();
    std::string cvt_lz = "10mm", cvt_kappa = "1.01e-25", cvt_sigma = "1.94GHz", cvt_sweep;
    bool cvt_hz = false;
    c_cvt->add_option("--lz", cvt_lz, "crystal length (default 10mm)");
    c_cvt->add_option("--kappa", cvt_kappa, "group velocity dispersion in s^2/m");
    c_cvt->add_option("--sigma-wp", cvt_sigma, "pump bandwidth, rad/s unless --hz (default 1.94GHz)");
    c_cvt->add_flag("--hz", cvt_hz, "treat --sigma-wp as ordinary frequency and multiply by 2*pi");
    c_cvt->add_option("--sweep", cvt_sweep, "sigma_wp=start:stop:points[:log]");

    CLI11_PARSE(app, argc, argv);

    OutputSink sink;
    sink.out_path = out_path;
    sink.command = join_command(argc, argv);
    sink.format = format;
    sink.seed = seed;

    try {
        if (*c_state) return run_state(sink, state_name);
        if (*c_wit)
            return run_witness(sink, wit_in, wit_state, wit_counts, wit_bases, wit_bases_file,
                               wit_min_counts);
        if (*c_wer) return run_werner(sink, wer_family, wer_sweep, wer_bases);
        if (*c_el) return run_element_bound(sink, el_in, el_state);
        if (*c_np)
            return run_npartite(sink, np_counts, np_state, np_n, np_bases, np_min_counts);
        if (*c_cvs)
            return run_cv(sink, true, parse_quantity(cvs_lz), parse_quantity(cvs_lambda), cvs_np,
                          parse_quantity(cvs_sigma), 0.0, 0.0, false, cvs_sweep);
        if (*c_cvt)
            return run_cv(sink, false, parse_quantity(cvt_lz), 0.0, 0.0, 0.0,
                          parse_quantity(cvt_kappa), parse_quantity(cvt_sigma), cvt_hz,
                          cvt_sweep);
    } catch (const eb::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const eb::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
