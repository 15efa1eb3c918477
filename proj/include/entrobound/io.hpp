#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entrobound/core.hpp"
#include "entrobound/element_bound.hpp"
#include "entrobound/measurement.hpp"
#include "entrobound/npartite.hpp"
#include "entrobound/state.hpp"
#include "entrobound/witness.hpp"

namespace entrobound {

// All emitted floats carry 17 significant digits so repeated runs are
// byte-identical and values round-trip exactly.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

// ---- density-matrix JSON: { "dims": [2,2,2], "re": [[...]], "im": [[...]] }

inline DensityMatrix density_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("density JSON: top level must be an object");
    for (const char* key : {"dims", "re", "im"})
        if (!j.contains(key))
            throw ValidationError(std::string("density JSON: missing field '") + key + "'");

    std::vector<std::size_t> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer() || d.get<long long>() < 1)
            throw ValidationError("density JSON: dims must be positive integers");
        dims.push_back(d.get<std::size_t>());
    }
    if (dims.empty()) throw ValidationError("density JSON: dims is empty");

    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const std::size_t n = re.size();
    if (im.size() != n) throw ValidationError("density JSON: re and im row counts differ");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (re[r].size() != n || im[r].size() != n)
            throw ValidationError("density JSON: matrix rows must all have length dims product");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = cdouble(re[r][c].get<double>(), im[r][c].get<double>());
    }

    const SubsystemSignature sig(dims);
    const std::string violated = DensityMatrix::check_invariants(sig, m);
    if (!violated.empty()) throw ValidationError("density JSON: " + violated);
    return DensityMatrix(sig, std::move(m));
}

inline DensityMatrix read_density_json(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("density JSON: parse failure in " + path + ": " + e.what());
    }
    return density_from_json(j);
}

inline std::string density_to_json(const DensityMatrix& rho) {
    std::ostringstream out;
    out << "{\n  \"dims\": [";
    for (std::size_t p = 0; p < rho.signature().parties(); ++p)
        out << (p ? ", " : "") << rho.signature().dim(p);
    out << "],\n";
    const auto emit_part = [&](const char* name, bool real_part) {
        out << "  \"" << name << "\": [";
        for (std::size_t r = 0; r < rho.dim(); ++r) {
            out << (r ? ",\n    [" : "\n    [");
            for (std::size_t c = 0; c < rho.dim(); ++c) {
                const cdouble v = rho.elements()(r, c);
                out << (c ? ", " : "") << fmt_g17(real_part ? v.real() : v.imag());
            }
            out << "]";
        }
        out << "\n  ]";
    };
    emit_part("re", true);
    out << ",\n";
    emit_part("im", false);
    out << "\n}\n";
    return out.str();
}

// ---- measurement-pair JSON: {"q": {"re": [[..]], "im": [[..]]}, "r": {...}}
// Rows are eigenvectors.

inline ObservableBasis basis_from_json(const nlohmann::json& j, const std::string& name) {
    if (!j.contains("re") || !j.contains("im"))
        throw ValidationError("basis JSON: '" + name + "' needs re and im arrays");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const std::size_t d = re.size();
    if (d == 0 || im.size() != d)
        throw ValidationError("basis JSON: '" + name + "' re/im sizes differ or empty");
    Matrix vectors(d, d);
    for (std::size_t row = 0; row < d; ++row) {
        if (re[row].size() != d || im[row].size() != d)
            throw ValidationError("basis JSON: '" + name + "' rows must have length d");
        for (std::size_t k = 0; k < d; ++k)
            vectors(k, row) = cdouble(re[row][k].get<double>(), im[row][k].get<double>());
    }
    return ObservableBasis(std::move(vectors));
}

inline MeasurementPair read_pair_json(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("basis JSON: parse failure in " + path + ": " + e.what());
    }
    if (!j.contains("q") || !j.contains("r"))
        throw ValidationError("basis JSON: need 'q' and 'r' objects");
    return MeasurementPair(basis_from_json(j.at("q"), "q"), basis_from_json(j.at("r"), "r"));
}

// ---- counts CSV: header `setting,outcome_A,...,outcome_<party>,count`

struct CountsData {
    JointDistribution dist_q;
    JointDistribution dist_r;
    double total_q = 0.0;
    double total_r = 0.0;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

// Counts are normalized per setting. Totals under `min_counts` per setting set
// a warning: plug-in entropies from so few counts are unreliable.
inline CountsData read_counts_csv(const std::string& path, double min_counts = 1000.0,
                                  std::vector<std::size_t> dims_override = {}) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("counts CSV: empty file " + path);
    const auto header = detail::split_csv_line(line);
    if (header.size() < 4 || header.front() != "setting" || header.back() != "count")
        throw ValidationError(
            "counts CSV: header must be setting,outcome_A,...,count (got '" + line + "')");
    const std::size_t parties = header.size() - 2;
    for (std::size_t p = 0; p < parties; ++p) {
        const std::string expect = std::string("outcome_") + static_cast<char>('A' + p);
        if (header[p + 1] != expect)
            throw ValidationError("counts CSV: column " + std::to_string(p + 1) +
                                  " must be named " + expect);
    }

    struct Row {
        bool is_q;
        std::vector<std::size_t> outcome;
        double count;
    };
    std::vector<Row> rows;
    std::vector<std::size_t> dims(parties, 0);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != parties + 2)
            throw ValidationError("counts CSV: line " + std::to_string(line_no) +
                                  " has wrong field count");
        Row row;
        if (fields[0] == "Q")
            row.is_q = true;
        else if (fields[0] == "R")
            row.is_q = false;
        else
            throw ValidationError("counts CSV: line " + std::to_string(line_no) +
                                  ": setting must be Q or R");
        for (std::size_t p = 0; p < parties; ++p) {
            char* end = nullptr;
            const long v = std::strtol(fields[p + 1].c_str(), &end, 10);
            if (end == fields[p + 1].c_str() || v < 0)
                throw ValidationError("counts CSV: line " + std::to_string(line_no) +
                                      ": bad outcome index");
            row.outcome.push_back(static_cast<std::size_t>(v));
            dims[p] = std::max(dims[p], static_cast<std::size_t>(v) + 1);
        }
        char* end = nullptr;
        row.count = std::strtod(fields.back().c_str(), &end);
        if (end == fields.back().c_str() || row.count < 0)
            throw ValidationError("counts CSV: line " + std::to_string(line_no) +
                                  ": bad count");
        rows.push_back(std::move(row));
    }
    if (!dims_override.empty()) {
        if (dims_override.size() != parties)
            throw ValidationError("counts CSV: dims override has wrong party count");
        for (std::size_t p = 0; p < parties; ++p)
            if (dims_override[p] < dims[p])
                throw ValidationError("counts CSV: dims override below observed outcomes");
        dims = dims_override;
    }
    for (std::size_t p = 0; p < parties; ++p)
        if (dims[p] < 2)
            throw ValidationError("counts CSV: party " + std::string(1, char('A' + p)) +
                                  " never varies; specify dims explicitly");

    const SubsystemSignature sig(dims);
    std::vector<double> q(sig.total_dim(), 0.0), r(sig.total_dim(), 0.0);
    double tq = 0.0, tr = 0.0;
    for (const auto& row : rows) {
        const std::size_t idx = sig.flatten(row.outcome);
        (row.is_q ? q : r)[idx] += row.count;
        (row.is_q ? tq : tr) += row.count;
    }
    if (tq <= 0.0 || tr <= 0.0)
        throw ValidationError("counts CSV: each setting needs a positive total count");
    for (auto& x : q) x /= tq;
    for (auto& x : r) x /= tr;

    CountsData data{JointDistribution(dims, std::move(q)), JointDistribution(dims, std::move(r)),
                    tq, tr, {}};
    if (tq < min_counts)
        data.warnings.push_back("setting Q has fewer than " + fmt_g17(min_counts) +
                                " total counts; entropy estimates are unreliable");
    if (tr < min_counts)
        data.warnings.push_back("setting R has fewer than " + fmt_g17(min_counts) +
                                " total counts; entropy estimates are unreliable");
    return data;
}

// ---- report writers (hand-rolled so float formatting stays at 17 digits)

namespace detail {

inline void emit_string_array(std::ostringstream& out, const std::vector<std::string>& v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? ", " : "") << "\"" << v[i] << "\"";
    }
    out << "]";
}

inline void emit_double_array(std::ostringstream& out, const std::vector<double>& v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << fmt_g17(v[i]);
    out << "]";
}

}  // namespace detail

inline std::string witness_report_json(const WitnessReport& rep, int indent = 0) {
    const std::string pad(indent, ' ');
    std::ostringstream out;
    out << pad << "{\n";
    out << pad << "  \"method\": \"" << to_string(rep.method) << "\",\n";
    out << pad << "  \"d_max\": " << rep.d_max << ",\n";
    out << pad << "  \"per_party_terms_bits\": ";
    detail::emit_double_array(out, rep.per_party_terms_bits);
    out << ",\n";
    out << pad << "  \"omega\": ";
    detail::emit_double_array(out, rep.omegas);
    out << ",\n";
    out << pad << "  \"v_bound_bits\": " << fmt_g17(rep.v_bound_bits) << ",\n";
    out << pad << "  \"e3f_lower_bits\": " << fmt_g17(rep.e3f_lower_bits) << ",\n";
    out << pad << "  \"warnings\": ";
    detail::emit_string_array(out, rep.warnings);
    out << "\n" << pad << "}";
    return out.str();
}

inline std::string cyclic_report_json(const CyclicWitnessReport& rep,
                                      const std::vector<std::string>& warnings = {}) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << rep.n << ",\n";
    out << "  \"lhs_bits\": " << fmt_g17(rep.lhs_bits) << ",\n";
    out << "  \"rhs_bits\": " << fmt_g17(rep.rhs_bits) << ",\n";
    out << "  \"violated\": " << (rep.violated ? "true" : "false") << ",\n";
    out << "  \"warnings\": ";
    detail::emit_string_array(out, warnings);
    out << "\n}\n";
    return out.str();
}

inline std::string element_report_json(const ElementBoundReport& rep) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"b_full\": " << fmt_g17(rep.b_full) << ",\n";
    out << "  \"b_corner\": " << fmt_g17(rep.b_corner) << ",\n";
    out << "  \"enf_lower_bits\": " << fmt_g17(rep.enf_lower_bits) << "\n";
    out << "}\n";
    return out.str();
}

}  // namespace entrobound
