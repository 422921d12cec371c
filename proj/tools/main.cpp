#include "sl2hecke/checks.hpp"
#include "sl2hecke/json_io.hpp"
#include "sl2hecke/padic/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace sl2hecke;
using nlohmann::json;

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

struct TableRow {
    std::string a, b, product;
};

int emit_table(Output& output, const std::string& format, const std::vector<TableRow>& rows) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(json{{"a", r.a}, {"b", r.b}, {"product", r.product}});
        output.out() << arr.dump(2) << "\n";
    } else if (format == "csv") {
        output.out() << "a,b,product\n";
        for (const auto& r : rows)
            output.out() << csv_quote(r.a) << "," << csv_quote(r.b) << "," << csv_quote(r.product) << "\n";
    } else {
        for (const auto& r : rows) output.out() << r.a << " * " << r.b << " = " << r.product << "\n";
    }
    return 0;
}

std::vector<TableRow> hecke_table(const HeckeAlg& H, Algebra tag, long max_len) {
    std::vector<HeckeElt> basis;
    for (const auto& w : elements_up_to_length(max_len)) {
        switch (tag) {
        case Algebra::ProP:
            for (uint32_t t = 0; t + 1 < H.p(); ++t) basis.push_back(H.basis_prop({w, t}));
            break;
        case Algebra::Iwahori: basis.push_back(H.basis_iwahori(w)); break;
        case Algebra::Spherical:
            if (in_KDK(w)) basis.push_back(H.basis_spherical(w));
            break;
        }
    }
    std::vector<TableRow> rows;
    for (const auto& a : basis)
        for (const auto& b : basis)
            rows.push_back({H.to_string(a), H.to_string(b), H.to_string(H.mul(a, b))});
    return rows;
}

std::vector<TableRow> ext_table(const ExtAlg& A, long max_len) {
    std::vector<GradedExtElt> basis;
    for (ExtKind kind : {ExtKind::Tau, ExtKind::X, ExtKind::Alpha, ExtKind::Phi})
        for (const auto& w : elements_up_to_length(max_len)) {
            if ((kind == ExtKind::X || kind == ExtKind::Alpha) && w.is_identity()) continue;
            basis.push_back(A.basis(kind, w));
        }
    std::vector<TableRow> rows;
    for (const auto& a : basis)
        for (const auto& b : basis)
            rows.push_back({A.to_string(a), A.to_string(b), A.to_string(A.mul(a, b))});
    return rows;
}

std::vector<TableRow> spherical_table(const SphericalAlg& S, long max_len) {
    std::vector<SphericalExtElt> basis;
    for (long m = 0; m <= max_len; ++m) basis.push_back(S.T_power(m));
    for (long m = 0; m <= max_len; ++m) basis.push_back(S.u_T_power(m));
    for (long n = 0; n <= max_len; ++n) basis.push_back(S.B(n));
    basis.push_back(S.Phi1());
    for (long n = 0; n <= max_len; ++n) basis.push_back(S.Psi(n));
    std::vector<TableRow> rows;
    for (const auto& a : basis)
        for (const auto& b : basis)
            rows.push_back({S.to_string(a), S.to_string(b), S.to_string(S.ek_mul(a, b))});
    return rows;
}

int run_table(Output& output, const std::string& format, const RunConfig& cfg,
              const std::string& algebra) {
    HeckeAlg H(cfg.p);
    if (algebra == "H") return emit_table(output, format, hecke_table(H, Algebra::ProP, cfg.max_len));
    if (algebra == "H_J") return emit_table(output, format, hecke_table(H, Algebra::Iwahori, cfg.max_len));
    if (algebra == "H_K")
        return emit_table(output, format, hecke_table(H, Algebra::Spherical, cfg.max_len));
    ExtAlg A(cfg.p);
    if (algebra == "E_J") return emit_table(output, format, ext_table(A, cfg.max_len));
    if (algebra == "E_K") {
        SphericalAlg S(A, 2 * cfg.max_len + 2);
        return emit_table(output, format, spherical_table(S, cfg.max_len));
    }
    throw CLI::ValidationError("algebra must be one of H, H_J, H_K, E_J, E_K");
}

int run_verify(Output& output, const std::string& format, const RunConfig& cfg, const std::string& id) {
    std::vector<CheckResult> results =
        id == "all" ? run_all_checks(cfg) : std::vector<CheckResult>{run_check(id, cfg)};
    bool all_pass = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"id", r.id}, {"pass", r.pass}, {"details", r.details}});
            all_pass = all_pass && r.pass;
        }
        output.out() << arr.dump(2) << "\n";
    } else if (format == "csv") {
        output.out() << "id,pass,details\n";
        for (const auto& r : results) {
            output.out() << csv_quote(r.id) << "," << (r.pass ? "true" : "false") << ","
                         << csv_quote(r.details) << "\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const auto& r : results) {
            output.out() << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.details << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int run_oracle(Output& output, const std::string& format, const RunConfig& cfg,
               const std::string& descriptor) {
    using namespace sl2hecke::padic;
    GroupDescriptor desc = GroupDescriptor::parse(descriptor);
    ResidueRing R(cfg.p, cfg.f, cfg.precision);
    FrattiniQuotient q = frattini_quotient(desc, R);

    OracleReport report;
    report.group = desc.name;
    report.p = cfg.p;
    report.f = cfg.f;
    report.m = cfg.precision;
    report.order = q.group_order.str();
    report.frattini_invariants = q.invariants(cfg.p);
    json j = to_json(report);
    try {
        ResidueRing next(cfg.p, cfg.f, cfg.precision + 1);
        report.stable = frattini_quotient(desc, next).invariants(cfg.p) == report.frattini_invariants;
        j["stable"] = report.stable;
    } catch (const std::length_error&) {
        j["stable"] = nullptr; // stability probe beyond the enumeration cap
    }

    if (format == "json") {
        output.out() << j.dump(2) << "\n";
    } else if (format == "csv") {
        output.out() << "key,value\n";
        for (const auto& [key, value] : j.items())
            output.out() << csv_quote(key) << "," << csv_quote(value.dump()) << "\n";
    } else {
        output.out() << "group " << report.group << " (p = " << cfg.p << ", f = " << cfg.f
                     << ", m = " << cfg.precision << ")\n"
                     << "order " << report.order << "\n"
                     << "frattini invariants [";
        for (size_t i = 0; i < report.frattini_invariants.size(); ++i)
            output.out() << (i ? ", " : "") << report.frattini_invariants[i];
        output.out() << "]\nstable " << j["stable"].dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Iwahori / spherical Hecke and Ext-algebra computations for SL2(Q_p) in "
                 "characteristic p, with finite-quotient group verification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text", out_path;
    app.add_option("--p", cfg.p, "prime (>= 5)")->capture_default_str();
    app.add_option("--f", cfg.f, "residue degree for the oracle")->capture_default_str();
    app.add_option("--max-len", cfg.max_len, "length / index bound")->capture_default_str();
    app.add_option("--precision", cfg.precision, "congruence precision m")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized property checks")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");

    std::string algebra, statement, descriptor;
    CLI::App* table = app.add_subcommand("table", "pairwise basis multiplication table");
    table->add_option("algebra", algebra, "H, H_J, H_K, E_J or E_K")->required();
    CLI::App* verify = app.add_subcommand("verify", "run a named verification (or 'all')");
    verify->add_option("statement", statement, "check id or 'all'")->required();
    CLI::App* oracle = app.add_subcommand("oracle", "finite congruence-quotient report");
    oracle->add_option("descriptor", descriptor, "J, I, K, J+(l), J-(l), Ktheta(n), L")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        Output output;
        output.open(out_path);
        if (table->parsed()) return run_table(output, format, cfg, algebra);
        if (verify->parsed()) {
            if (!is_check_id(statement)) {
                std::cerr << "unknown statement id '" << statement << "'; known ids:";
                for (const auto& id : check_ids()) std::cerr << " " << id;
                std::cerr << " all\n";
                return 2;
            }
            return run_verify(output, format, cfg, statement);
        }
        return run_oracle(output, format, cfg, descriptor);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
