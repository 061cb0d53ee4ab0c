// Command-line interface: every library capability behind one scriptable
// binary with machine-readable (JSON/CSV) output. Exit status: 0 on success
// or a true verdict, 1 when a verification fails, 2 on usage errors.

#include "qcong/congruence.hpp"
#include "qcong/etaquot.hpp"
#include "qcong/parity.hpp"
#include "qcong/qproducts.hpp"
#include "qcong/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::size_t precision_cap() {
    if (const char* env = std::getenv("QCONG_PRECISION_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // fall through to the default on unparsable values
        }
    }
    return 10'000'000;
}

std::size_t checked_precision(std::size_t precision) {
    const std::size_t cap = precision_cap();
    if (precision > cap)
        throw CLI::ValidationError("precision " + std::to_string(precision) +
                                   " exceeds QCONG_PRECISION_CAP (" + std::to_string(cap) + ")");
    return precision;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw CLI::ValidationError("cannot open output file " + output_path);
    out << text;
}

std::string dump(const qcong::Json& j) { return j.dump(2) + "\n"; }

qcong::TruncatedSeries named_series(const std::string& name, std::size_t precision) {
    if (name == "cubic")
        return qcong::cubic_partition_series(precision);
    if (name == "partition")
        return qcong::partition_series(precision);
    if (name == "qpoch1")
        return qcong::qpochhammer_inf(1, precision);
    if (name == "qpoch2")
        return qcong::qpochhammer_inf(2, precision);
    if (name == "jacobi")
        return qcong::jacobi_cube_series(precision);
    if (name == "triangular")
        return qcong::triangular_series(precision);
    throw CLI::ValidationError("unknown series: " + name);
}

// Anchor labels for the congruences the toolkit reproduces from the
// literature; unknown claims get an empty anchor.
std::string anchor_for_claim(const qcong::CongruenceClaim& c) {
    if (c.A == 3 && c.B == 2 && c.M == 3)
        return "Eq. (1.11)";
    if (c.A == 25 && c.B == 22 && c.M == 5)
        return "Theorem 1.3";
    if (c.A == 49 && c.M == 7 && (c.B == 15 || c.B == 29 || c.B == 36 || c.B == 43))
        return "Theorem 1.4";
    return "";
}

qcong::EtaQuotient parse_eta_quotient(const qcong::Json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("exponents"))
        throw CLI::ValidationError(R"(eta-quotient JSON must be {"level": N, "exponents": {...}})");
    std::map<long long, long long> exps;
    for (const auto& [key, val] : j.at("exponents").items())
        exps[std::stoll(key)] = val.get<long long>();
    return qcong::EtaQuotient(j.at("level").get<long long>(), std::move(exps));
}

struct CoeffsOptions {
    std::string series = "cubic";
    long long n = 100;
    std::int64_t modulus = 0; // 0 = exact
    std::string format = "csv";
    std::string output;
};

int run_coeffs(const CoeffsOptions& opt) {
    if (opt.n < 0)
        throw CLI::ValidationError("--n must be nonnegative");
    const std::size_t precision = checked_precision(static_cast<std::size_t>(opt.n) + 1);
    const qcong::TruncatedSeries s = named_series(opt.series, precision);
    std::ostringstream body;
    if (opt.format == "csv") {
        if (opt.modulus != 0)
            qcong::write_csv(body, qcong::reduce_mod(s, static_cast<std::uint64_t>(opt.modulus)));
        else
            qcong::write_csv(body, s);
    } else {
        qcong::Json j;
        j["command"] = "coeffs";
        j["series"] = opt.series;
        j["n"] = opt.n;
        if (opt.modulus != 0)
            j["modulus"] = opt.modulus;
        else
            j["modulus"] = nullptr;
        qcong::Json coeffs = qcong::Json::array();
        if (opt.modulus != 0) {
            const auto ms = qcong::reduce_mod(s, static_cast<std::uint64_t>(opt.modulus));
            for (std::size_t i = 0; i < ms.precision(); ++i)
                coeffs.push_back(qcong::Json::array({i, ms.coeffs()[i]}));
        } else {
            for (std::size_t i = 0; i < s.precision(); ++i)
                coeffs.push_back(qcong::Json::array({i, s.coeffs()[i].get_str()}));
        }
        j["coefficients"] = coeffs;
        body << dump(j);
    }
    emit(body.str(), opt.output);
    return kExitOk;
}

struct VerifyOptions {
    std::string series = "cubic";
    long long A = 3, B = 2;
    std::uint64_t M = 3;
    long long n_max = 1000;
    std::string output;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.series != "partition" && opt.series != "cubic")
        throw CLI::ValidationError("verify supports --series cubic|partition");
    const qcong::CongruenceClaim claim(opt.A, opt.B, opt.M);
    const std::size_t precision =
        checked_precision(static_cast<std::size_t>(opt.A) * (opt.n_max + 2) +
                          static_cast<std::size_t>(opt.B) + 1);
    const qcong::ModSeries s = (opt.series == "partition")
                                   ? qcong::partition_series_mod(opt.M, precision)
                                   : qcong::cubic_partition_series_mod(opt.M, precision);
    qcong::VerificationReport rep = qcong::verify_progression(s, claim, opt.n_max);
    rep.paper_anchor = anchor_for_claim(claim);
    emit(dump(qcong::to_json(rep)), opt.output);
    return rep.verdict ? kExitOk : kExitVerificationFailed;
}

struct EtaCheckOptions {
    std::string input;
    std::string inline_json;
    std::string output;
};

int run_eta_check(const EtaCheckOptions& opt) {
    qcong::Json parsed;
    if (!opt.inline_json.empty()) {
        parsed = qcong::Json::parse(opt.inline_json, nullptr, false);
    } else if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in)
            throw CLI::ValidationError("cannot open input file " + opt.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        parsed = qcong::Json::parse(ss.str(), nullptr, false);
    } else {
        throw CLI::ValidationError("eta-check requires --input FILE or --json STRING");
    }
    if (parsed.is_discarded())
        throw CLI::ValidationError("eta-check: input is not valid JSON");
    const qcong::EtaQuotient eq = parse_eta_quotient(parsed);
    const qcong::ModularityVerdict v = qcong::modularity_verdict(eq);
    qcong::Json j = qcong::to_json(v);
    j["level"] = eq.level();
    emit(dump(j), opt.output);
    return v.is_modular_form ? kExitOk : kExitVerificationFailed;
}

struct SturmOptions {
    long long weight = 4;
    long long level = 50;
    std::string output;
};

int run_sturm(const SturmOptions& opt) {
    const qcong::SturmBound b = qcong::sturm_bound(opt.weight, opt.level);
    qcong::Json j;
    j["command"] = "sturm";
    j["weight"] = opt.weight;
    j["level"] = opt.level;
    j["exact"] = qcong::to_string(b.exact);
    j["floor"] = b.floor_value;
    j["verify_endpoint"] = b.verify_endpoint;
    emit(dump(j), opt.output);
    return kExitOk;
}

struct IdentityOptions {
    std::size_t precision = 500;
    std::string output;
};

int run_identities(const IdentityOptions& opt) {
    checked_precision(opt.precision);
    const qcong::VerificationReport rep = qcong::identity_suite(opt.precision);
    emit(dump(qcong::to_json(rep)), opt.output);
    return rep.verdict ? kExitOk : kExitVerificationFailed;
}

struct ParityOptions {
    long long n_max = 100000;
    std::vector<long long> thresholds = {0, 100, 1000, 10000};
    std::string format = "json";
    std::string output;
};

int run_parity(const ParityOptions& opt) {
    if (opt.n_max < 0)
        throw CLI::ValidationError("--n-max must be nonnegative");
    checked_precision(static_cast<std::size_t>(opt.n_max) + 1);
    if (opt.format == "csv") {
        const qcong::BitSequence bits =
            qcong::parity_recurrence(static_cast<std::size_t>(opt.n_max));
        std::ostringstream body;
        qcong::write_bits_csv(body, bits);
        emit(body.str(), opt.output);
        return kExitOk;
    }
    const qcong::ParityCensus census =
        qcong::parity_census(static_cast<std::size_t>(opt.n_max), opt.thresholds);
    qcong::Json j;
    j["command"] = "parity";
    j["n_max"] = census.n_max;
    j["even_count"] = census.even_count;
    j["odd_count"] = census.odd_count;
    j["odd_fraction"] = qcong::Json{{"num", census.odd_fraction.numerator()},
                                    {"den", census.odd_fraction.denominator()}};
    qcong::Json wit = qcong::Json::array();
    bool all_witnessed = true;
    for (const auto& w : census.witnesses) {
        qcong::Json e;
        e["threshold"] = w.threshold;
        e["first_even"] = w.first_even ? qcong::Json(*w.first_even) : qcong::Json(nullptr);
        e["first_odd"] = w.first_odd ? qcong::Json(*w.first_odd) : qcong::Json(nullptr);
        wit.push_back(e);
        all_witnessed = all_witnessed && w.first_even && w.first_odd;
    }
    j["witnesses"] = wit;
    j["verdict"] = all_witnessed;
    j["paper_anchor"] = "Theorem 1.6";
    emit(dump(j), opt.output);
    return all_witnessed ? kExitOk : kExitVerificationFailed;
}

struct PipelineOptions {
    std::string which;
    std::size_t precision = 0; // 0 = per-pipeline default
    long long k = 1;
    long long n_max = 500;
    std::string output;
};

int run_pipeline(const PipelineOptions& opt) {
    qcong::VerificationReport rep;
    if (opt.which == "mod5") {
        rep = qcong::pipeline_mod5(checked_precision(opt.precision ? opt.precision : 26 * 32));
    } else if (opt.which == "mod7") {
        rep = qcong::pipeline_mod7(checked_precision(opt.precision ? opt.precision : 49 * 600));
    } else if (opt.which == "mod3k") {
        if (opt.k >= 1 && opt.k <= 6 && opt.n_max >= 0) {
            std::size_t need = 1;
            for (long long i = 0; i < opt.k; ++i)
                need *= 3;
            checked_precision(need * (static_cast<std::size_t>(opt.n_max) + 2));
        }
        rep = qcong::mod3_family_check(opt.k, opt.n_max);
    } else {
        throw CLI::ValidationError("pipeline expects mod5, mod7 or mod3k");
    }
    emit(dump(qcong::to_json(rep)), opt.output);
    return rep.verdict ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcong: exact q-series and eta-quotient congruence toolkit"};
    app.require_subcommand(1);

    CoeffsOptions coeffs_opt;
    auto* coeffs = app.add_subcommand("coeffs", "dump series coefficients");
    coeffs->add_option("--series", coeffs_opt.series,
                       "cubic|partition|qpoch1|qpoch2|jacobi|triangular");
    coeffs->add_option("--n", coeffs_opt.n, "largest index to dump");
    coeffs->add_option("--modulus", coeffs_opt.modulus, "reduce coefficients modulo M");
    coeffs->add_option("--format", coeffs_opt.format)->check(CLI::IsMember({"csv", "json"}));
    coeffs->add_option("--output", coeffs_opt.output, "write to file instead of stdout");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "scan a(An+B) == 0 (mod M) over 0..n_max");
    verify->add_option("--series", verify_opt.series, "cubic|partition");
    verify->add_option("--A", verify_opt.A)->required(false);
    verify->add_option("--B", verify_opt.B);
    verify->add_option("--M", verify_opt.M);
    verify->add_option("--n-max", verify_opt.n_max);
    verify->add_option("--output", verify_opt.output);

    EtaCheckOptions eta_opt;
    auto* eta = app.add_subcommand("eta-check", "modularity verdict for an eta-quotient");
    eta->add_option("--input", eta_opt.input, "JSON file {\"level\": N, \"exponents\": {...}}");
    eta->add_option("--json", eta_opt.inline_json, "inline JSON eta-quotient");
    eta->add_option("--output", eta_opt.output);

    SturmOptions sturm_opt;
    auto* sturm = app.add_subcommand("sturm", "Sturm bound for weight k, level N");
    sturm->add_option("--weight", sturm_opt.weight);
    sturm->add_option("--level", sturm_opt.level);
    sturm->add_option("--output", sturm_opt.output);

    IdentityOptions id_opt;
    auto* ident = app.add_subcommand("identities", "run the exact identity suite");
    ident->add_option("--precision", id_opt.precision);
    ident->add_option("--output", id_opt.output);

    ParityOptions parity_opt;
    auto* parity = app.add_subcommand("parity", "parity census of a(n)");
    parity->add_option("--n-max", parity_opt.n_max);
    parity->add_option("--thresholds", parity_opt.thresholds)->delimiter(',');
    parity->add_option("--format", parity_opt.format)->check(CLI::IsMember({"json", "csv"}));
    parity->add_option("--output", parity_opt.output);

    PipelineOptions pipe_opt;
    auto* pipe = app.add_subcommand("pipeline", "run a full verification pipeline");
    pipe->add_option("which", pipe_opt.which, "mod5|mod7|mod3k")->required();
    pipe->add_option("--precision", pipe_opt.precision);
    pipe->add_option("--k", pipe_opt.k, "power for mod3k");
    pipe->add_option("--n-max", pipe_opt.n_max, "range for mod3k");
    pipe->add_option("--output", pipe_opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed())
            return run_coeffs(coeffs_opt);
        if (verify->parsed())
            return run_verify(verify_opt);
        if (eta->parsed())
            return run_eta_check(eta_opt);
        if (sturm->parsed())
            return run_sturm(sturm_opt);
        if (ident->parsed())
            return run_identities(id_opt);
        if (parity->parsed())
            return run_parity(parity_opt);
        if (pipe->parsed())
            return run_pipeline(pipe_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
