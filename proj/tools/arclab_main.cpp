// arclab command line: encode/decode plus the analysis and simulation
// harnesses, on top of the shared library's C interface.

#include <arclab.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int EXIT_USAGE = 1;
constexpr int EXIT_VERIFICATION = 2;

struct LibString {
    char* ptr = nullptr;
    ~LibString() { arclab_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

// Exits with a diagnostic that names the offending flag.
[[noreturn]] void fail(const std::string& flag, arclab_status status) {
    std::cerr << "arclab: error: " << flag << ": " << arclab_last_error() << " ["
              << arclab_status_name(status) << "]\n";
    std::exit(EXIT_USAGE);
}

void check_ok(arclab_status status, const std::string& flag) {
    if (status != ARCLAB_OK) fail(flag, status);
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

arclab_backend resolve_backend(const std::string& name, uint32_t n) {
    if (name == "exact") return ARCLAB_BACKEND_EXACT;
    if (name == "float") return ARCLAB_BACKEND_FLOAT;
    // auto: doubles are fine well below the underflow cliff, exact beyond
    return n <= 512 ? ARCLAB_BACKEND_FLOAT : ARCLAB_BACKEND_EXACT;
}

int run_encode(const std::string& p, const std::string& bits, bool with_trace,
               const std::string& format) {
    arclab_encoding* enc = nullptr;
    check_ok(arclab_encode(bits.c_str(), p.c_str(), &enc), "--p/--bits");
    std::unique_ptr<arclab_encoding, decltype(&arclab_encoding_free)> guard(
        enc, &arclab_encoding_free);

    LibString low, high, fd, mid, sub;
    check_ok(arclab_encoding_final(enc, &low.ptr, &high.ptr), "--bits");
    check_ok(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_FIRST_DISAGREEMENT, &fd.ptr), "--bits");
    check_ok(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_MIDPOINT, &mid.ptr), "--bits");
    check_ok(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_SUBINTERVAL, &sub.ptr), "--bits");

    ordered_json out{{"p", p},
                     {"bits", bits},
                     {"low", low.str()},
                     {"high", high.str()},
                     {"first_disagreement", fd.str()},
                     {"midpoint", mid.str()},
                     {"subinterval", sub.str()}};
    if (with_trace) {
        ordered_json trace = ordered_json::array();
        for (size_t i = 0; i < arclab_encoding_steps(enc); ++i) {
            LibString l, h;
            check_ok(arclab_encoding_interval(enc, i, &l.ptr, &h.ptr), "--trace");
            trace.push_back(ordered_json{{"low", l.str()}, {"high", h.str()}});
        }
        out["trace"] = std::move(trace);
    }

    if (format == "text") {
        std::cout << "interval            [" << low.str() << ", " << high.str() << "]\n"
                  << "first disagreement  " << fd.str() << "\n"
                  << "midpoint prefix     " << mid.str() << "\n"
                  << "subinterval         " << sub.str() << "\n";
        if (with_trace)
            for (const auto& step : out["trace"])
                std::cout << "  [" << step["low"].get<std::string>() << ", "
                          << step["high"].get<std::string>() << "]\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_decode(const std::string& p, const std::string& code, size_t n,
               const std::string& format) {
    LibString value, message;
    check_ok(arclab_dyadic_value(code.c_str(), &value.ptr), "--code");
    check_ok(arclab_decode(value.ptr, n, p.c_str(), &message.ptr), "--p/--n");
    if (format == "json") {
        ordered_json out{
            {"p", p}, {"code", code}, {"n", n}, {"value", value.str()}, {"bits", message.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << message.str() << "\n";
    }
    return 0;
}

int render_passthrough(const std::string& json_text, const std::string& format) {
    if (format == "json") {
        std::cout << json_text;
        return 0;
    }
    // text: flatten the top level of the report
    ordered_json j = ordered_json::parse(json_text);
    for (auto& [key, value] : j.items()) {
        if (value.is_number_float())
            std::cout << key << ": " << format_real(value.get<double>()) << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic coding codec with interval-distribution analysis"};
    app.set_version_flag("--version", arclab_version());
    app.require_subcommand(1);

    std::string p, bits, code, format, backend = "auto", samples_csv;
    std::vector<std::string> mgf_points;
    uint32_t m = 1, n = 0;
    uint64_t trials = 1, seed = arclab_default_seed();
    bool with_trace = false, quick = false;

    auto add_format = [&](CLI::App* cmd, const char* dflt) {
        format = "";
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->default_str(dflt);
    };

    CLI::App* cmd_encode = app.add_subcommand("encode", "encode a bit string");
    cmd_encode->add_option("--p", p, "probability of a 1 bit, as a rational a/b")->required();
    cmd_encode->add_option("--bits", bits, "message bits")->required();
    cmd_encode->add_flag("--trace", with_trace, "include the per-bit interval trace");
    add_format(cmd_encode, "json");

    CLI::App* cmd_decode = app.add_subcommand("decode", "decode a codeword");
    cmd_decode->add_option("--p", p, "probability of a 1 bit, as a rational a/b")->required();
    cmd_decode->add_option("--code", code, "codeword bits")->required();
    cmd_decode->add_option("--n", n, "number of message bits to recover")->required();
    add_format(cmd_decode, "text");

    CLI::App* cmd_eigen = app.add_subcommand("eigen", "spectrum of the moment matrix");
    cmd_eigen->add_option("--p", p)->required();
    cmd_eigen->add_option("--m", m, "moment order (>= 1)")->required();
    add_format(cmd_eigen, "json");

    CLI::App* cmd_moments = app.add_subcommand("moments", "exact moment table for steps 0..n");
    cmd_moments->add_option("--p", p)->required();
    cmd_moments->add_option("--m", m, "moment order (>= 1)")->required();
    cmd_moments->add_option("--n", n, "number of steps")->required();
    add_format(cmd_moments, "json");

    CLI::App* cmd_sim = app.add_subcommand("simulate", "seeded distribution experiment");
    cmd_sim->add_option("--p", p)->required();
    cmd_sim->add_option("--n", n, "message length")->required();
    cmd_sim->add_option("--trials", trials)->required();
    cmd_sim->add_option("--seed", seed);
    cmd_sim->add_option("--backend", backend)->check(CLI::IsMember({"auto", "exact", "float"}));
    cmd_sim->add_option("--samples-csv", samples_csv, "also write per-trial samples to a file");
    cmd_sim->add_option("--mgf", mgf_points,
                        "check the MGF identity at a point, as \"u,v\" (repeatable)");
    add_format(cmd_sim, "json");

    CLI::App* cmd_rate = app.add_subcommand("rate", "compression rate vs binary entropy");
    cmd_rate->add_option("--p", p)->required();
    cmd_rate->add_option("--n", n, "message length")->required();
    cmd_rate->add_option("--trials", trials)->required();
    cmd_rate->add_option("--seed", seed);
    add_format(cmd_rate, "json");

    CLI::App* cmd_conc = app.add_subcommand("tails", "interval-length tail probabilities");
    cmd_conc->add_option("--p", p)->required();
    cmd_conc->add_option("--n", n, "largest step swept")->required();
    cmd_conc->add_option("--trials", trials)->required();
    cmd_conc->add_option("--seed", seed);
    add_format(cmd_conc, "json");

    CLI::App* cmd_check = app.add_subcommand("check", "run the bundled verification suite");
    cmd_check->add_flag("--quick", quick, "skip the seeded statistical checks");
    cmd_check->add_option("--seed", seed);
    add_format(cmd_check, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;  // 0 is --help/--version
    }

    if (format.empty()) {
        if (app.got_subcommand(cmd_decode)) format = "text";
        else format = "json";
    }

    if (app.got_subcommand(cmd_encode)) return run_encode(p, bits, with_trace, format);
    if (app.got_subcommand(cmd_decode)) return run_decode(p, code, n, format);

    if (app.got_subcommand(cmd_eigen)) {
        LibString json;
        check_ok(arclab_eigen_report(m, p.c_str(), &json.ptr), "--p/--m");
        return render_passthrough(json.str(), format);
    }
    if (app.got_subcommand(cmd_moments)) {
        LibString out;
        check_ok(arclab_moment_table(m, n, p.c_str(), format == "csv" ? 1 : 0, &out.ptr),
                 "--p/--m/--n");
        std::cout << out.str();
        if (format == "text") return 0;  // table text == csv rendering
        return 0;
    }

    arclab_sim_config cfg{p.c_str(), n, trials, seed, resolve_backend(backend, n)};

    if (app.got_subcommand(cmd_sim)) {
        LibString json;
        check_ok(arclab_simulate(&cfg, samples_csv.empty() ? nullptr : samples_csv.c_str(),
                                 &json.ptr),
                 "--p/--n/--trials");
        ordered_json report = ordered_json::parse(json.str());
        if (!mgf_points.empty()) {
            ordered_json checks = ordered_json::array();
            for (const std::string& point : mgf_points) {
                double u = 0, v = 0;
                if (std::sscanf(point.c_str(), "%lf,%lf", &u, &v) != 2) {
                    std::cerr << "arclab: error: --mgf: expected \"u,v\"\n";
                    return EXIT_USAGE;
                }
                LibString mgf_json;
                check_ok(arclab_mgf_check(&cfg, u, v, &mgf_json.ptr), "--mgf");
                ordered_json one = ordered_json::parse(mgf_json.str());
                checks.push_back(one["mgf_checks"][0]);
            }
            report["mgf_checks"] = std::move(checks);
        }
        return render_passthrough(report.dump(2) + "\n", format);
    }
    if (app.got_subcommand(cmd_rate)) {
        cfg.backend = ARCLAB_BACKEND_EXACT;  // codeword lengths need exact intervals
        if (backend == "float") {
            std::cerr << "arclab: error: --backend: the rate experiment requires the exact "
                         "backend\n";
            return EXIT_USAGE;
        }
        LibString json;
        check_ok(arclab_rate_experiment(&cfg, &json.ptr), "--p/--n/--trials");
        return render_passthrough(json.str(), format);
    }
    if (app.got_subcommand(cmd_conc)) {
        LibString json;
        check_ok(arclab_concentration(&cfg, &json.ptr), "--p/--n/--trials");
        return render_passthrough(json.str(), format);
    }
    if (app.got_subcommand(cmd_check)) {
        LibString json;
        arclab_status status = arclab_self_check(quick ? 0 : 1, seed, &json.ptr);
        if (status != ARCLAB_OK && status != ARCLAB_ERR_CHECK_FAILED) fail("check", status);
        ordered_json report = ordered_json::parse(json.str());
        if (format == "text") {
            for (const auto& check : report["checks"])
                std::printf("[%s] %2d. %s — %s (%.2fs)\n",
                            check["pass"].get<bool>() ? "PASS" : "FAIL",
                            check["id"].get<int>(), check["name"].get<std::string>().c_str(),
                            check["detail"].get<std::string>().c_str(),
                            check["seconds"].get<double>());
        } else {
            std::cout << json.str();
        }
        return status == ARCLAB_OK ? 0 : EXIT_VERIFICATION;
    }
    return EXIT_USAGE;
}
