#include "gf2collatz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gf2collatz/automaton.hpp"
#include "gf2collatz/fp_maps.hpp"
#include "gf2collatz/gf2poly.hpp"
#include "gf2collatz/maps.hpp"
#include "gf2collatz/orbit_matrix.hpp"
#include "gf2collatz/parity.hpp"
#include "gf2collatz/stats.hpp"
#include "gf2collatz/verify.hpp"

namespace gf2collatz::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

Gf2Poly parse_poly_arg(const std::string& text, bool allow_zero) {
    Gf2Poly f;
    try {
        f = Gf2Poly::parse(text);
    } catch (const Error& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
    if (!allow_zero && f.is_zero()) throw UsageError("--poly: the zero polynomial is not accepted here");
    return f;
}

MapKind parse_map_arg(const std::string& name) {
    try {
        return map_kind_from_string(name);
    } catch (const Error& e) {
        throw UsageError(std::string("--map: ") + e.what());
    }
}

std::string format_poly(const Gf2Poly& f, bool hex) { return hex ? f.to_hex() : f.to_pretty(); }

void print_rho(std::ostream& out, const RhoRecord& rec) {
    char buf[64];
    out << "rho(n=" << rec.n << ", map=" << to_string(rec.map) << ", mode=" << to_string(rec.mode)
        << "): count=" << rec.count << " sum_tau=" << rec.sum_tau;
    std::snprintf(buf, sizeof(buf), "%.6f", rec.rho());
    out << " rho=" << buf;
    std::snprintf(buf, sizeof(buf), "%.6f", rec.rho_over_n());
    out << " rho_over_n=" << buf;
    if (rec.mode == RhoMode::Sampled) {
        std::snprintf(buf, sizeof(buf), "%.6f", rec.ci_halfwidth);
        out << " ci_halfwidth=" << buf;
    }
    out << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial Collatz dynamics over GF(2): stopping times, parity sequences, "
                 "orbit matrices, matrix automata and average-stopping-time statistics",
                 "gf2collatz"};
    app.require_subcommand(1);

    std::string poly_text;
    std::string map_name = "T";
    bool hex_output = false;

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Stopping time of a polynomial");
    tau_cmd->add_option("--poly", poly_text, "Polynomial (hex mask 0x7 or pretty x^2+x+1)")->required();
    tau_cmd->add_option("--map", map_name, "Map: T0|T1|T|Tstar|That (default T)");

    // orbit
    bool orbit_degrees = false;
    auto* orbit_cmd = app.add_subcommand("orbit", "Full orbit down to 1");
    orbit_cmd->add_option("--poly", poly_text, "Polynomial")->required();
    orbit_cmd->add_option("--map", map_name, "Map: T0|T1|T|Tstar|That (default T)");
    orbit_cmd->add_flag("--degrees", orbit_degrees, "Print the degree sequence instead");
    orbit_cmd->add_flag("--hex", hex_output, "Print polynomials as hex masks");
    tau_cmd->add_flag("--hex", hex_output, "Accepted for symmetry; tau output is numeric");

    // rho
    int rho_n = 0;
    std::uint64_t rho_samples = 0;
    std::uint64_t rho_seed = 1;
    unsigned rho_threads = 0;
    std::string rho_checkpoint;
    std::string rho_csv;
    auto* rho_cmd = app.add_subcommand("rho", "Average stopping time over all degree-n inputs");
    rho_cmd->add_option("--n", rho_n, "Degree")->required();
    rho_cmd->add_option("--map", map_name, "Map: T0|T1|T|Tstar|That (default T)");
    rho_cmd->add_option("--sample", rho_samples, "Sample size (omit for the exact exhaustive sum)");
    rho_cmd->add_option("--seed", rho_seed, "Sampling seed (default 1)");
    rho_cmd->add_option("--threads", rho_threads,
                        "Worker threads (default: GF2_COLLATZ_THREADS or hardware)");
    rho_cmd->add_option("--checkpoint", rho_checkpoint, "Checkpoint file for resumable enumeration");
    rho_cmd->add_option("--csv", rho_csv, "Also write the record as CSV");

    // parity
    int parity_len = 0;
    std::string parity_invert;
    auto* parity_cmd = app.add_subcommand("parity", "Parity sequences and their inverse");
    parity_cmd->add_option("--poly", poly_text, "Polynomial");
    parity_cmd->add_option("--len", parity_len, "Sequence length");
    parity_cmd->add_option("--invert", parity_invert, "Bits to invert, e.g. 1100");
    parity_cmd->add_flag("--hex", hex_output, "Print polynomials as hex masks");

    // matrix-image
    std::string image_out;
    std::string image_format = "ppm";
    auto* image_cmd = app.add_subcommand("matrix-image", "Render the orbit matrix of a polynomial");
    image_cmd->add_option("--poly", poly_text, "Polynomial with constant coefficient 1")->required();
    image_cmd->add_option("--out", image_out, "Output file")->required();
    image_cmd->add_option("--format", image_format, "ppm|pgm (default ppm)");

    // search-automaton
    long search_n = 0, search_m = 0;
    std::string search_strategy = "exhaustive";
    std::uint64_t search_budget = 1000;
    std::uint64_t search_seed = 1;
    std::string search_json;
    auto* search_cmd = app.add_subcommand("search-automaton", "Search seeds for large walk stopping time");
    search_cmd->add_option("--n", search_n, "Rows")->required();
    search_cmd->add_option("--m", search_m, "Last column index")->required();
    search_cmd->add_option("--strategy", search_strategy, "exhaustive|hill_climb|random");
    search_cmd->add_option("--budget", search_budget, "Evaluation budget (default 1000)");
    search_cmd->add_option("--seed", search_seed, "Search seed (default 1)");
    search_cmd->add_option("--json", search_json, "Write the result as JSON");

    // fp
    std::uint32_t fp_p = 0;
    long fp_deg = 0;
    std::uint64_t fp_samples = 4096;
    std::uint64_t fp_seed = 1;
    std::string fp_csv;
    auto* fp_cmd = app.add_subcommand("fp", "Prime-field stopping-time survey");
    fp_cmd->add_option("--p", fp_p, "Prime modulus")->required();
    fp_cmd->add_option("--deg", fp_deg, "Maximum degree")->required();
    fp_cmd->add_option("--samples", fp_samples, "Samples per non-exhaustive degree (default 4096)");
    fp_cmd->add_option("--seed", fp_seed, "Sampling seed (default 1)");
    fp_cmd->add_option("--csv", fp_csv, "Write the survey as CSV");

    // verify
    std::string verify_level = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_option("--level", verify_level, "quick|full (default quick)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tau_cmd->parsed()) {
            const Gf2Poly f = parse_poly_arg(poly_text, false);
            out << "tau=" << stopping_time(f, parse_map_arg(map_name)) << "\n";
        } else if (orbit_cmd->parsed()) {
            const Gf2Poly f = parse_poly_arg(poly_text, false);
            const auto orb = orbit(f, parse_map_arg(map_name));
            if (orbit_degrees) {
                for (std::size_t i = 0; i < orb.size(); ++i)
                    out << (i ? "," : "") << orb[i].degree().value_or(0);
                out << "\n";
            } else {
                for (const Gf2Poly& g : orb) out << format_poly(g, hex_output) << "\n";
            }
        } else if (rho_cmd->parsed()) {
            RhoRecord rec;
            const MapKind kind = parse_map_arg(map_name);
            if (rho_samples > 0) {
                rec = rho_sample(rho_n, rho_samples, kind, rho_seed);
            } else {
                std::optional<std::filesystem::path> cp;
                if (!rho_checkpoint.empty()) cp = rho_checkpoint;
                rec = rho_exhaustive(rho_n, kind, rho_threads, cp);
            }
            print_rho(out, rec);
            if (!rho_csv.empty()) emit_csv({rec}, rho_csv);
        } else if (parity_cmd->parsed()) {
            const bool have_poly = !poly_text.empty();
            const bool have_invert = !parity_invert.empty();
            if (have_poly == have_invert)
                throw UsageError("use exactly one of --poly/--len or --invert");
            if (have_poly) {
                if (parity_len <= 0) throw UsageError("--len must be positive");
                const Gf2Poly f = parse_poly_arg(poly_text, true);
                out << parity_seq(f, static_cast<std::size_t>(parity_len)).to_string() << "\n";
            } else {
                ParitySeq p;
                try {
                    p = ParitySeq::from_string(parity_invert);
                } catch (const Error& e) {
                    throw UsageError(std::string("--invert: ") + e.what());
                }
                out << format_poly(invert_parity_seq(p), hex_output) << "\n";
            }
        } else if (image_cmd->parsed()) {
            const Gf2Poly f = parse_poly_arg(poly_text, false);
            ImageFormat fmt;
            if (image_format == "ppm") fmt = ImageFormat::PPM;
            else if (image_format == "pgm") fmt = ImageFormat::PGM;
            else throw UsageError("--format must be ppm or pgm");
            const ImageSummary s = render(f, image_out, fmt);
            out << "wrote " << s.width << "x" << s.height << " " << image_format << " (" << s.bytes
                << " bytes) to " << image_out << "\n";
        } else if (search_cmd->parsed()) {
            SearchStrategy strat;
            try {
                strat = search_strategy_from_string(search_strategy);
            } catch (const Error& e) {
                throw UsageError(std::string("--strategy: ") + e.what());
            }
            const SearchResult res = search_max_tau(search_n, search_m, strat, search_budget, search_seed);
            out << res.to_json() << "\n";
            if (!search_json.empty()) {
                std::ofstream os(search_json, std::ios::binary | std::ios::trunc);
                if (!os) throw IoError("cannot open '" + search_json + "' for writing");
                os << res.to_json() << "\n";
            }
        } else if (fp_cmd->parsed()) {
            const FpSurvey survey = survey_p(fp_p, fp_deg, fp_samples, fp_seed);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", survey.c_hat);
            out << "p=" << survey.p << " max_deg=" << fp_deg << " c_hat=" << buf << "\n";
            if (!fp_csv.empty()) survey.write_csv(std::filesystem::path(fp_csv));
            else survey.write_csv(out);
        } else if (verify_cmd->parsed()) {
            VerifyLevel level;
            if (verify_level == "quick") level = VerifyLevel::Quick;
            else if (verify_level == "full") level = VerifyLevel::Full;
            else throw UsageError("--level must be quick or full");
            const auto results = run_verification(level, &out);
            std::size_t passed = 0;
            for (const CheckResult& r : results) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
                passed += r.pass ? 1 : 0;
            }
            out << passed << "/" << results.size() << " checks passed\n";
            if (passed != results.size()) return 1;
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gf2collatz::cli
