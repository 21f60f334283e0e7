#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tak/error.hpp"
#include "tak/format.hpp"
#include "tak/knots.hpp"
#include "tak/representations.hpp"
#include "tak/serialization.hpp"
#include "tak/solver.hpp"
#include "tak/twisted_alexander.hpp"

namespace tak::cli {

namespace {

struct Config {
    std::string knot;
    std::string family = "all";
    std::string n_spec;
    std::string n_range;
    std::string mode;
    std::string x;
    std::string z;
    std::string y;
    std::string format = "json";
    std::string out_path;
    double tolerance = Tolerances{}.zero;
    double monic_tolerance = Tolerances{}.monic;
    unsigned seed = 1;
    int count = 10;

    Tolerances tolerances() const {
        Tolerances t;
        t.zero = tolerance;
        t.monic = monic_tolerance;
        return t;
    }
};

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw ParameterError("");
            return {v, v};
        }
        const std::string a = s.substr(0, dots);
        const std::string b = s.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) throw ParameterError("");
        const int hi = std::stoi(b, &used);
        if (used != b.size()) throw ParameterError("");
        if (hi < lo) throw ParameterError("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParameterError("bad n-range '" + s + "' (expected N or A..B with A <= B)");
    }
}

unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TAK_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

std::string describe(const DeltaReport& r) {
    std::ostringstream os;
    os << r.knot << " x=" << format_complex(x_of(r.coords));
    if (const auto* p = std::get_if<TraceCoordsPlus>(&r.coords))
        os << " z=" << format_complex(p->z);
    else
        os << " y=" << format_complex(std::get<TraceCoordsMinus>(r.coords).y);
    os << " span=" << r.span << " leading=" << format_complex(r.leading) << " monic=" << (r.monic ? "yes" : "no");
    os << " deficient=" << (r.deficient ? (*r.deficient ? "yes" : "no") : "unknown");
    return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_compute(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Knot knot = parse_knot_spec(cfg.knot);
    const KnotPresentation pres = presentation(knot);
    const Complex x = parse_complex(cfg.x);
    const bool twist = std::holds_alternative<TwistKnot>(knot);
    if (twist && cfg.y.empty()) throw ParameterError("twist knots take --y (trace of ab^-1)");
    if (!twist && cfg.z.empty()) throw ParameterError("two-bridge knots take --z (trace of ab)");
    if (twist && !cfg.z.empty()) throw ParameterError("twist knots take --y, not --z");
    if (!twist && !cfg.y.empty()) throw ParameterError("two-bridge knots take --z, not --y");

    const Tolerances tol = cfg.tolerances();
    const Representation rep = twist ? Representation::from_xy(x, parse_complex(cfg.y), tol)
                                     : Representation::from_xz(x, parse_complex(cfg.z), tol);
    try {
        const DeltaReport r = twisted_alexander(pres, rep, tol);
        if (cfg.format == "text")
            out << describe(r) << '\n';
        else
            emit(out, to_json(r));
        return kOk;
    } catch (const NotARepresentation& e) {
        err << "error: " << e.what() << '\n';
        err << "relator residual: " << format_double(relator_residual(rep, pres.word)) << '\n';
        err << "riley value: " << format_complex(riley_value(pres, rep)) << '\n';
        return kVerificationFailed;
    }
}

void print_witnesses_text(std::ostream& out, const std::vector<WitnessReport>& ws) {
    for (const auto& w : ws) {
        out << to_string(w.family) << " n=" << w.n << ' ' << to_string(w.mode) << " x=" << format_complex(x_of(w.coords));
        if (const auto* p = std::get_if<TraceCoordsPlus>(&w.coords))
            out << " z=" << format_complex(p->z);
        else
            out << " y=" << format_complex(std::get<TraceCoordsMinus>(w.coords).y);
        out << (w.verified ? " verified" : " FAILED");
        if (w.delta) out << " span=" << w.delta->span << " leading=" << format_complex(w.delta->leading);
        for (const auto& issue : w.issues) out << " [" << issue << "]";
        out << '\n';
    }
}

int cmd_solve(const Config& cfg, std::ostream& out) {
    if (cfg.family == "all") throw ParameterError("solve takes a single --family");
    if (cfg.mode.empty()) throw ParameterError("solve needs --mode");
    const Range r = parse_range(cfg.n_spec);
    if (r.lo != r.hi) throw ParameterError("solve takes a single --n");
    const auto sys = ExceptionalSystem::make(parse_family(cfg.family), r.lo, parse_mode(cfg.mode));
    const auto ws = solve(sys, cfg.tolerances());
    if (cfg.format == "text") {
        print_witnesses_text(out, ws);
    } else if (cfg.format == "csv") {
        out << "family,n,mode,x_re,x_im,coord,c_re,c_im,span,leading_re,leading_im,verified\n";
        for (const auto& w : ws) {
            const auto* p = std::get_if<TraceCoordsPlus>(&w.coords);
            const Complex c = p ? p->z : std::get<TraceCoordsMinus>(w.coords).y;
            const Complex x = x_of(w.coords);
            out << to_string(w.family) << ',' << w.n << ',' << to_string(w.mode) << ',' << format_double(x.real()) << ','
                << format_double(x.imag()) << ',' << (p ? 'z' : 'y') << ',' << format_double(c.real()) << ','
                << format_double(c.imag()) << ',' << (w.delta ? std::to_string(w.delta->span) : "") << ','
                << (w.delta ? format_double(w.delta->leading.real()) : "") << ','
                << (w.delta ? format_double(w.delta->leading.imag()) : "") << ',' << (w.verified ? "true" : "false")
                << '\n';
        }
    } else {
        Json arr = Json::array();
        for (const auto& w : ws) arr.push_back(to_json(w));
        emit(out, arr);
    }
    const bool ok = std::all_of(ws.begin(), ws.end(), [](const auto& w) { return w.verified; });
    return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const std::string spec = !cfg.n_range.empty() ? cfg.n_range : cfg.n_spec;
    if (spec.empty()) throw ParameterError("verify needs --n or --n-range");
    const Range r = parse_range(spec);
    std::vector<Family> families;
    if (cfg.family == "all")
        families = {Family::B3, Family::TwistEven, Family::TwistOdd};
    else
        families = {parse_family(cfg.family)};
    const std::vector<Mode> modes =
        cfg.mode.empty() ? std::vector<Mode>{Mode::Deficient, Mode::Monic} : std::vector<Mode>{parse_mode(cfg.mode)};

    CensusOptions opts;
    opts.tol = cfg.tolerances();
    opts.threads = thread_budget();
    std::vector<CountResult> all;
    for (Family f : families) {
        for (Mode m : modes) (void)theorem_count(f, r.lo, m);  // validates n range per family
        auto part = census(f, r.lo, r.hi, modes, opts);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }

    if (cfg.format == "csv") {
        out << census_csv(all);
    } else if (cfg.format == "text") {
        for (const auto& c : all)
            out << to_string(c.family) << " n=" << c.n << ' ' << to_string(c.mode) << ": found " << c.found_count
                << ", theorem " << c.theorem_count << (c.counts_match() ? "" : " MISMATCH")
                << (c.all_verified ? ", all witnesses verified" : ", UNVERIFIED witnesses") << '\n';
    } else {
        emit(out, to_json(all));
    }

    bool ok = true;
    for (const auto& c : all) {
        if (!c.ok()) {
            ok = false;
            err << "mismatch: " << to_string(c.family) << " n=" << c.n << ' ' << to_string(c.mode) << " found "
                << c.found_count << " theorem " << c.theorem_count << (c.all_verified ? "" : " (unverified witnesses)")
                << '\n';
        }
        for (const auto& w : c.witnesses)
            if (w.x_near_minus_two)
                err << "note: " << to_string(c.family) << " n=" << c.n << " witness with x near -2\n";
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_alexander(const Config& cfg, std::ostream& out) {
    const Knot knot = parse_knot_spec(cfg.knot);
    const KnotPresentation pres = presentation(knot);
    const IntPolynomial p = classical_alexander(pres);
    // every two-bridge knot is alternating, where monic Alexander polynomial <=> fibered
    const bool monic = p.leading() == 1;
    const std::optional<bool> known = is_fibered(knot);
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.convert_to<long long>());
    Json j = {
        {"knot", to_spec(knot)},
        {"coeffs", coeffs},
        {"polynomial", p.to_string('t')},
        {"leading", p.leading().convert_to<long long>()},
        {"fibered", known.value_or(monic)},
        {"fibered_from_alexander", monic},
        {"genus", genus(knot) ? Json(*genus(knot)) : Json(nullptr)},
    };
    if (cfg.format == "text") {
        out << to_spec(knot) << ": " << p.to_string('t') << " (leading " << p.leading() << ", "
            << (known.value_or(monic) ? "fibered" : "non-fibered") << ")\n";
    } else {
        emit(out, j);
    }
    return kOk;
}

int cmd_sample(const Config& cfg, std::ostream& out) {
    const Knot knot = parse_knot_spec(cfg.knot);
    const KnotPresentation pres = presentation(knot);
    const Tolerances tol = cfg.tolerances();
    std::mt19937_64 rng(cfg.seed);
    // second coordinate uniform in the disk of radius 2, |x| <= 3
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * std::numbers::pi);
    Json arr = Json::array();
    int produced = 0;
    for (int attempt = 0; produced < cfg.count && attempt < 50 * cfg.count; ++attempt) {
        const Complex c = std::polar(2.0 * std::sqrt(radius(rng)), angle(rng));
        for (const auto& rep : representations_at(pres, c, tol)) {
            if (produced >= cfg.count) break;
            if (std::abs(rep.x()) > 3.0) continue;
            try {
                const DeltaReport r = twisted_alexander(pres, rep, tol);
                if (cfg.format == "text")
                    out << describe(r) << '\n';
                else
                    arr.push_back(to_json(r));
                ++produced;
            } catch (const Error&) {
            }
        }
    }
    if (cfg.format != "text") emit(out, arr);
    return produced == cfg.count ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Twisted Alexander polynomials of two-bridge and twist knots"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tolerance", cfg.tolerance, "Relative zero threshold for Laurent coefficients")
            ->check(CLI::PositiveNumber);
        sub->add_option("--monic-tolerance", cfg.monic_tolerance, "Allowed |leading - 1| for monic")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    };

    auto* compute = app.add_subcommand("compute", "Twisted Alexander polynomial at one representation");
    compute->add_option("--knot", cfg.knot, "b:p,m or twist:m")->required();
    compute->add_option("--x", cfg.x, "Trace of a (complex literal)")->required();
    compute->add_option("--z", cfg.z, "Trace of ab (two-bridge knots)");
    compute->add_option("--y", cfg.y, "Trace of ab^-1 (twist knots)");
    add_common(compute);

    auto* solve_cmd = app.add_subcommand("solve", "Exceptional representations of one family member");
    solve_cmd->add_option("--family", cfg.family)->required()->check(CLI::IsMember({"b3", "twist-even", "twist-odd"}));
    solve_cmd->add_option("--n", cfg.n_spec)->required();
    solve_cmd->add_option("--mode", cfg.mode)->required()->check(CLI::IsMember({"deficient", "monic"}));
    add_common(solve_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Compare witness counts with the closed-form counts");
    verify_cmd->add_option("--family", cfg.family)->check(CLI::IsMember({"b3", "twist-even", "twist-odd", "all"}));
    auto* n_opt = verify_cmd->add_option("--n", cfg.n_spec, "N or A..B");
    verify_cmd->add_option("--n-range", cfg.n_range, "A..B")->excludes(n_opt);
    verify_cmd->add_option("--mode", cfg.mode)->check(CLI::IsMember({"deficient", "monic"}));
    add_common(verify_cmd);

    auto* alexander = app.add_subcommand("alexander", "Classical Alexander polynomial and fiberedness");
    alexander->add_option("--knot", cfg.knot)->required();
    add_common(alexander);

    auto* sample = app.add_subcommand("sample", "Delta at random nonabelian representations");
    sample->add_option("--knot", cfg.knot)->required();
    sample->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed);
    add_common(sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "usage error: cannot open " << cfg.out_path << '\n';
            return kUsageError;
        }
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    try {
        if (compute->parsed()) return cmd_compute(cfg, sink, err);
        if (solve_cmd->parsed()) return cmd_solve(cfg, sink);
        if (verify_cmd->parsed()) return cmd_verify(cfg, sink, err);
        if (alexander->parsed()) return cmd_alexander(cfg, sink);
        if (sample->parsed()) return cmd_sample(cfg, sink);
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace tak::cli
