// tavg: time-average analysis of rational z- and Laplace transforms.
//
// Exit codes: 0 Applicable/success, 1 usage or parse errors, 2 FormalOnly,
// 3 Divergent, 4 UnstableSystem, 5 PoleOnContour.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tavg/averages.hpp"
#include "tavg/catalog.hpp"
#include "tavg/errors.hpp"
#include "tavg/json_io.hpp"
#include "tavg/oracle.hpp"

using nlohmann::json;
using namespace tavg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormalOnly = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitUnstable = 4;
constexpr int kExitPoleOnContour = 5;

int exit_code_for(Applicability a) {
    switch (a) {
        case Applicability::Applicable: return kExitOk;
        case Applicability::FormalOnly: return kExitFormalOnly;
        case Applicability::Divergent: return kExitDivergent;
    }
    return kExitUsage;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::UnstableSystem: return kExitUnstable;
        case ErrorCode::PoleOnContour: return kExitPoleOnContour;
        default: return kExitUsage;
    }
}

class StageTimer {
  public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }
    double total() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
};

std::vector<double> parse_coefficients(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    int column = 1;
    while (std::getline(ss, token, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, flag + ": bad coefficient `" + token +
                                                   "` at entry " + std::to_string(column) +
                                                   " (expected ascending-power numbers)");
        }
        ++column;
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, flag + ": empty coefficient list");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

Tolerances load_tolerances(const std::string& config_path) {
    Tolerances tol;
    if (config_path.empty()) return tol;
    json j = load_json_file(config_path);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, config_path + ": expected an object");
    auto grab = [&j](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    grab("root_residual", tol.root_residual);
    grab("root_cluster", tol.root_cluster);
    grab("reduce_vanish", tol.reduce_vanish);
    grab("unit_circle_band", tol.unit_circle_band);
    grab("imag_axis_band", tol.imag_axis_band);
    grab("quad_abs_err", tol.quad_abs_err);
    grab("verdict_imag", tol.verdict_imag);
    if (j.contains("root_max_iter")) tol.root_max_iter = j.at("root_max_iter").get<int>();
    return tol;
}

// One parsed transform-or-spec input with its echo.
struct TransformInput {
    RationalTransform transform;
    std::optional<SignalSpec> spec;
    json echo;
};

TransformInput resolve_input(bool z_flag, bool s_flag, const std::string& num,
                             const std::string& den, const std::string& spec_path) {
    bool have_coeffs = !num.empty() || !den.empty();
    bool have_spec = !spec_path.empty();
    if (have_coeffs == have_spec)
        throw Error(ErrorCode::ParseError,
                    "provide either --num/--den coefficients or a --spec file");

    if (have_coeffs) {
        if (num.empty() || den.empty())
            throw Error(ErrorCode::ParseError, "--num and --den must be given together");
        if (z_flag == s_flag)
            throw Error(ErrorCode::ParseError, "coefficient input needs exactly one of --z/--s");
        Domain domain = z_flag ? Domain::Z : Domain::S;
        auto nc = parse_coefficients(num, "--num");
        auto dc = parse_coefficients(den, "--den");
        json echo = {{"domain", to_string(domain)}, {"num", nc}, {"den", dc}};
        return {RationalTransform(Polynomial::from_real(nc), Polynomial::from_real(dc), domain),
                std::nullopt, echo};
    }

    SignalSpec spec = spec_from_json(load_json_file(spec_path));
    Domain domain = spec.domain() == SignalDomain::DiscreteTime ? Domain::Z : Domain::S;
    if ((z_flag && domain != Domain::Z) || (s_flag && domain != Domain::S))
        throw Error(ErrorCode::ParseError, "domain flag contradicts the spec file's domain");
    json echo = {{"domain", to_string(domain)}, {"spec", spec_to_json(spec)}};
    return {transform_of(spec), spec, echo};
}

double auto_dt(const SignalSpec& spec) {
    double period = shortest_period(spec);
    if (!std::isfinite(period)) return 0.05;
    return std::min(0.05, period / 64.0);
}

// Oracle samples for a z-domain input: synthesize the spec if we have one,
// otherwise invert the transform by long division.
std::vector<double> oracle_samples(const TransformInput& input, long long horizon) {
    if (input.spec) return synthesize(*input.spec, horizon);
    return coefficients_from_transform(input.transform, horizon);
}

json agreement_json(double value, const RunningAverageTrace& trace) {
    double diff = std::abs(value - trace.final_estimate);
    bool within = diff <= std::max(1e-3, 5.0 * trace.error_estimate);
    return json{{"difference", diff}, {"within_tolerance", within}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int error_report(const Error& e, const char* command) {
    json j = {{"command", command},
              {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    std::cerr << e.what() << "\n";
    emit(j);
    return exit_code_for(e);
}

struct AverageArgs {
    bool z = false, s = false;
    std::string num, den, spec, config;
    long long oracle = -1;  // -1: off; 0: default horizon
    double tmax = 0.0, dt = 0.0;
};

int run_average(const AverageArgs& args) {
    StageTimer timer;
    TransformInput input = resolve_input(args.z, args.s, args.num, args.den, args.spec);
    Tolerances tol = load_tolerances(args.config);
    double parse_ms = timer.lap();

    AverageVerdict verdict = input.transform.domain() == Domain::Z
                                 ? final_value_z(input.transform, tol)
                                 : final_value_s(input.transform, tol);
    double verdict_ms = timer.lap();

    json report = {{"command", "average"}, {"input_echo", input.echo}};
    report["verdict"] = verdict_to_json(verdict);

    json oracle_json = nullptr;
    json agreement = nullptr;
    double oracle_ms = 0.0;
    if (args.oracle >= 0) {
        RunningAverageTrace trace;
        if (input.transform.domain() == Domain::Z) {
            long long horizon = args.oracle > 0 ? args.oracle : 100000;
            trace = cesaro_discrete(oracle_samples(input, horizon));
        } else {
            if (!input.spec)
                throw Error(ErrorCode::ParseError,
                            "the continuous-time oracle needs --spec input (no rational "
                            "inversion is provided for the s-domain)");
            double tmax = args.tmax > 0.0 ? args.tmax
                                          : (args.oracle > 0 ? static_cast<double>(args.oracle)
                                                             : 1000.0);
            double dt = args.dt > 0.0 ? args.dt : auto_dt(*input.spec);
            trace = cesaro_continuous(*input.spec, tmax, dt);
        }
        oracle_ms = timer.lap();
        oracle_json = trace_summary_json(trace);
        if (verdict.value) agreement = agreement_json(*verdict.value, trace);
    }
    report["oracle"] = oracle_json;
    report["agreement"] = agreement;
    report["timing"] = {{"parse_ms", parse_ms},
                        {"verdict_ms", verdict_ms},
                        {"oracle_ms", oracle_ms},
                        {"total_ms", timer.total()}};
    emit(report);
    return exit_code_for(verdict.applicability);
}

struct SystemArgs {
    bool z = false, s = false;
    std::string num, den, xspec, config;
    double xavg = 0.0;
    bool have_xavg = false;
    long long oracle = -1;
};

int run_system(const SystemArgs& args) {
    StageTimer timer;
    if (args.z == args.s)
        throw Error(ErrorCode::ParseError, "system needs exactly one of --z/--s");
    if (args.num.empty() || args.den.empty())
        throw Error(ErrorCode::ParseError, "system needs the transfer function --num/--den");
    if (args.have_xavg == !args.xspec.empty())
        throw Error(ErrorCode::ParseError, "provide exactly one of --xavg or --xspec");
    Tolerances tol = load_tolerances(args.config);

    Domain domain = args.z ? Domain::Z : Domain::S;
    auto nc = parse_coefficients(args.num, "--num");
    auto dc = parse_coefficients(args.den, "--den");
    LtiSystem system(
        RationalTransform(Polynomial::from_real(nc), Polynomial::from_real(dc), domain), tol);

    json echo = {{"domain", to_string(domain)}, {"num", nc}, {"den", dc}};
    std::optional<SignalSpec> xspec;
    double x_avg = args.xavg;
    json x_verdict = nullptr;
    if (!args.xspec.empty()) {
        xspec = spec_from_json(load_json_file(args.xspec));
        if (xspec->domain() != (domain == Domain::Z ? SignalDomain::DiscreteTime
                                                    : SignalDomain::ContinuousTime))
            throw Error(ErrorCode::ParseError, "--xspec domain contradicts the system domain");
        echo["xspec"] = spec_to_json(*xspec);
        AverageVerdict verdict = domain == Domain::Z ? final_value_z(transform_of(*xspec), tol)
                                                     : final_value_s(transform_of(*xspec), tol);
        x_verdict = verdict_to_json(verdict);
        if (!verdict.value) {
            json report = {{"command", "system"},
                           {"input_echo", echo},
                           {"verdict", x_verdict},
                           {"error",
                            {{"code", "NoInputAverage"},
                             {"message", "the input signal has no time average to propagate"}}}};
            emit(report);
            return exit_code_for(verdict.applicability);
        }
        x_avg = *verdict.value;
    } else {
        echo["xavg"] = x_avg;
    }
    double parse_ms = timer.lap();

    double y_avg = domain == Domain::Z ? system_average_z(system, x_avg, tol)
                                       : system_average_s(system, x_avg, tol);
    double verdict_ms = timer.lap();

    json report = {{"command", "system"}, {"input_echo", echo}};
    if (!x_verdict.is_null()) report["verdict"] = x_verdict;
    report["system"] = {{"stability", to_string(system.stability())},
                        {"dc_gain", system.dc_gain(tol).real()},
                        {"input_average", x_avg},
                        {"output_average", y_avg}};

    json oracle_json = nullptr;
    json agreement = nullptr;
    double oracle_ms = 0.0;
    if (args.oracle >= 0) {
        if (domain != Domain::Z || !xspec)
            throw Error(ErrorCode::ParseError,
                        "the convolution oracle needs --z and an --xspec input");
        long long horizon = args.oracle > 0 ? args.oracle : 100000;
        auto x = synthesize(*xspec, horizon);
        RunningAverageTrace trace = cesaro_discrete(
            difference_equation_response(system.transfer(), x));
        oracle_ms = timer.lap();
        oracle_json = trace_summary_json(trace);
        agreement = agreement_json(y_avg, trace);
    }
    report["oracle"] = oracle_json;
    report["agreement"] = agreement;
    report["timing"] = {{"parse_ms", parse_ms},
                        {"verdict_ms", verdict_ms},
                        {"oracle_ms", oracle_ms},
                        {"total_ms", timer.total()}};
    emit(report);
    return kExitOk;
}

struct TraceArgs {
    std::string spec, out, config;
    long long horizon = 100000;
    double tmax = 1000.0, dt = 0.0;
};

int run_trace(const TraceArgs& args) {
    if (args.spec.empty() || args.out.empty())
        throw Error(ErrorCode::ParseError, "trace needs --spec and --out");
    if (args.horizon < 2) throw Error(ErrorCode::ParseError, "--horizon must be >= 2");
    SignalSpec spec = spec_from_json(load_json_file(args.spec));

    RunningAverageTrace trace;
    if (spec.domain() == SignalDomain::DiscreteTime)
        trace = cesaro_discrete(synthesize(spec, args.horizon));
    else
        trace = cesaro_continuous(spec, args.tmax, args.dt > 0.0 ? args.dt : auto_dt(spec));

    std::ofstream out(args.out);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + args.out);
    write_trace_csv(out, trace);
    if (!out.good()) throw Error(ErrorCode::ParseError, "short write to " + args.out);

    std::cout << "final_estimate=" << trace.final_estimate
              << " error_estimate=" << trace.error_estimate << " converged="
              << (trace.converged ? "true" : "false") << " horizon=" << trace.horizon << "\n";
    return kExitOk;
}

struct ProductArgs {
    std::string fnum, fden, gnum, gden, fspec, gspec, config;
    double radius = 0.0;
    int points = 0;
    long long oracle = 100000;
};

TransformInput resolve_product_side(const std::string& num, const std::string& den,
                                    const std::string& spec_path, const char* side) {
    bool have_coeffs = !num.empty() || !den.empty();
    bool have_spec = !spec_path.empty();
    if (have_coeffs == have_spec)
        throw Error(ErrorCode::ParseError,
                    std::string(side) + ": provide coefficients or a spec file, not both");
    if (have_coeffs) {
        auto nc = parse_coefficients(num, side);
        auto dc = parse_coefficients(den, side);
        return {RationalTransform(Polynomial::from_real(nc), Polynomial::from_real(dc), Domain::Z),
                std::nullopt,
                json{{"num", nc}, {"den", dc}}};
    }
    SignalSpec spec = spec_from_json(load_json_file(spec_path));
    if (spec.domain() != SignalDomain::DiscreteTime)
        throw Error(ErrorCode::ParseError, std::string(side) + ": product inputs are discrete");
    return {transform_of(spec), spec, json{{"spec", spec_to_json(spec)}}};
}

int run_product(const ProductArgs& args) {
    StageTimer timer;
    Tolerances tol = load_tolerances(args.config);
    TransformInput f = resolve_product_side(args.fnum, args.fden, args.fspec, "--f");
    TransformInput g = resolve_product_side(args.gnum, args.gden, args.gspec, "--g");
    double parse_ms = timer.lap();

    double contour = product_average(f.transform, g.transform, args.radius, args.points, tol);
    double verdict_ms = timer.lap();

    json oracle_json = nullptr;
    json product_json = {{"contour_estimate", contour},
                         {"oracle_estimate", nullptr},
                         {"difference", nullptr}};
    double oracle_ms = 0.0;
    if (args.oracle > 0) {
        auto fs = oracle_samples(f, args.oracle);
        auto gs = oracle_samples(g, args.oracle);
        for (size_t i = 0; i < fs.size(); ++i) fs[i] *= gs[i];
        RunningAverageTrace trace = cesaro_discrete(fs);
        oracle_ms = timer.lap();
        oracle_json = trace_summary_json(trace);
        product_json["oracle_estimate"] = trace.final_estimate;
        product_json["difference"] = std::abs(contour - trace.final_estimate);
    }

    json report = {{"command", "product"},
                   {"input_echo", {{"f", f.echo}, {"g", g.echo},
                                   {"radius", args.radius}, {"points", args.points}}},
                   {"product", product_json},
                   {"oracle", oracle_json},
                   {"agreement", nullptr},
                   {"timing",
                    {{"parse_ms", parse_ms},
                     {"verdict_ms", verdict_ms},
                     {"oracle_ms", oracle_ms},
                     {"total_ms", timer.total()}}}};
    emit(report);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// corpus: run the shipped golden cases and print a pass/fail table.

struct CorpusOutcome {
    int failures = 0;
    int total = 0;
};

void run_corpus_case(const json& c, const std::string& dir, const Tolerances& tol,
                     CorpusOutcome& outcome) {
    std::string name = c.at("name").get<std::string>();
    std::string detail;
    bool pass = true;
    try {
        TransformInput input{RationalTransform::zero(Domain::Z), std::nullopt, json()};
        if (c.contains("spec_file")) {
            SignalSpec spec = spec_from_json(load_json_file(dir + "/" + c.at("spec_file").get<std::string>()));
            input = {transform_of(spec), spec, json()};
        } else {
            Domain domain = c.at("domain").get<std::string>() == "z" ? Domain::Z : Domain::S;
            input = {RationalTransform(
                         Polynomial::from_real(c.at("num").get<std::vector<double>>()),
                         Polynomial::from_real(c.at("den").get<std::vector<double>>()), domain),
                     std::nullopt, json()};
        }

        AverageVerdict verdict = input.transform.domain() == Domain::Z
                                     ? final_value_z(input.transform, tol)
                                     : final_value_s(input.transform, tol);
        const json& expected = c.at("expected");
        std::string want = expected.at("applicability").get<std::string>();
        if (want != to_string(verdict.applicability)) {
            pass = false;
            detail = "applicability " + std::string(to_string(verdict.applicability)) +
                     " (wanted " + want + ")";
        }
        if (pass && expected.contains("value")) {
            double wanted = expected.at("value").get<double>();
            double tolerance = expected.value("tolerance", 1e-9);
            if (!verdict.value || std::abs(*verdict.value - wanted) > tolerance) {
                pass = false;
                detail = "value " + (verdict.value ? std::to_string(*verdict.value) : "absent") +
                         " (wanted " + std::to_string(wanted) + ")";
            }
        }

        if (pass && c.contains("oracle_horizon")) {
            long long horizon = c.at("oracle_horizon").get<long long>();
            RunningAverageTrace trace;
            if (input.transform.domain() == Domain::Z) {
                trace = cesaro_discrete(oracle_samples(input, horizon));
            } else {
                trace = cesaro_continuous(*input.spec, static_cast<double>(horizon),
                                          c.value("oracle_dt", auto_dt(*input.spec)));
            }
            if (verdict.value) {
                double diff = std::abs(*verdict.value - trace.final_estimate);
                double band = c.value("oracle_tolerance", 1e-3);
                if (diff > std::max(band, 5.0 * trace.error_estimate)) {
                    pass = false;
                    detail = "oracle disagrees by " + std::to_string(diff);
                }
            } else if (trace.converged && std::abs(trace.final_estimate) < 1e6) {
                // Non-applicable verdicts must be backed by a non-convergent
                // (or clearly runaway) trace.
                pass = false;
                detail = "oracle trace unexpectedly converged";
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }

    ++outcome.total;
    if (!pass) ++outcome.failures;
    std::cout << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
}

int run_corpus(const std::string& dir, const std::string& config) {
    Tolerances tol = load_tolerances(config);
    json golden = load_json_file(dir + "/golden.json");
    CorpusOutcome outcome;
    for (const json& c : golden.at("cases")) run_corpus_case(c, dir, tol, outcome);
    std::cout << outcome.total - outcome.failures << "/" << outcome.total << " cases passed\n";
    return outcome.failures == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-average analysis of rational z- and Laplace transforms"};
    app.require_subcommand(1);

    AverageArgs avg;
    CLI::App* average = app.add_subcommand(
        "average", "classify a transform and recover the signal's time average");
    average->add_flag("--z", avg.z, "z-domain input");
    average->add_flag("--s", avg.s, "s-domain (Laplace) input");
    average->add_option("--num", avg.num, "numerator coefficients, ascending powers, comma separated");
    average->add_option("--den", avg.den, "denominator coefficients, ascending powers");
    average->add_option("--spec", avg.spec, "signal spec JSON file");
    average->add_option("--oracle", avg.oracle, "cross-check horizon (0 = default)")
        ->expected(0, 1)->default_str("0");
    average->add_option("--tmax", avg.tmax, "continuous oracle horizon");
    average->add_option("--dt", avg.dt, "continuous oracle step");
    average->add_option("--config", avg.config, "tolerance config JSON");

    SystemArgs sys;
    CLI::App* system_cmd = app.add_subcommand(
        "system", "propagate an input average through a stable LTI system");
    system_cmd->add_flag("--z", sys.z, "z-domain system");
    system_cmd->add_flag("--s", sys.s, "s-domain system");
    system_cmd->add_option("--num", sys.num, "transfer numerator, ascending powers");
    system_cmd->add_option("--den", sys.den, "transfer denominator, ascending powers");
    auto* xavg_opt = system_cmd->add_option("--xavg", sys.xavg, "input time average");
    system_cmd->add_option("--xspec", sys.xspec, "input signal spec JSON file");
    system_cmd->add_option("--oracle", sys.oracle, "convolution cross-check horizon")
        ->expected(0, 1)->default_str("0");
    system_cmd->add_option("--config", sys.config, "tolerance config JSON");

    TraceArgs trc;
    CLI::App* trace_cmd = app.add_subcommand("trace", "export a running-average CSV trace");
    trace_cmd->add_option("--spec", trc.spec, "signal spec JSON file")->required();
    trace_cmd->add_option("--horizon", trc.horizon, "discrete sample count");
    trace_cmd->add_option("--tmax", trc.tmax, "continuous horizon");
    trace_cmd->add_option("--dt", trc.dt, "continuous step (default: period/64)");
    trace_cmd->add_option("--out", trc.out, "output CSV path")->required();
    trace_cmd->add_option("--config", trc.config, "tolerance config JSON");

    ProductArgs prod;
    CLI::App* product_cmd = app.add_subcommand(
        "product", "average of a product sequence via the contour quadrature");
    product_cmd->add_option("--fnum", prod.fnum, "F numerator, ascending powers");
    product_cmd->add_option("--fden", prod.fden, "F denominator");
    product_cmd->add_option("--gnum", prod.gnum, "G numerator");
    product_cmd->add_option("--gden", prod.gden, "G denominator");
    product_cmd->add_option("--fspec", prod.fspec, "F signal spec JSON");
    product_cmd->add_option("--gspec", prod.gspec, "G signal spec JSON");
    product_cmd->add_option("--radius", prod.radius, "contour radius (0 = auto per delta)");
    product_cmd->add_option("--points", prod.points, "trapezoid points (0 = auto)");
    product_cmd->add_option("--oracle", prod.oracle, "oracle horizon (0 disables)");
    product_cmd->add_option("--config", prod.config, "tolerance config JSON");

    std::string corpus_dir = "corpus";
    std::string corpus_config;
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "run the shipped golden corpus");
    corpus_cmd->add_option("--dir", corpus_dir, "corpus directory (default: ./corpus)");
    corpus_cmd->add_option("--config", corpus_config, "tolerance config JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (average->parsed()) {
            if (average->count("--oracle") && avg.oracle < 0) avg.oracle = 0;
            return run_average(avg);
        }
        if (system_cmd->parsed()) {
            sys.have_xavg = xavg_opt->count() > 0;
            if (system_cmd->count("--oracle") && sys.oracle < 0) sys.oracle = 0;
            return run_system(sys);
        }
        if (trace_cmd->parsed()) return run_trace(trc);
        if (product_cmd->parsed()) return run_product(prod);
        if (corpus_cmd->parsed()) return run_corpus(corpus_dir, corpus_config);
    } catch (const Error& e) {
        const char* cmd = average->parsed() ? "average"
                          : system_cmd->parsed() ? "system"
                          : trace_cmd->parsed() ? "trace"
                          : product_cmd->parsed() ? "product"
                                                  : "corpus";
        return error_report(e, cmd);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
