#include "tavg/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "tavg/catalog.hpp"
#include "tavg/compensated.hpp"
#include "tavg/errors.hpp"

namespace tavg {

namespace {

double noise_floor(double magnitude) { return 1e-12 * (1.0 + std::abs(magnitude)); }

// Non-convergent when the checkpoint magnitudes grow monotonically by
// more than 10% across three consecutive dyadic checkpoints.
bool detect_divergence(const std::vector<std::pair<double, double>>& checkpoints) {
    int growth_run = 0;
    for (size_t i = 1; i < checkpoints.size(); ++i) {
        double prev = std::abs(checkpoints[i - 1].second);
        double cur = std::abs(checkpoints[i].second);
        if (std::isfinite(cur) && std::isfinite(prev) && cur > 1.1 * prev && cur > 1e-9)
            ++growth_run;
        else if (!std::isfinite(cur))
            ++growth_run;
        else
            growth_run = 0;
        if (growth_run >= 3) return true;
    }
    return false;
}

}  // namespace

RunningAverageTrace cesaro_discrete(const std::vector<double>& samples) {
    if (samples.empty())
        throw Error(ErrorCode::PreconditionViolation, "cesaro_discrete needs samples");

    const size_t n = samples.size();
    const size_t half = n / 2;
    const size_t quarter = n / 4;

    RunningAverageTrace trace;
    trace.horizon = static_cast<double>(n);

    CompensatedSum sum;
    double mean_at_half = 0.0;
    double mean_at_quarter = 0.0;
    size_t next_checkpoint = 1;
    for (size_t count = 1; count <= n; ++count) {
        sum.add(samples[count - 1]);
        if (count == half) mean_at_half = sum.value() / static_cast<double>(count);
        if (count == quarter) mean_at_quarter = sum.value() / static_cast<double>(count);
        if (count == next_checkpoint || count == n) {
            double mean = sum.value() / static_cast<double>(count);
            trace.samples.emplace_back(static_cast<double>(count - 1), mean);
            while (next_checkpoint <= count) next_checkpoint *= 2;
        }
    }

    trace.final_estimate = trace.samples.back().second;
    // Difference against the last two dyadic reference points; the second
    // one guards against period phases where N and N/2 agree by accident.
    double diff = half > 0 ? std::abs(trace.final_estimate - mean_at_half) : 0.0;
    if (quarter > 0) diff = std::max(diff, std::abs(trace.final_estimate - mean_at_quarter));
    trace.error_estimate = diff + noise_floor(trace.final_estimate);
    trace.converged = !detect_divergence(trace.samples);
    return trace;
}

namespace {

// Trapezoid running means of one sampled grid; returns dyadic checkpoints,
// the final mean and the mean at t_max/2.
struct GridAverages {
    std::vector<std::pair<double, double>> checkpoints;
    double final_mean = 0.0;
    double half_mean = 0.0;
    double quarter_mean = 0.0;
};

GridAverages grid_running_average(const std::vector<double>& f, double dt) {
    GridAverages out;
    const size_t steps = f.size() - 1;
    const size_t half_step = steps / 2;
    const size_t quarter_step = steps / 4;
    CompensatedSum integral;
    size_t next_checkpoint = 1;
    for (size_t k = 1; k <= steps; ++k) {
        integral.add(0.5 * dt * (f[k - 1] + f[k]));
        double t = static_cast<double>(k) * dt;
        double avg = integral.value() / t;
        if (k == half_step) out.half_mean = avg;
        if (k == quarter_step) out.quarter_mean = avg;
        if (k == next_checkpoint || k == steps) {
            out.checkpoints.emplace_back(t, avg);
            while (next_checkpoint <= k) next_checkpoint *= 2;
        }
    }
    out.final_mean = out.checkpoints.back().second;
    return out;
}

}  // namespace

RunningAverageTrace cesaro_continuous(const SignalSpec& spec, double t_max, double dt) {
    if (spec.domain() != SignalDomain::ContinuousTime)
        throw Error(ErrorCode::PreconditionViolation, "cesaro_continuous needs a continuous spec");
    if (!(dt > 0.0) || !(t_max >= 100.0 * dt))
        throw Error(ErrorCode::PreconditionViolation, "need dt > 0 and t_max >= 100*dt");
    double period = shortest_period(spec);
    if (dt > period / 20.0)
        throw Error(ErrorCode::UnderResolved,
                    "dt = " + std::to_string(dt) + " gives fewer than 20 samples per period " +
                        std::to_string(period));

    const auto steps = static_cast<long long>(std::llround(t_max / dt));
    auto coarse_samples = synthesize(spec, steps + 1, dt);
    auto fine_samples = synthesize(spec, 2 * steps + 1, dt / 2.0);
    GridAverages coarse = grid_running_average(coarse_samples, dt);
    GridAverages fine = grid_running_average(fine_samples, dt / 2.0);

    RunningAverageTrace trace;
    trace.horizon = t_max;
    trace.samples = std::move(coarse.checkpoints);
    trace.final_estimate = coarse.final_mean;
    double horizon_diff = std::max(std::abs(coarse.final_mean - coarse.half_mean),
                                   std::abs(coarse.final_mean - coarse.quarter_mean));
    trace.error_estimate = horizon_diff + std::abs(coarse.final_mean - fine.final_mean) +
                           noise_floor(coarse.final_mean);
    trace.converged = !detect_divergence(trace.samples);
    return trace;
}

namespace {

// Truncation point where the geometric tail of h drops below noise.
long long impulse_truncation(const SignalSpec& h, long long horizon) {
    double r = 0.0;
    double amp = 0.0;
    int max_power = 0;
    for (const auto& term : h.terms()) {
        r = std::max(r, std::abs(term.base_or_rate));
        amp += std::abs(term.amplitude);
        max_power = std::max(max_power, term.power);
    }
    if (r >= 1.0)
        throw Error(ErrorCode::UnstableImpulseResponse,
                    "impulse response base magnitude " + std::to_string(r) + " is not < 1");
    if (r == 0.0) return std::min<long long>(horizon, max_power + 2);

    long long k = 16;
    while (k < horizon) {
        double tail = amp * std::pow(static_cast<double>(k), max_power) * std::pow(r, k) / (1.0 - r);
        if (tail < 1e-14) break;
        k *= 2;
    }
    return std::min(k, horizon);
}

}  // namespace

std::vector<double> difference_equation_response(const RationalTransform& H,
                                                 const std::vector<double>& x) {
    if (H.domain() != Domain::Z)
        throw Error(ErrorCode::WrongDomain, "difference equations are z-domain systems");
    const int d = H.denominator().degree();
    if (H.numerator().degree() > d)
        throw Error(ErrorCode::ImproperTransform, "transfer function is not causal");

    auto rev_den = [&H, d](int j) { return H.denominator().coeff(d - j); };
    auto rev_num = [&H, d](int j) { return H.numerator().coeff(d - j); };
    Complex a0 = rev_den(0);
    const long long n_total = static_cast<long long>(x.size());
    std::vector<Complex> yc(x.size(), Complex(0.0));
    for (long long n = 0; n < n_total; ++n) {
        Complex acc(0.0);
        for (int j = 0; j <= d && j <= n; ++j)
            acc += rev_num(j) * x[static_cast<size_t>(n - j)];
        for (int j = 1; j <= d && j <= n; ++j)
            acc -= rev_den(j) * yc[static_cast<size_t>(n - j)];
        yc[static_cast<size_t>(n)] = acc / a0;
    }
    std::vector<double> y(x.size());
    for (size_t n = 0; n < x.size(); ++n) y[n] = yc[n].real();
    return y;
}

RunningAverageTrace convolve_and_average(const SignalSpec& h_spec, const SignalSpec& x_spec,
                                         long long horizon) {
    if (h_spec.domain() != SignalDomain::DiscreteTime ||
        x_spec.domain() != SignalDomain::DiscreteTime)
        throw Error(ErrorCode::PreconditionViolation, "convolve_and_average is discrete-time");
    if (h_spec.kind() != SignalSpec::Kind::Terms)
        throw Error(ErrorCode::UnstableImpulseResponse,
                    "impulse response must be a term spec with |bases| < 1");
    if (horizon < 1) throw Error(ErrorCode::PreconditionViolation, "horizon must be >= 1");

    auto x = synthesize(x_spec, horizon);
    long long k_max = impulse_truncation(h_spec, horizon);

    if (k_max <= 4096) {
        auto h = synthesize(h_spec, k_max);
        std::vector<double> y(static_cast<size_t>(horizon), 0.0);
        for (long long n = 0; n < horizon; ++n) {
            CompensatedSum acc;
            long long kk = std::min(n + 1, k_max);
            for (long long k = 0; k < kk; ++k)
                acc.add(h[static_cast<size_t>(k)] * x[static_cast<size_t>(n - k)]);
            y[static_cast<size_t>(n)] = acc.value();
        }
        return cesaro_discrete(y);
    }
    // Slowly decaying tail: run the difference equation of the transfer
    // denominator instead of summing it out.
    return cesaro_discrete(difference_equation_response(transform_of(h_spec), x));
}

EquivalenceReport asymptotic_equivalence_check(const SignalSpec& x1_spec,
                                               const SignalSpec& x2_spec, long long horizon) {
    if (x1_spec.domain() != SignalDomain::DiscreteTime ||
        x2_spec.domain() != SignalDomain::DiscreteTime)
        throw Error(ErrorCode::PreconditionViolation, "asymptotic equivalence is discrete-time");
    if (x1_spec.kind() != SignalSpec::Kind::Terms)
        throw Error(ErrorCode::PreconditionViolation, "x1 must be a decaying term spec");
    for (const auto& term : x1_spec.terms())
        if (std::abs(term.base_or_rate) >= 1.0)
            throw Error(ErrorCode::PreconditionViolation,
                        "x1 must decay: found |base| >= 1 in the perturbation");

    auto x1 = synthesize(x1_spec, horizon);
    auto x2 = synthesize(x2_spec, horizon);
    std::vector<double> prod(x2.size());
    for (size_t i = 0; i < x2.size(); ++i) prod[i] = (1.0 + x1[i]) * x2[i];

    EquivalenceReport report;
    report.product = cesaro_discrete(prod);
    report.base = cesaro_discrete(x2);
    report.difference = std::abs(report.product.final_estimate - report.base.final_estimate);
    report.passes =
        report.difference <= report.product.error_estimate + report.base.error_estimate;
    return report;
}

}  // namespace tavg
