#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tavg/compensated.hpp"
#include "tavg/errors.hpp"
#include "tavg/oracle.hpp"

using namespace tavg;

TEST_CASE("cesaro_discrete on an alternating sequence") {
    std::vector<double> samples(10000);
    for (size_t n = 0; n < samples.size(); ++n) samples[n] = (n % 2 == 0) ? 1.0 : -1.0;
    RunningAverageTrace trace = cesaro_discrete(samples);
    CHECK(std::abs(trace.final_estimate) <= 1e-3);
    CHECK(trace.converged);
    CHECK(trace.horizon == 10000.0);
}

TEST_CASE("cesaro_discrete on a constant") {
    std::vector<double> samples(777, 3.0);
    RunningAverageTrace trace = cesaro_discrete(samples);
    CHECK(trace.final_estimate == 3.0);
    CHECK(trace.error_estimate <= 1e-9);
    CHECK(trace.converged);
    for (const auto& [n, mean] : trace.samples) CHECK(mean == 3.0);
}

TEST_CASE("cesaro_discrete flags geometric growth") {
    std::vector<double> samples(64);
    double v = 1.0;
    for (auto& s : samples) {
        s = v;
        v *= 2.0;
    }
    RunningAverageTrace trace = cesaro_discrete(samples);
    CHECK(!trace.converged);
    // Checkpoint means keep growing.
    for (size_t i = 3; i < trace.samples.size(); ++i)
        CHECK(std::abs(trace.samples[i].second) > std::abs(trace.samples[i - 1].second));
}

TEST_CASE("cesaro_discrete checkpoints are strictly increasing in index") {
    std::vector<double> samples(1000, 0.25);
    RunningAverageTrace trace = cesaro_discrete(samples);
    for (size_t i = 1; i < trace.samples.size(); ++i)
        CHECK(trace.samples[i].first > trace.samples[i - 1].first);
    CHECK_THROWS_AS(cesaro_discrete({}), Error);
}

TEST_CASE("periodic patterns average exactly at whole-period horizons") {
    std::mt19937_64 rng(5001);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> len(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        size_t n = static_cast<size_t>(len(rng));
        std::vector<double> pattern(n);
        CompensatedSum mean_sum;
        for (auto& x : pattern) {
            x = u(rng);
            mean_sum.add(x);
        }
        double mean = mean_sum.value() / static_cast<double>(n);

        size_t k = 313;
        SignalSpec spec = SignalSpec::periodic(pattern);
        auto samples = synthesize(spec, static_cast<long long>(k * n));
        RunningAverageTrace trace = cesaro_discrete(samples);
        double bound = 1e-12 * static_cast<double>(k * n) * 1.0 + 1e-12;
        CHECK(std::abs(trace.final_estimate - mean) <= bound);
    }
}

TEST_CASE("dyadic checkpoint errors stay inside the partial-sum envelope") {
    // For a zero-mean period the running mean obeys |g| <= B/(n+1) with B
    // the largest within-period partial sum; the envelope itself shrinks
    // monotonically, which is the honest form of "doubling the horizon
    // does not hurt".
    std::vector<double> pattern = {1.0, -0.25, -0.75};  // mean 0
    double partial = 0.0, envelope = 0.0;
    for (double x : pattern) {
        partial += x;
        envelope = std::max(envelope, std::abs(partial));
    }
    auto samples = synthesize(SignalSpec::periodic(pattern), 100000);
    RunningAverageTrace trace = cesaro_discrete(samples);
    for (const auto& [n, mean] : trace.samples)
        CHECK(std::abs(mean) <= envelope / (n + 1.0) + 1e-12);
}

TEST_CASE("error estimates are honest on convergent reference cases") {
    struct Case {
        SignalSpec spec;
        double truth;
    };
    std::vector<Case> cases;
    cases.push_back({SignalSpec::discrete_cosine(M_PI), 0.0});
    cases.push_back({SignalSpec::discrete_cosine(M_PI / 3.0), 0.0});
    cases.push_back({SignalSpec::discrete_geometric(0.5), 0.0});
    cases.push_back({SignalSpec::unit_step(SignalDomain::DiscreteTime), 1.0});
    cases.push_back({SignalSpec::periodic({1.0, 0.0, 0.0}), 1.0 / 3.0});

    for (const auto& c : cases) {
        RunningAverageTrace trace = cesaro_discrete(synthesize(c.spec, 100000));
        CHECK(trace.converged);
        CHECK(std::abs(trace.final_estimate - c.truth) <= 5.0 * trace.error_estimate);
    }
}

TEST_CASE("cesaro_continuous on cos(t)") {
    RunningAverageTrace trace =
        cesaro_continuous(SignalSpec::continuous_cosine(1.0), 1000.0, 0.05);
    CHECK(std::abs(trace.final_estimate) <= 2e-3);
    CHECK(trace.converged);
    // The running average of cos is sin(t)/t.
    CHECK(trace.final_estimate ==
          doctest::Approx(std::sin(1000.0) / 1000.0).epsilon(1e-3).scale(1.0));
}

TEST_CASE("cesaro_continuous on the unit step is exact") {
    // Dyadic dt keeps the trapezoid sums exact for a constant signal.
    RunningAverageTrace trace =
        cesaro_continuous(SignalSpec::unit_step(SignalDomain::ContinuousTime), 100.0, 0.25);
    for (const auto& [t, mean] : trace.samples) CHECK(mean == 1.0);
    CHECK(trace.final_estimate == 1.0);
}

TEST_CASE("cesaro_continuous on a decaying exponential") {
    RunningAverageTrace trace =
        cesaro_continuous(SignalSpec::continuous_exponential(-1.0), 1000.0, 0.05);
    // integral_0^inf e^-t = 1, so the mean is ~ 1/t_max.
    CHECK(trace.final_estimate == doctest::Approx(1.0 / 1000.0).epsilon(1e-3));
    CHECK(trace.converged);
}

TEST_CASE("cesaro_continuous flags a growing ramp") {
    SignalSpec ramp = SignalSpec::from_terms(SignalDomain::ContinuousTime,
                                             {{Complex(1.0), Complex(0.0), 1}});
    RunningAverageTrace trace = cesaro_continuous(ramp, 500.0, 0.25);
    CHECK(!trace.converged);
}

TEST_CASE("cesaro_continuous preconditions") {
    CHECK_THROWS_AS(cesaro_continuous(SignalSpec::continuous_cosine(1.0), 1.0, 0.05), Error);
    try {
        cesaro_continuous(SignalSpec::continuous_cosine(10.0), 1000.0, 0.5);
        FAIL("expected UnderResolved");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnderResolved);
    }
    CHECK_THROWS_AS(cesaro_continuous(SignalSpec::unit_step(SignalDomain::DiscreteTime), 100.0, 0.1),
                    Error);
}

TEST_CASE("convolution oracle reproduces the worked system example") {
    SignalSpec h = SignalSpec::discrete_geometric(0.5);
    RunningAverageTrace step_response =
        convolve_and_average(h, SignalSpec::unit_step(SignalDomain::DiscreteTime), 100000);
    CHECK(std::abs(step_response.final_estimate - 2.0) <= 1e-3);

    RunningAverageTrace cosine_response =
        convolve_and_average(h, SignalSpec::discrete_cosine(M_PI / 3.0), 100000);
    CHECK(std::abs(cosine_response.final_estimate) <= 1e-3);
}

TEST_CASE("convolving with the unit impulse is the identity, bit for bit") {
    SignalSpec delta = SignalSpec::from_terms(SignalDomain::DiscreteTime,
                                              {{Complex(1.0), Complex(0.0), 0}});
    SignalSpec x = SignalSpec::periodic({0.3, -1.7, 0.9, 0.2});
    RunningAverageTrace via_conv = convolve_and_average(delta, x, 5000);
    RunningAverageTrace direct = cesaro_discrete(synthesize(x, 5000));
    REQUIRE(via_conv.samples.size() == direct.samples.size());
    for (size_t i = 0; i < direct.samples.size(); ++i) {
        CHECK(via_conv.samples[i].first == direct.samples[i].first);
        CHECK(via_conv.samples[i].second == direct.samples[i].second);
    }
    CHECK(via_conv.final_estimate == direct.final_estimate);
}

TEST_CASE("convolution falls back to the difference equation for slow tails") {
    // 0.999^n needs ~40k taps of direct summation; the recursion route
    // must match the closed form sum_{k<=n} 0.999^k for a step input.
    SignalSpec h = SignalSpec::discrete_geometric(0.999);
    long long horizon = 20000;
    RunningAverageTrace trace =
        convolve_and_average(h, SignalSpec::unit_step(SignalDomain::DiscreteTime), horizon);

    CompensatedSum mean;
    for (long long n = 0; n < horizon; ++n)
        mean.add((1.0 - std::pow(0.999, static_cast<double>(n + 1))) / 0.001);
    double expected = mean.value() / static_cast<double>(horizon);
    CHECK(trace.final_estimate == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("convolution stability preconditions") {
    try {
        convolve_and_average(SignalSpec::discrete_geometric(1.1),
                             SignalSpec::unit_step(SignalDomain::DiscreteTime), 100);
        FAIL("expected UnstableImpulseResponse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnstableImpulseResponse);
    }
    CHECK_THROWS_AS(convolve_and_average(SignalSpec::unit_step(SignalDomain::DiscreteTime),
                                         SignalSpec::unit_step(SignalDomain::DiscreteTime), 100),
                    Error);
    CHECK_THROWS_AS(convolve_and_average(SignalSpec::periodic({1.0}),
                                         SignalSpec::unit_step(SignalDomain::DiscreteTime), 100),
                    Error);
}

TEST_CASE("asymptotic equivalence: decaying perturbation of the alternating sequence") {
    EquivalenceReport report = asymptotic_equivalence_check(
        SignalSpec::discrete_geometric(0.9), SignalSpec::discrete_cosine(M_PI), 100000);
    CHECK(std::abs(report.product.final_estimate) <= 2e-3);
    CHECK(std::abs(report.base.final_estimate) <= 2e-3);
    CHECK(report.passes);
}

TEST_CASE("asymptotic equivalence: zero perturbation is exact") {
    SignalSpec zero = SignalSpec::from_terms(SignalDomain::DiscreteTime, {});
    EquivalenceReport report =
        asymptotic_equivalence_check(zero, SignalSpec::periodic({0.4, -0.9, 1.3}), 50000);
    CHECK(report.difference == 0.0);
    CHECK(report.passes);
}

TEST_CASE("asymptotic equivalence: geometric perturbation of the step") {
    EquivalenceReport report = asymptotic_equivalence_check(
        SignalSpec::discrete_geometric(0.5), SignalSpec::unit_step(SignalDomain::DiscreteTime),
        100000);
    CHECK(std::abs(report.product.final_estimate - 1.0) <= 1e-3);
    CHECK(std::abs(report.base.final_estimate - 1.0) <= 1e-3);
    CHECK(report.passes);
}

TEST_CASE("asymptotic equivalence rejects non-decaying perturbations") {
    try {
        asymptotic_equivalence_check(SignalSpec::unit_step(SignalDomain::DiscreteTime),
                                     SignalSpec::discrete_cosine(M_PI), 1000);
        FAIL("expected PreconditionViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolation);
    }
}
