#include "tavg/signal.hpp"

#include <cmath>
#include <limits>

#include "tavg/errors.hpp"

namespace tavg {

const char* to_string(SignalDomain d) {
    return d == SignalDomain::DiscreteTime ? "discrete" : "continuous";
}

namespace {

bool nearly_equal(Complex a, Complex b) {
    return std::abs(a - b) <= 1e-12 * (std::abs(a) + std::abs(b)) + 1e-300;
}

bool is_real(Complex c) { return std::abs(c.imag()) <= 1e-14 * std::abs(c.real()) + 1e-300; }

// Every term with a non-real amplitude or base must have a distinct
// conjugate partner of the same power, so the assembled signal is real.
void check_conjugate_closure(const std::vector<ExpPolyTerm>& terms) {
    std::vector<bool> matched(terms.size(), false);
    for (size_t i = 0; i < terms.size(); ++i) {
        if (matched[i]) continue;
        const auto& t = terms[i];
        if (is_real(t.amplitude) && is_real(t.base_or_rate)) {
            matched[i] = true;
            continue;
        }
        bool found = false;
        for (size_t j = i + 1; j < terms.size(); ++j) {
            if (matched[j] || terms[j].power != t.power) continue;
            if (nearly_equal(terms[j].amplitude, std::conj(t.amplitude)) &&
                nearly_equal(terms[j].base_or_rate, std::conj(t.base_or_rate))) {
                matched[i] = matched[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorCode::PreconditionViolation,
                        "signal terms are not conjugate-closed; the spec would not be real-valued");
    }
}

}  // namespace

SignalSpec SignalSpec::from_terms(SignalDomain domain, std::vector<ExpPolyTerm> terms) {
    std::vector<ExpPolyTerm> kept;
    kept.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.power < 0)
            throw Error(ErrorCode::PreconditionViolation, "term power must be nonnegative");
        if (std::abs(t.amplitude) > 0.0) kept.push_back(t);
    }
    check_conjugate_closure(kept);
    SignalSpec spec;
    spec.kind_ = Kind::Terms;
    spec.domain_ = domain;
    spec.terms_ = std::move(kept);
    return spec;
}

SignalSpec SignalSpec::periodic(std::vector<double> pattern) {
    if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "periodic pattern must be nonempty");
    SignalSpec spec;
    spec.kind_ = Kind::PeriodicPattern;
    spec.domain_ = SignalDomain::DiscreteTime;
    spec.pattern_ = std::move(pattern);
    return spec;
}

SignalSpec SignalSpec::product(SignalSpec first, SignalSpec second) {
    if (first.domain() != second.domain())
        throw Error(ErrorCode::PreconditionViolation, "product factors must share a domain");
    SignalSpec spec;
    spec.kind_ = Kind::Product;
    spec.domain_ = first.domain();
    spec.product_first_ = std::make_shared<const SignalSpec>(std::move(first));
    spec.product_second_ = std::make_shared<const SignalSpec>(std::move(second));
    return spec;
}

SignalSpec SignalSpec::unit_step(SignalDomain domain) {
    double base = domain == SignalDomain::DiscreteTime ? 1.0 : 0.0;
    return from_terms(domain, {{Complex(1.0), Complex(base), 0}});
}

SignalSpec SignalSpec::discrete_cosine(double omega0) {
    Complex base(std::cos(omega0), std::sin(omega0));
    return from_terms(SignalDomain::DiscreteTime,
                      {{Complex(0.5), base, 0}, {Complex(0.5), std::conj(base), 0}});
}

SignalSpec SignalSpec::discrete_geometric(double alpha) {
    return from_terms(SignalDomain::DiscreteTime, {{Complex(1.0), Complex(alpha), 0}});
}

SignalSpec SignalSpec::continuous_cosine(double omega) {
    Complex rate(0.0, omega);
    return from_terms(SignalDomain::ContinuousTime,
                      {{Complex(0.5), rate, 0}, {Complex(0.5), std::conj(rate), 0}});
}

SignalSpec SignalSpec::continuous_exponential(double rate) {
    return from_terms(SignalDomain::ContinuousTime, {{Complex(1.0), Complex(rate), 0}});
}

Complex complex_power(Complex base, long long n) {
    if (n == 0) return Complex(1.0);
    if (base == Complex(0.0)) return Complex(0.0);
    long double mag = std::abs(base);
    long double phase = static_cast<long double>(std::arg(base)) * n;
    long double two_pi = 6.283185307179586476925286766559L;
    phase = std::fmod(phase, two_pi);
    long double r = std::pow(mag, static_cast<long double>(n));
    return Complex(static_cast<double>(r * std::cos(phase)), static_cast<double>(r * std::sin(phase)));
}

namespace {

// Running powers with periodic re-anchoring against extended-precision
// values; keeps unit-circle bases from drifting over long horizons.
class PowerTrack {
  public:
    explicit PowerTrack(Complex base) : base_(base), value_(1.0) {}

    Complex value() const { return value_; }

    void advance(long long n_next) {
        if (n_next % kAnchorStride == 0)
            value_ = complex_power(base_, n_next);
        else
            value_ *= base_;
    }

  private:
    static constexpr long long kAnchorStride = 4096;
    Complex base_;
    Complex value_;
};

std::vector<double> synthesize_terms(const SignalSpec& spec, long long count, double dt) {
    std::vector<double> out(static_cast<size_t>(count), 0.0);
    for (const auto& term : spec.terms()) {
        bool discrete = spec.domain() == SignalDomain::DiscreteTime;
        if (discrete) {
            PowerTrack track(term.base_or_rate);
            for (long long n = 0; n < count; ++n) {
                if (n > 0) track.advance(n);
                double poly = term.power == 0 ? 1.0 : std::pow(static_cast<double>(n), term.power);
                out[static_cast<size_t>(n)] += (term.amplitude * track.value()).real() * poly;
            }
        } else {
            // exp(a*k*dt) = (exp(a*dt))^k
            Complex step = std::exp(term.base_or_rate * dt);
            PowerTrack track(step);
            for (long long k = 0; k < count; ++k) {
                if (k > 0) track.advance(k);
                double t = static_cast<double>(k) * dt;
                double poly = term.power == 0 ? 1.0 : std::pow(t, term.power);
                out[static_cast<size_t>(k)] += (term.amplitude * track.value()).real() * poly;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<double> synthesize(const SignalSpec& spec, long long count, double dt) {
    if (count < 1) throw Error(ErrorCode::PreconditionViolation, "sample count must be >= 1");
    if (spec.domain() == SignalDomain::ContinuousTime && !(dt > 0.0))
        throw Error(ErrorCode::PreconditionViolation, "continuous synthesis needs dt > 0");

    switch (spec.kind()) {
        case SignalSpec::Kind::Terms:
            return synthesize_terms(spec, count, dt);
        case SignalSpec::Kind::PeriodicPattern: {
            const auto& pattern = spec.periodic_pattern();
            std::vector<double> out(static_cast<size_t>(count));
            for (long long n = 0; n < count; ++n)
                out[static_cast<size_t>(n)] = pattern[static_cast<size_t>(n % pattern.size())];
            return out;
        }
        case SignalSpec::Kind::Product: {
            auto a = synthesize(spec.product_first(), count, dt);
            auto b = synthesize(spec.product_second(), count, dt);
            for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
            return a;
        }
    }
    throw Error(ErrorCode::PreconditionViolation, "unreachable spec kind");
}

double shortest_period(const SignalSpec& spec) {
    double period = std::numeric_limits<double>::infinity();
    switch (spec.kind()) {
        case SignalSpec::Kind::Terms:
            for (const auto& term : spec.terms()) {
                double w = spec.domain() == SignalDomain::DiscreteTime
                               ? std::abs(std::arg(term.base_or_rate))
                               : std::abs(term.base_or_rate.imag());
                if (w > 0.0) period = std::min(period, 2.0 * M_PI / w);
            }
            break;
        case SignalSpec::Kind::PeriodicPattern:
            period = static_cast<double>(spec.periodic_pattern().size());
            break;
        case SignalSpec::Kind::Product:
            period = std::min(shortest_period(spec.product_first()),
                              shortest_period(spec.product_second()));
            break;
    }
    return period;
}

}  // namespace tavg
