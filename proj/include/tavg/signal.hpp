#ifndef TAVG_SIGNAL_HPP
#define TAVG_SIGNAL_HPP

#include <memory>
#include <vector>

#include "tavg/polynomial.hpp"

namespace tavg {

enum class SignalDomain { DiscreteTime, ContinuousTime };

const char* to_string(SignalDomain d);

/// One exponential-polynomial mode.
///
/// Discrete:   amplitude * n^power * base_or_rate^n      (n = 0, 1, ...)
/// Continuous: amplitude * t^power * exp(base_or_rate*t) (t >= 0)
///
/// Complex amplitudes carry phase; specs describe real signals, so any
/// term with a non-real amplitude or base must appear together with its
/// conjugate partner.
struct ExpPolyTerm {
    Complex amplitude;
    Complex base_or_rate;
    int power = 0;
};

/// Symbolic time-domain description of a causal signal: a sum of
/// exponential-polynomial terms, a repeating pattern (discrete only), or
/// an elementwise product of two specs. Exactly one of the three is
/// populated. Immutable after construction.
class SignalSpec {
  public:
    enum class Kind { Terms, PeriodicPattern, Product };

    /// Throws PreconditionViolation when the terms are not conjugate-closed.
    static SignalSpec from_terms(SignalDomain domain, std::vector<ExpPolyTerm> terms);
    /// Throws EmptyPattern for an empty pattern.
    static SignalSpec periodic(std::vector<double> pattern);
    static SignalSpec product(SignalSpec first, SignalSpec second);

    Kind kind() const { return kind_; }
    SignalDomain domain() const { return domain_; }
    const std::vector<ExpPolyTerm>& terms() const { return terms_; }
    const std::vector<double>& periodic_pattern() const { return pattern_; }
    const SignalSpec& product_first() const { return *product_first_; }
    const SignalSpec& product_second() const { return *product_second_; }

    // Common signals.
    static SignalSpec unit_step(SignalDomain domain);
    /// cos(n*omega0) u[n]
    static SignalSpec discrete_cosine(double omega0);
    /// alpha^n u[n]
    static SignalSpec discrete_geometric(double alpha);
    /// cos(omega*t) u(t)
    static SignalSpec continuous_cosine(double omega);
    /// exp(rate*t) u(t)
    static SignalSpec continuous_exponential(double rate);

  private:
    SignalSpec() = default;

    Kind kind_ = Kind::Terms;
    SignalDomain domain_ = SignalDomain::DiscreteTime;
    std::vector<ExpPolyTerm> terms_;
    std::vector<double> pattern_;
    std::shared_ptr<const SignalSpec> product_first_;
    std::shared_ptr<const SignalSpec> product_second_;
};

/// Sampling correspondence between the two transform variables: a
/// continuous-time mode with rate a, sampled every `sample_interval`
/// seconds, is the discrete mode with base p = exp(a * sample_interval).
/// Provided as a conversion only; there is no resampling machinery.
inline Complex base_from_rate(Complex rate, double sample_interval) {
    return std::exp(rate * sample_interval);
}

/// b^n with the phase accumulated in extended precision, so unit-modulus
/// bases stay accurate over 10^7-sample horizons.
Complex complex_power(Complex base, long long n);

/// First `count` samples of the signal. Continuous specs are sampled at
/// t = k*dt; discrete specs ignore dt. Product specs multiply the factor
/// syntheses elementwise.
std::vector<double> synthesize(const SignalSpec& spec, long long count, double dt = 1.0);

/// Shortest oscillation period among the spec's terms (2*pi / max |Im rate|
/// for continuous specs), or +infinity when nothing oscillates.
double shortest_period(const SignalSpec& spec);

}  // namespace tavg

#endif
