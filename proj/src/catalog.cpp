#include "tavg/catalog.hpp"

#include <cmath>

#include "tavg/errors.hpp"

namespace tavg {

namespace {

// Term transforms keep the factored shape num / (z - p)^m so the
// -z d/dz operator can be applied without inflating the denominator:
//   d/dz [N/(z-p)^m] = (N'(z-p) - mN) / (z-p)^(m+1)
struct FactoredZ {
    Polynomial num;
    Complex pole;
    int order = 1;
};

FactoredZ neg_z_derivative(const FactoredZ& x) {
    Polynomial shifted = Polynomial{-x.pole, Complex(1.0)};  // (z - p)
    Polynomial inner = x.num.derivative() * shifted - Complex(static_cast<double>(x.order)) * x.num;
    Polynomial z = Polynomial::monomial(1);
    return {-(z * inner), x.pole, x.order + 1};
}

Polynomial binomial_power(Complex root, int m) {
    Polynomial acc = Polynomial::constant(1.0);
    Polynomial factor{-root, Complex(1.0)};
    for (int i = 0; i < m; ++i) acc = acc * factor;
    return acc;
}

RationalTransform discrete_term_transform(const ExpPolyTerm& term) {
    FactoredZ x{Polynomial::monomial(1), term.base_or_rate, 1};  // z/(z-p) for p^n u[n]
    for (int k = 0; k < term.power; ++k) x = neg_z_derivative(x);
    return RationalTransform(term.amplitude * x.num, binomial_power(x.pole, x.order), Domain::Z);
}

RationalTransform continuous_term_transform(const ExpPolyTerm& term) {
    double factorial = 1.0;
    for (int k = 2; k <= term.power; ++k) factorial *= static_cast<double>(k);
    Polynomial num = Polynomial::constant(term.amplitude * factorial);
    return RationalTransform(num, binomial_power(term.base_or_rate, term.power + 1), Domain::S);
}

}  // namespace

RationalTransform transform_of(const SignalSpec& spec) {
    switch (spec.kind()) {
        case SignalSpec::Kind::PeriodicPattern:
            return periodic_transform(spec.periodic_pattern());
        case SignalSpec::Kind::Product:
            throw Error(ErrorCode::UnsupportedComposition,
                        "product specs have no rational closed-form transform");
        case SignalSpec::Kind::Terms:
            break;
    }

    Domain domain = spec.domain() == SignalDomain::DiscreteTime ? Domain::Z : Domain::S;
    RationalTransform acc = RationalTransform::zero(domain);
    for (const auto& term : spec.terms()) {
        RationalTransform t = domain == Domain::Z ? discrete_term_transform(term)
                                                  : continuous_term_transform(term);
        acc = acc.is_zero() ? t : acc + t;
    }
    return acc;
}

RationalTransform periodic_transform(const std::vector<double>& pattern) {
    if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "periodic pattern must be nonempty");
    const size_t n = pattern.size();

    // (sum_m x[m] z^-m)/(1 - z^-N) cleared by z^N: numerator coefficient of
    // z^(N-m) is x[m]; denominator z^N - 1.
    std::vector<Complex> num(n + 1, Complex(0.0));
    for (size_t m = 0; m < n; ++m) num[n - m] = Complex(pattern[m]);
    std::vector<Complex> den(n + 1, Complex(0.0));
    den[0] = Complex(-1.0);
    den[n] = Complex(1.0);
    return RationalTransform(Polynomial(std::move(num)), Polynomial(std::move(den)), Domain::Z);
}

std::vector<double> coefficients_from_transform(const RationalTransform& r, long long count) {
    if (r.domain() != Domain::Z)
        throw Error(ErrorCode::WrongDomain, "power-series inversion is a z-domain operation");
    if (count < 0) throw Error(ErrorCode::PreconditionViolation, "count must be nonnegative");
    if (r.is_zero()) return std::vector<double>(static_cast<size_t>(count), 0.0);

    const int num_deg = r.numerator().degree();
    const int den_deg = r.denominator().degree();
    if (num_deg > den_deg)
        throw Error(ErrorCode::ImproperTransform,
                    "numerator degree exceeds denominator degree; no z^-1 power series");

    // Reversed coefficients express the transform as a ratio of power
    // series in w = z^-1; long division is then the standard recursion.
    auto reversed = [den_deg](const Polynomial& p, int j) {
        return p.coeff(den_deg - j);
    };
    Complex a0 = reversed(r.denominator(), 0);

    std::vector<Complex> f(static_cast<size_t>(count));
    for (long long m = 0; m < count; ++m) {
        Complex acc = (m <= den_deg) ? reversed(r.numerator(), static_cast<int>(m)) : Complex(0.0);
        for (int i = 1; i <= den_deg && i <= m; ++i)
            acc -= reversed(r.denominator(), i) * f[static_cast<size_t>(m - i)];
        f[static_cast<size_t>(m)] = acc / a0;
    }

    std::vector<double> out(static_cast<size_t>(count));
    for (size_t i = 0; i < out.size(); ++i) out[i] = f[i].real();
    return out;
}

}  // namespace tavg
