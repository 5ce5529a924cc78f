#ifndef TAVG_QUADRATURE_HPP
#define TAVG_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace tavg {

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued
/// integrand over [a, b], bisecting the worst panel until the summed
/// error estimate meets `abs_tol` or the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, double abs_tol, int max_panels = 4096);

/// Integral over [a, infinity) via the substitution x = a + u/(1-u),
/// u in [0, 1). The integrand must decay at least like 1/x^2.
QuadratureResult integrate_to_infinity(const std::function<std::complex<double>(double)>& f,
                                       double a, double abs_tol, int max_panels = 4096);

}  // namespace tavg

#endif
