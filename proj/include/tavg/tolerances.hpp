#ifndef TAVG_TOLERANCES_HPP
#define TAVG_TOLERANCES_HPP

namespace tavg {

/// Numerical knobs shared across the library. The defaults are tuned for
/// rational transforms of degree <= 20 with coefficients of order one;
/// callers with wilder inputs can pass their own instance down the stack.
struct Tolerances {
    // Root finding.
    double root_residual = 1e-10;  ///< relative residual target, |p(r)| <= tol * coeff scale
    double root_cluster = 1e-7;    ///< absolute merge distance for |root| <= 2
    int root_max_iter = 200;

    // Factor cancellation at a designated point (synthetic division).
    double reduce_vanish = 1e-9;  ///< |p(x0)| <= tol * sum_k |c_k||x0|^k counts as a root

    // Pole classification bands. Poles this close to the unit circle /
    // imaginary axis are treated as boundary poles so root-finding noise
    // cannot flip a verdict.
    double unit_circle_band = 1e-7;
    double imag_axis_band = 1e-9;

    // Quadrature of the running-average transforms.
    double quad_abs_err = 1e-8;

    // A valid average must be real up to this fraction of its magnitude.
    double verdict_imag = 1e-9;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace tavg

#endif
