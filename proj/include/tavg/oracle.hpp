#ifndef TAVG_ORACLE_HPP
#define TAVG_ORACLE_HPP

#include <utility>
#include <vector>

#include "tavg/rational.hpp"
#include "tavg/signal.hpp"

namespace tavg {

/// Running-average trace sampled at dyadic checkpoints, with an honest
/// two-checkpoint error estimate and a growth-based divergence flag.
struct RunningAverageTrace {
    /// (index n or time t, running average there), strictly increasing.
    std::vector<std::pair<double, double>> samples;
    double final_estimate = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    double horizon = 0.0;  ///< sample count (discrete) or t_max (continuous)
};

/// Cesaro running means g[n] = (1/(n+1)) sum_{k=0}^{n} x[k] of the given
/// samples, accumulated with compensated summation. The estimate is
/// declared non-convergent when the checkpoint means grow monotonically
/// by more than 10% across three consecutive dyadic checkpoints.
RunningAverageTrace cesaro_discrete(const std::vector<double>& samples);

/// Running time average (1/t) integral_0^t f by composite trapezoid over
/// the sampled signal; the discretization error is bounded from a dt vs
/// dt/2 comparison and folded into error_estimate. Requires t_max >=
/// 100*dt and at least 20 samples per shortest oscillation period
/// (throws UnderResolved otherwise).
RunningAverageTrace cesaro_continuous(const SignalSpec& spec, double t_max, double dt);

/// Response of the system H to the input samples, by the difference
/// equation the denominator implies (a0 y[n] = sum b_j x[n-j] - sum a_j
/// y[n-j] in z^-1 coefficients). Requires a z-domain transform with
/// numerator degree <= denominator degree.
std::vector<double> difference_equation_response(const RationalTransform& H,
                                                 const std::vector<double>& x);

/// Cesaro trace of y = h * x (discrete convolution), for validating the
/// system-average theorem. Uses truncated direct summation while the
/// impulse-response tail allows it and the difference-equation recursion
/// of the transfer denominator otherwise. h must be a term spec with all
/// |bases| < 1 (throws UnstableImpulseResponse).
RunningAverageTrace convolve_and_average(const SignalSpec& h_spec, const SignalSpec& x_spec,
                                         long long horizon);

struct EquivalenceReport {
    RunningAverageTrace product;  ///< trace of (1 + x1) * x2
    RunningAverageTrace base;     ///< trace of x2
    double difference = 0.0;
    bool passes = false;
};

/// Checks that x = (1 + x1) x2 and x2 share a Cesaro mean when x1 decays:
/// computes both means and passes when their difference lies within the
/// combined error estimates. x1 must be a term spec with all |bases| < 1.
EquivalenceReport asymptotic_equivalence_check(const SignalSpec& x1_spec,
                                               const SignalSpec& x2_spec, long long horizon);

}  // namespace tavg

#endif
