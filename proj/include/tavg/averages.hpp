#ifndef TAVG_AVERAGES_HPP
#define TAVG_AVERAGES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tavg/rational.hpp"

namespace tavg {

/// How the generalized final-value limit relates to a time average.
///
/// Applicable: the limit exists and equals the Cesaro time average.
/// FormalOnly: the algebraic limit exists but no time average does (the
///             classical final-value-theorem trap, e.g. z/(z-2)).
/// Divergent:  the limit itself is infinite (repeated pole at the limit
///             point); the running average grows without bound.
enum class Applicability { Applicable, FormalOnly, Divergent };

const char* to_string(Applicability a);

struct AverageVerdict {
    std::optional<double> value;          ///< the time average, present iff Applicable
    std::optional<Complex> formal_limit;  ///< raw lim (z-1)F(z) or lim sF(s), when finite
    Applicability applicability = Applicability::Divergent;
    PoleSet diagnostics;  ///< effective poles of the reduced transform
    std::vector<std::string> notes;
};

struct ApplicabilityReport {
    Applicability applicability = Applicability::Divergent;
    PoleSet poles;
    std::vector<std::string> notes;
};

/// Pole-geometry test behind the final-value classification, exposed so
/// front ends can explain verdicts. For rational transforms the theorem
/// hypotheses reduce to: every pole in the closed unit disk (closed left
/// half-plane), boundary poles simple, at most a simple pole at the limit
/// point z=1 (s=0).
ApplicabilityReport classify_applicability(const RationalTransform& F,
                                           const Tolerances& tol = default_tolerances());

/// lim_{z->1} (z-1)F(z) with applicability classification: forms (z-1)F,
/// cancels the common factor at z=1, evaluates, and inspects the pole
/// geometry. Throws WrongDomain unless F is a z-transform.
AverageVerdict final_value_z(const RationalTransform& F,
                             const Tolerances& tol = default_tolerances());

/// lim_{s->0} sF(s), the continuous-time analogue of final_value_z.
AverageVerdict final_value_s(const RationalTransform& F,
                             const Tolerances& tol = default_tolerances());

/// Mean of one period: (sum of pattern)/N. Agrees with
/// final_value_z(periodic_transform(pattern)) by construction.
double periodic_average(const std::vector<double>& pattern);

/// G(z), the z-transform of the running average g[n] = (1/(n+1)) sum x[k],
/// by numeric quadrature of z * integral_z^inf X(xi)/(xi (xi-1)) dxi.
/// (With the (n+1) normalization the transform integrand carries the extra
/// 1/xi, which also makes the improper integral converge when x[0] != 0.)
/// Requires z > 1 and every pole of X inside |p| < z; throws PoleOnPath /
/// QuadratureFailure otherwise.
Complex running_average_transform_z(const RationalTransform& X, double z,
                                    const Tolerances& tol = default_tolerances());

/// Transform of the running time average (1/t) integral_0^t f: numeric
/// quadrature of integral_s^inf F(zeta)/zeta dzeta. Requires s > 0 and
/// every pole of F with real part < s.
Complex running_average_transform_s(const RationalTransform& F, double s,
                                    const Tolerances& tol = default_tolerances());

enum class Stability { Stable, Marginal, Unstable };

const char* to_string(Stability s);

/// LTI system wrapper: transfer function plus cached pole/stability data.
class LtiSystem {
  public:
    explicit LtiSystem(RationalTransform transfer, const Tolerances& tol = default_tolerances());

    const RationalTransform& transfer() const { return transfer_; }
    Stability stability() const { return stability_; }
    const PoleSet& poles() const { return poles_; }
    Domain domain() const { return transfer_.domain(); }

    /// H(1) for z-domain systems, H(0) for s-domain systems, evaluated on
    /// the reduced transform. Throws PoleAtOne / PoleAtZero when the
    /// reduced denominator still vanishes there.
    Complex dc_gain(const Tolerances& tol = default_tolerances()) const;

  private:
    RationalTransform transfer_;
    PoleSet poles_;
    Stability stability_;
};

/// Output average of a stable z-domain system: H(1) * x_avg.
/// Throws UnstableSystem unless the system is strictly stable (marginal
/// systems are rejected too), WrongDomain for s-domain input.
double system_average_z(const LtiSystem& H, double x_avg,
                        const Tolerances& tol = default_tolerances());

/// Output average of a stable s-domain system: H(0) * x_avg.
double system_average_s(const LtiSystem& H, double x_avg,
                        const Tolerances& tol = default_tolerances());

/// Time average of the product sequence f[n]g[n] from the transforms alone:
/// lim_{z->1+} (z-1) (1/2*pi*j) contour-integral F(zeta) G(z/zeta) dzeta/zeta,
/// realized by trapezoid quadrature on a circle separating the pole sets,
/// at z = 1+delta for delta in {1e-1, 1e-2, 1e-3}, Richardson-extrapolated
/// to delta = 0. radius <= 0 selects the geometric-mean radius per delta;
/// points <= 0 selects the point count from delta.
double product_average(const RationalTransform& F, const RationalTransform& G, double radius = 0.0,
                       int points = 0, const Tolerances& tol = default_tolerances());

}  // namespace tavg

#endif
