#ifndef TAVG_RATIONAL_HPP
#define TAVG_RATIONAL_HPP

#include <string>

#include "tavg/polynomial.hpp"

namespace tavg {

/// Transform variable: Z for z-transforms of sequences, S for Laplace
/// transforms of time functions.
enum class Domain { Z, S };

const char* to_string(Domain d);

/// Ratio of two polynomials tagged with its transform domain. Immutable.
class RationalTransform {
  public:
    RationalTransform(Polynomial numerator, Polynomial denominator, Domain domain);

    static RationalTransform zero(Domain domain);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    Domain domain() const { return domain_; }
    bool is_zero() const { return num_.is_zero(); }

    /// numerator(x) / denominator(x). For very large |x| the ratio is
    /// evaluated through the reversed coefficients in 1/x, which avoids
    /// overflow of the intermediate Horner products.
    Complex eval(Complex x) const;

    RationalTransform operator-() const;
    friend RationalTransform operator+(const RationalTransform& a, const RationalTransform& b);
    friend RationalTransform operator-(const RationalTransform& a, const RationalTransform& b);
    friend RationalTransform operator*(const RationalTransform& a, const RationalTransform& b);
    friend RationalTransform operator*(Complex s, const RationalTransform& r);
    friend RationalTransform operator*(const Polynomial& p, const RationalTransform& r);

  private:
    Polynomial num_;
    Polynomial den_;
    Domain domain_;
};

struct ReduceResult {
    RationalTransform reduced;
    int cancelled = 0;
};

/// Deflates the factor (x - x0) from numerator and denominator as many
/// times as both vanish at x0, judged by |value| <= tol * coefficient
/// scale. Zero cancellations is a valid outcome. Afterwards x0 is a root
/// of at most one of numerator and denominator.
ReduceResult reduce_at_point(const RationalTransform& r, Complex x0,
                             double tol = default_tolerances().reduce_vanish);

/// Poles of r after cancelling every numerator/denominator common root:
/// each denominator root keeps multiplicity (denominator order) minus
/// (numerator vanishing order), dropped entirely when that is zero.
/// The zero transform has no poles.
PoleSet effective_poles(const RationalTransform& r, const Tolerances& tol = default_tolerances());

}  // namespace tavg

#endif
