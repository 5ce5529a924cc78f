#ifndef TAVG_CATALOG_HPP
#define TAVG_CATALOG_HPP

#include <vector>

#include "tavg/rational.hpp"
#include "tavg/signal.hpp"

namespace tavg {

/// Exact rational transform of the signal, built term by term from the
/// standard pairs (z/(z-p) for p^n, k!/(s-a)^(k+1) for t^k e^(at), with
/// the -z d/dz operator supplying the n^k factors). Periodic patterns go
/// through periodic_transform. Throws UnsupportedComposition for product
/// specs, which have no rational closed form in general.
RationalTransform transform_of(const SignalSpec& spec);

/// z-transform of the sequence repeating `pattern` from n = 0:
/// (sum_m x[m] z^-m) / (1 - z^-N), cleared to positive powers of z.
RationalTransform periodic_transform(const std::vector<double>& pattern);

/// First `count` coefficients of the z^-1 power series of r, by the long
/// division / difference-equation recursion implied by the denominator.
/// Throws ImproperTransform when the numerator degree exceeds the
/// denominator degree (no power series in z^-1 exists), WrongDomain for
/// s-domain input.
std::vector<double> coefficients_from_transform(const RationalTransform& r, long long count);

}  // namespace tavg

#endif
