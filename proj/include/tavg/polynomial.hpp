#ifndef TAVG_POLYNOMIAL_HPP
#define TAVG_POLYNOMIAL_HPP

#include <complex>
#include <vector>

#include "tavg/tolerances.hpp"

namespace tavg {

using Complex = std::complex<double>;

/// Dense univariate polynomial with complex coefficients, stored in
/// ascending degree. The zero polynomial is the empty coefficient list.
/// Instances are immutable after construction; all operations return
/// new values, so concurrent use needs no coordination.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial constant(Complex c);
    /// c * x^k
    static Polynomial monomial(int k, Complex c = Complex(1.0, 0.0));
    static Polynomial from_real(const std::vector<double>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k, zero beyond the degree.
    Complex coeff(int k) const;
    Complex leading() const;

    /// Horner-scheme evaluation.
    Complex eval(Complex x) const;
    /// Evaluates the polynomial and its first derivative in one pass.
    void eval_with_derivative(Complex x, Complex& value, Complex& deriv) const;

    double max_coeff_magnitude() const;
    /// sum_k |c_k| |x|^k — the natural backward-error scale for eval at x.
    double scale_at(Complex x) const;
    /// |p(x0)| <= tol * scale_at(x0). The zero polynomial vanishes everywhere.
    bool vanishes_at(Complex x0, double tol) const;

    Polynomial derivative() const;
    /// Quotient of synthetic division by (x - x0). The remainder p(x0) is
    /// discarded; callers decide beforehand (vanishes_at) whether x0 is a root.
    Polynomial deflate(Complex x0) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Complex s, const Polynomial& p);

  private:
    void normalize();

    std::vector<Complex> coeffs_;
};

struct PoleEntry {
    Complex location;
    int multiplicity = 1;
};

/// Clustered root/pole list. Locations are pairwise farther apart than the
/// clustering tolerance; multiplicities of a clustered group are summed.
struct PoleSet {
    std::vector<PoleEntry> poles;
    double tolerance_used = 0.0;

    int total_multiplicity() const;
    /// Largest multiplicity among poles within `band` of `at`, 0 if none.
    int multiplicity_at(Complex at, double band) const;
};

/// All complex roots of p with multiplicities. Runs Aberth-Ehrlich
/// simultaneous iteration and falls back to the companion-matrix
/// eigenvalues when the iteration stalls. Roots closer than `cluster_tol`
/// are merged with summed multiplicity.
///
/// Throws Error(NonConvergence) when neither stage meets the residual
/// target within the iteration budget, and Error(PreconditionViolation)
/// for degree < 1.
PoleSet roots(const Polynomial& p, double cluster_tol = default_tolerances().root_cluster,
              const Tolerances& tol = default_tolerances());

}  // namespace tavg

#endif
